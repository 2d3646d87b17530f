// Brute-force ground truth for faces of conv{0, e_i - e_j : (i,j) in G},
// straight from the definition of a face: a subset S of the vertices spans a
// face iff some hyperplane c.x = c0 contains S and leaves every other vertex
// strictly on the positive side. Decided by an exact linear program.

#ifndef ROOTFACE_HULL_ORACLE_HPP
#define ROOTFACE_HULL_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rootface/error.hpp"
#include "rootface/graph.hpp"
#include "rootface/rational.hpp"
#include "rootface/simplex.hpp"

namespace rootface {

using Point = std::vector<int>;

/// Vertices of the root polytope: optionally the origin (always index 0 when
/// present), then e_s - e_t for each edge in edge-index order.
struct VertexSet {
  int dimension = 0;
  bool has_origin = false;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }

  /// Index of the vertex for edge i of the source graph.
  std::size_t edge_vertex(std::size_t edge_index) const { return edge_index + (has_origin ? 1 : 0); }

  std::optional<std::size_t> find(const Point& p) const {
    const auto it = std::find(points.begin(), points.end(), p);
    if (it == points.end()) return std::nullopt;
    return static_cast<std::size_t>(it - points.begin());
  }
};

inline VertexSet root_vertices(const Digraph& g, bool with_origin = true) {
  VertexSet vs;
  vs.dimension = g.vertex_count();
  vs.has_origin = with_origin;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (with_origin) vs.points.emplace_back(n, 0);
  for (const auto& e : g.edges()) {
    Point p(n, 0);
    p[static_cast<std::size_t>(e.source - 1)] = 1;
    p[static_cast<std::size_t>(e.target - 1)] = -1;
    vs.points.push_back(std::move(p));
  }
  return vs;
}

/// Outcome of the separation LP for one vertex subset.
struct FaceTest {
  bool is_face = false;
  /// The optimal hyperplane (present whenever the LP was solved).
  std::optional<std::vector<Rational>> c;
  Rational c0;
  Rational margin;  // optimal separation delta
};

namespace detail {

inline FaceTest separate(const VertexSet& vs, std::span<const char> in_subset) {
  // Variables: y_1..y_n in [0,2] with c_i = y_i - 1, then p, q >= 0 with
  // c0 = p - q, then delta in [0,1]. Every point has coordinate sum 0, so
  // c.v = y.v.
  const auto n = static_cast<std::size_t>(vs.dimension);
  const std::size_t p = n;
  const std::size_t q = n + 1;
  const std::size_t delta = n + 2;
  LinearProgram lp;
  lp.variable_count = n + 3;
  lp.objective.assign(lp.variable_count, Rational(0));
  lp.objective[delta] = Rational(1);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    Constraint row;
    row.coefficients.assign(lp.variable_count, Rational(0));
    for (std::size_t i = 0; i < n; ++i) row.coefficients[i] = Rational(vs.points[k][i]);
    row.coefficients[p] = Rational(-1);
    row.coefficients[q] = Rational(1);
    if (in_subset[k]) {
      row.relation = Relation::Equal;
    } else {
      row.coefficients[delta] = Rational(-1);
      row.relation = Relation::GreaterEqual;
    }
    row.rhs = Rational(0);
    lp.constraints.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Constraint box;
    box.coefficients.assign(lp.variable_count, Rational(0));
    box.coefficients[i] = Rational(1);
    box.rhs = Rational(2);
    lp.constraints.push_back(std::move(box));
  }
  Constraint cap;
  cap.coefficients.assign(lp.variable_count, Rational(0));
  cap.coefficients[delta] = Rational(1);
  cap.rhs = Rational(1);
  lp.constraints.push_back(std::move(cap));

  const auto solution = solve(lp);
  FaceTest test;
  if (solution.status != LpStatus::Optimal) return test;  // c = 0, c0 = 0 is always feasible
  test.margin = solution.value;
  test.is_face = solution.value.sign() > 0;
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = solution.x[i] - Rational(1);
  test.c = std::move(c);
  test.c0 = solution.x[p] - solution.x[q];
  return test;
}

}  // namespace detail

/// Decides whether the vertex subset (membership flags over vs.points) spans
/// a face. The empty subset and the full vertex set count as faces.
inline FaceTest test_face_bruteforce(const VertexSet& vs, std::span<const char> in_subset) {
  if (in_subset.size() != vs.size()) throw Error(ErrorCode::NotASubsetOfVertices, "membership size mismatch");
  const auto selected = std::count_if(in_subset.begin(), in_subset.end(), [](char x) { return x != 0; });
  if (selected == 0 || static_cast<std::size_t>(selected) == vs.size()) {
    FaceTest trivial = detail::separate(vs, in_subset);
    trivial.is_face = true;
    return trivial;
  }
  return detail::separate(vs, in_subset);
}

inline bool is_face_bruteforce(const VertexSet& vs, std::span<const char> in_subset) {
  return test_face_bruteforce(vs, in_subset).is_face;
}

/// Subset given by points; each must be a vertex of the polytope.
inline bool is_face_bruteforce(const Digraph& g, std::span<const Point> subset) {
  const auto vs = root_vertices(g, true);
  std::vector<char> in(vs.size(), 0);
  for (const auto& point : subset) {
    const auto k = vs.find(point);
    if (!k) throw Error(ErrorCode::NotASubsetOfVertices, "point is not a vertex of the root polytope");
    in[*k] = 1;
  }
  return is_face_bruteforce(vs, in);
}

inline std::vector<char> membership_from_mask(std::size_t size, std::uint64_t mask) {
  std::vector<char> in(size, 0);
  for (std::size_t k = 0; k < size; ++k) in[k] = static_cast<char>((mask >> k) & 1U);
  return in;
}

/// Rank of {v - v_0} over the rationals; -1 for an empty set.
inline int affine_dimension(std::span<const Point> points) {
  if (points.empty()) return -1;
  const auto dim = points.front().size();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 1; k < points.size(); ++k) {
    std::vector<Rational> row(dim);
    for (std::size_t i = 0; i < dim; ++i) row[i] = Rational(points[k][i] - points[0][i]);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < dim && pivot_row < rows.size(); ++col) {
    std::optional<std::size_t> found;
    for (std::size_t r = pivot_row; r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) {
        found = r;
        break;
      }
    }
    if (!found) continue;
    std::swap(rows[pivot_row], rows[*found]);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col] / rows[pivot_row][col];
      for (std::size_t i = col; i < dim; ++i) rows[r][i] -= factor * rows[pivot_row][i];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

inline int affine_dimension(const VertexSet& vs, std::span<const char> in_subset) {
  std::vector<Point> chosen;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (in_subset[k]) chosen.push_back(vs.points[k]);
  }
  return affine_dimension(chosen);
}

struct BruteForceFace {
  std::uint64_t vertices = 0;  // bit k = vs.points[k]
  int dimension = 0;
};

struct BruteForceLattice {
  VertexSet vertex_set;
  int polytope_dimension = 0;
  /// Every nonempty face, the improper one included, sorted by
  /// (dimension, vertex mask).
  std::vector<BruteForceFace> faces;

  std::vector<const BruteForceFace*> facets() const {
    std::vector<const BruteForceFace*> out;
    for (const auto& f : faces) {
      if (f.dimension == polytope_dimension - 1) out.push_back(&f);
    }
    return out;
  }
};

inline constexpr std::size_t kDefaultBruteForceVertexCap = 16;

/// Applies the LP to every nonempty vertex subset.
inline BruteForceLattice enumerate_faces_bruteforce(const Digraph& g,
                                                    std::size_t vertex_cap = kDefaultBruteForceVertexCap) {
  BruteForceLattice lattice;
  lattice.vertex_set = root_vertices(g, true);
  const auto count = lattice.vertex_set.size();
  if (count > vertex_cap || count > 63) {
    throw Error(ErrorCode::TooLarge, std::to_string(count) + " vertices exceed the cap of " +
                                         std::to_string(std::min<std::size_t>(vertex_cap, 63)));
  }
  const std::vector<char> all(count, 1);
  lattice.polytope_dimension = affine_dimension(lattice.vertex_set, all);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
    const auto in = membership_from_mask(count, mask);
    if (!is_face_bruteforce(lattice.vertex_set, in)) continue;
    lattice.faces.push_back({mask, affine_dimension(lattice.vertex_set, in)});
  }
  std::sort(lattice.faces.begin(), lattice.faces.end(), [](const BruteForceFace& a, const BruteForceFace& b) {
    return a.dimension != b.dimension ? a.dimension < b.dimension : a.vertices < b.vertices;
  });
  return lattice;
}

}  // namespace rootface

#endif  // ROOTFACE_HULL_ORACLE_HPP
