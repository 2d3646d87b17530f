// Single face queries with a certificate on success and a checkable witness
// on failure, plus the JSON encodings used by the command-line tool.

#ifndef ROOTFACE_QUERY_HPP
#define ROOTFACE_QUERY_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rootface/certificate.hpp"
#include "rootface/enumeration.hpp"
#include "rootface/face_oracle.hpp"
#include "rootface/graph.hpp"
#include "rootface/rational.hpp"

namespace rootface {

using Json = nlohmann::ordered_json;

/// Loop or directed cycle of H_comp blocking a face through the origin.
struct TildeObstruction {
  HCompCycle cycle;
};

using Diagnostic = std::variant<TildeObstruction, LabelConflict, AdmissibilityViolation>;

struct QueryResult {
  bool with_origin = false;
  bool answer = false;
  std::optional<Certificate> certificate;
  std::optional<Diagnostic> diagnostic;
};

inline QueryResult run_query(const Digraph& g, const Subgraph& h, bool with_origin) {
  QueryResult result;
  result.with_origin = with_origin;
  if (with_origin) {
    if (auto cycle = find_hcomp_cycle(build_hcomp(g, h))) {
      result.diagnostic = TildeObstruction{std::move(*cycle)};
    } else {
      result.answer = true;
      result.certificate = tilde_certificate(g, h);
    }
    return result;
  }
  if (auto obstruction = find_q_face_obstruction(g, h)) {
    std::visit([&](auto&& o) { result.diagnostic = Diagnostic{o}; }, *obstruction);
  } else {
    result.answer = true;
    result.certificate = q_certificate(g, h);
  }
  return result;
}

// ---------------------------------------------------------------------------
// JSON.

inline Json edge_to_json(const Edge& e) { return Json::array({e.source, e.target}); }

inline Json edges_to_json(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(edge_to_json(e));
  return out;
}

inline Json labels_to_json(const Digraph& g, std::span<const std::size_t> labels) {
  Json out = Json::array();
  for (const auto l : labels) out.push_back(edge_to_json(g.edge(l)));
  return out;
}

inline Json to_json(const Certificate& cert) {
  Json c = Json::array();
  for (const auto& x : cert.c) c.push_back(x.to_string());
  return Json{{"c", std::move(c)}, {"c0", cert.c0.to_string()}};
}

inline Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  for (const auto& x : j.at("c")) cert.c.push_back(Rational::parse(x.get<std::string>()));
  cert.c0 = Rational::parse(j.at("c0").get<std::string>());
  return cert;
}

inline Json to_json(const Digraph& g, const Diagnostic& diagnostic) {
  struct Encoder {
    const Digraph& g;
    Json operator()(const TildeObstruction& o) const {
      const bool loop = o.cycle.labels.size() == 1;
      return Json{{"kind", loop ? "hcomp_loop" : "hcomp_cycle"}, {"edges", labels_to_json(g, o.cycle.labels)}};
    }
    Json operator()(const LabelConflict& c) const {
      return Json{{"kind", "path_consistency_conflict"},
                  {"vertex", c.vertex},
                  {"labels", Json::array({c.first_label, c.second_label})},
                  {"edge", edge_to_json(g.edge(c.edge))}};
    }
    Json operator()(const AdmissibilityViolation& v) const {
      return Json{{"kind", "admissibility_cycle"},
                  {"edges", labels_to_json(g, v.labels)},
                  {"length", v.labels.size()},
                  {"wd_total", v.weight_decrease_total}};
    }
  };
  return std::visit(Encoder{g}, diagnostic);
}

inline Json to_json(const Digraph& g, const Subgraph& h, const QueryResult& r) {
  Json out{{"query", r.with_origin ? "with_origin" : "without_origin"},
           {"subgraph", edges_to_json(h.edges())},
           {"face", r.answer}};
  if (r.answer && !r.with_origin && h.size() == 0) out["note"] = "empty face";
  if (r.certificate) out["certificate"] = to_json(*r.certificate);
  if (r.diagnostic) out["diagnostic"] = to_json(g, *r.diagnostic);
  return out;
}

inline Json to_json(const FVector& fv) {
  Json counts = Json::object();
  for (const auto& [dim, count] : fv.counts) counts[std::to_string(dim)] = count;
  return counts;
}

inline Json to_json(const FaceDescriptor& f) {
  return Json{{"edges", edges_to_json(f.subgraph.edges())}, {"origin", f.contains_origin}, {"dim", f.dimension}};
}

inline Json faces_to_json(std::span<const FaceDescriptor> faces, const FVector& fv) {
  Json list = Json::array();
  for (const auto& f : faces) list.push_back(to_json(f));
  return Json{{"faces", std::move(list)},
              {"fvector", to_json(fv)},
              {"includes_empty", fv.includes_empty},
              {"includes_improper", fv.includes_improper}};
}

}  // namespace rootface

#endif  // ROOTFACE_QUERY_HPP
