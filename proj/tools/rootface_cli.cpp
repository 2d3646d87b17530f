// rootface: face queries, certificates, enumeration and cross-verification
// for root polytopes of directed acyclic graphs.
//
// Exit codes: 0 success / face, 1 not a face / verification failure,
// 2 input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "rootface/rootface.hpp"

namespace {

using namespace rootface;

constexpr int kExitNotFace = 1;
constexpr int kExitInputError = 2;

Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  return read_digraph(in);
}

Subgraph load_subgraph(const std::string& path, const Digraph& parent) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  return read_subgraph(in, parent);
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
  std::string graph_file;
  std::string sub_file;
  bool with_origin = true;
  bool json = false;
  std::size_t max_edges = kDefaultEdgeCap;
  bool include_trivial = false;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  int n = 0;
  bool kn_fvector = false;
  bool tilde_only = false;
  bool q_only = false;
  std::string mode = "oracle";
  std::vector<std::uint64_t> random;
};

void add_origin_flags(CLI::App* cmd, Options& opt) {
  auto* with = cmd->add_flag("--with-origin", "Ask about conv{0, e_i - e_j : (i,j) in H} (default)");
  auto* without = cmd->add_flag_callback("--without-origin", [&opt] { opt.with_origin = false; },
                                         "Ask about conv{e_i - e_j : (i,j) in H}");
  with->excludes(without);
}

int cmd_check(const Options& opt) {
  const auto g = load_graph(opt.graph_file);
  const auto h = load_subgraph(opt.sub_file, g);
  const auto result = run_query(g, h, opt.with_origin);
  print(to_json(g, h, result));
  return result.answer ? 0 : kExitNotFace;
}

int cmd_cert(const Options& opt) {
  const auto g = load_graph(opt.graph_file);
  const auto h = load_subgraph(opt.sub_file, g);
  const auto result = run_query(g, h, opt.with_origin);
  if (!result.answer) {
    std::cerr << "not a face: " << to_json(g, *result.diagnostic).dump() << '\n';
    return kExitNotFace;
  }
  print(to_json(*result.certificate));
  return 0;
}

int cmd_enumerate(const Options& opt) {
  const auto g = load_graph(opt.graph_file);
  const auto faces = enumerate_faces(g, opt.max_edges, opt.jobs);
  std::vector<FaceDescriptor> listed;
  for (const auto& f : faces) {
    if (f.is_empty() && !opt.include_trivial) continue;
    listed.push_back(f);
  }
  print(faces_to_json(listed, fvector_of(faces, opt.include_trivial)));
  return 0;
}

int cmd_kn(const Options& opt) {
  const KnPart part = opt.tilde_only ? KnPart::Tilde : opt.q_only ? KnPart::Q : KnPart::Both;
  if (opt.kn_fvector) {
    print(to_json(kn_fvector(opt.n, part, opt.include_trivial)));
    return 0;
  }
  Json out{{"n", opt.n}};
  if (part != KnPart::Q) {
    Json list = Json::array();
    const auto family = kn_tilde_faces(opt.n);
    for (const auto& h : family.members) list.push_back(edges_to_json(h.edges()));
    out["tilde_faces"] = std::move(list);
  }
  if (part != KnPart::Tilde) {
    Json list = Json::array();
    const auto family = kn_q_faces(opt.n);
    for (const auto& h : family.members) list.push_back(edges_to_json(h.edges()));
    out["q_faces"] = std::move(list);
  }
  print(out);
  return 0;
}

int cmd_fvector(const Options& opt) {
  const auto g = load_graph(opt.graph_file);
  Json out = Json::object();
  auto emit = [&](const char* key, const FVector& fv) {
    out[key] = to_json(fv);
    out["includes_empty"] = fv.includes_empty;
    out["includes_improper"] = fv.includes_improper;
  };
  if (opt.mode == "oracle" || opt.mode == "both") {
    emit("fvector", fvector(g, FVectorMode::Oracle, opt.include_trivial, opt.max_edges, opt.jobs));
  }
  if (opt.mode == "bruteforce" || opt.mode == "both") {
    emit(opt.mode == "both" ? "fvector_bruteforce" : "fvector",
         fvector(g, FVectorMode::BruteForce, opt.include_trivial, opt.max_edges, opt.jobs));
  }
  if (opt.mode == "both") out["agree"] = out["fvector"] == out["fvector_bruteforce"];
  print(out);
  return opt.mode == "both" && !out["agree"].get<bool>() ? kExitNotFace : 0;
}

Json mismatch_to_json(const Mismatch& m) {
  return Json{{"n", m.n},
              {"graph", edges_to_json(m.graph)},
              {"subgraph", edges_to_json(m.subgraph)},
              {"with_origin", m.with_origin},
              {"combinatorial", m.combinatorial},
              {"bruteforce", m.bruteforce}};
}

int cmd_verify(const Options& opt) {
  VerifyReport report;
  std::optional<std::uint64_t> seed;
  if (!opt.random.empty()) {
    const auto n = static_cast<int>(opt.random[0]);
    const auto max_edges = static_cast<std::size_t>(opt.random[1]);
    seed = opt.random.size() == 4 ? opt.random[2] : opt.seed;
    const auto count = opt.random.back();
    std::mt19937_64 rng(*seed);
    for (std::uint64_t i = 0; i < count; ++i) report.merge(verify_graph(random_dag(n, max_edges, rng), opt.jobs));
  } else {
    if (opt.graph_file.empty()) throw Error(ErrorCode::MalformedInput, "verify needs a graph file or --random");
    report = verify_graph(load_graph(opt.graph_file), opt.jobs, opt.max_edges);
  }
  if (opt.json) {
    Json out{{"graphs", report.graphs},
             {"checks", report.checks},
             {"certificates", report.certificates},
             {"disagreements", report.disagreements.size()},
             {"certificate_failures", report.certificate_failures.size()}};
    if (seed) out["seed"] = *seed;
    if (const auto repro = report.minimal_reproducer()) out["reproducer"] = mismatch_to_json(*repro);
    print(out);
  } else {
    if (seed) std::cout << "seed " << *seed << ", " << report.graphs << " graphs\n";
    std::cout << report.checks << " checks, " << report.disagreements.size() << " disagreements\n";
    std::cout << report.certificates << " certificates, " << report.certificate_failures.size() << " failed\n";
    if (const auto repro = report.minimal_reproducer()) {
      std::cout << "minimal reproducer: " << mismatch_to_json(*repro).dump() << '\n';
    }
  }
  return report.ok() ? 0 : kExitNotFace;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faces of root polytopes of directed acyclic graphs"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "JSON report (verify); other commands always print JSON");
    cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  auto* check = app.add_subcommand("check", "Decide whether a subgraph spans a face");
  check->add_option("graph", opt.graph_file, "Edge-list file of G")->required()->check(CLI::ExistingFile);
  check->add_option("subgraph", opt.sub_file, "Edge-list file of H")->required()->check(CLI::ExistingFile);
  add_origin_flags(check, opt);
  common(check);

  auto* cert = app.add_subcommand("cert", "Print a supporting hyperplane for a face");
  cert->add_option("graph", opt.graph_file, "Edge-list file of G")->required()->check(CLI::ExistingFile);
  cert->add_option("subgraph", opt.sub_file, "Edge-list file of H")->required()->check(CLI::ExistingFile);
  add_origin_flags(cert, opt);
  common(cert);

  auto* enumerate = app.add_subcommand("enumerate", "List every face with its dimension");
  enumerate->add_option("graph", opt.graph_file, "Edge-list file of G")->required()->check(CLI::ExistingFile);
  enumerate->add_option("--max-edges", opt.max_edges, "Refuse graphs with more edges");
  enumerate->add_flag("--include-trivial-faces", opt.include_trivial, "Count the empty face and the polytope");
  common(enumerate);

  auto* kn = app.add_subcommand("kn", "Faces of the complete graph K_n from closed-form generators");
  kn->add_option("n", opt.n, "Number of vertices")->required()->check(CLI::Range(1, 16));
  kn->add_flag("--fvector", opt.kn_fvector, "Print face counts by dimension");
  auto* tilde_only = kn->add_flag("--tilde-only", opt.tilde_only, "Only faces containing the origin");
  auto* q_only = kn->add_flag("--q-only", opt.q_only, "Only faces avoiding the origin");
  tilde_only->excludes(q_only);
  kn->add_flag("--include-trivial-faces", opt.include_trivial, "Count the empty face and the polytope");
  common(kn);

  auto* fv = app.add_subcommand("fvector", "Face counts by dimension");
  fv->add_option("graph", opt.graph_file, "Edge-list file of G")->required()->check(CLI::ExistingFile);
  fv->add_option("--mode", opt.mode, "oracle, bruteforce or both")
      ->check(CLI::IsMember({"oracle", "bruteforce", "both"}));
  fv->add_option("--max-edges", opt.max_edges, "Refuse graphs with more edges");
  fv->add_flag("--include-trivial-faces", opt.include_trivial, "Count the empty face and the polytope");
  common(fv);

  auto* verify = app.add_subcommand("verify", "Cross-check the face tests against the hull LP");
  verify->add_option("graph", opt.graph_file, "Edge-list file of G")->check(CLI::ExistingFile);
  verify->add_option("--random", opt.random, "N MAX_EDGES [SEED] COUNT: seeded random DAGs")->expected(3, 4);
  verify->add_option("--seed", opt.seed, "Seed for --random when not given inline");
  verify->add_option("--max-edges", opt.max_edges, "Refuse graphs with more edges");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    if (*check) return cmd_check(opt);
    if (*cert) return cmd_cert(opt);
    if (*enumerate) return cmd_enumerate(opt);
    if (*kn) return cmd_kn(opt);
    if (*fv) return cmd_fvector(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
