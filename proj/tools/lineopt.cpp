#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lineopt/characterize.hpp"
#include "lineopt/families.hpp"
#include "lineopt/graph_io.hpp"
#include "lineopt/line_graph.hpp"
#include "lineopt/spectra.hpp"
#include "lineopt/verify.hpp"

using namespace lineopt;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct GraphSource {
  std::string g6;
  std::string edges;
  bool from_stdin = false;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--g6", g6, "graph6 string");
    auto* b = cmd->add_option("--edges", edges, "edge-list file")->check(CLI::ExistingFile);
    auto* c = cmd->add_flag("--stdin", from_stdin, "read graph6, edge list or JSON from standard input");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  Graph read() const {
    if (!g6.empty()) return parse_graph6(g6);
    if (!edges.empty()) {
      std::ifstream in(edges);
      return parse_any(std::string(std::istreambuf_iterator<char>(in), {}));
    }
    if (from_stdin) return parse_any(std::string(std::istreambuf_iterator<char>(std::cin), {}));
    throw CLI::ValidationError("input", "one of --g6, --edges or --stdin is required");
  }
};

AlgebraicEigenvalue parse_lambda(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw Error(ErrorCode::ParseError, "lambda must be written a/b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const auto a = std::stoul(text.substr(0, slash), &used_a);
    const auto b = std::stoul(text.substr(slash + 1), &used_b);
    if (used_a != slash || used_b != text.size() - slash - 1) throw std::invalid_argument(text);
    return AlgebraicEigenvalue(static_cast<unsigned>(a), static_cast<unsigned>(b));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "lambda must be written a/b, got " + text);
  }
}

json lambda_json(const AlgebraicEigenvalue& l) { return {{"a", l.a()}, {"b", l.b()}, {"approx", l.value()}}; }

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

int cmd_linegraph(const Graph& g) {
  const auto map = line_graph(g);
  json vertex_to_edge = json::array();
  for (EdgeId e : map.vertex_to_edge) vertex_to_edge.push_back({map.base.edge(e).u, map.base.edge(e).v});
  emit({{"base", to_json(map.base)},
        {"line", to_json(map.line)},
        {"edge_to_vertex", map.edge_to_vertex},
        {"vertex_to_edge", vertex_to_edge}});
  return kPass;
}

int cmd_mult(const Graph& g, const AlgebraicEigenvalue& l) {
  const Graph lg = line_graph(g).line;
  json out{{"graph6", to_graph6(g)},
           {"lambda", lambda_json(l)},
           {"multiplicity", multiplicity(lg, l)},
           {"minimal_polynomial", to_json(trig_min_poly(l))}};
  if (is_connected(g) && g.order() > 0 && !is_cycle(g))
    out["bound"] = 2 * cyclomatic_number(g) + pendant_count(g) - 1;
  else
    out["bound"] = nullptr;
  emit(out);
  return kPass;
}

int cmd_check(const Graph& g, const AlgebraicEigenvalue& l, Mutation mutation) {
  const auto cert = Recognizer(g, mutation).certify(l);
  json out = to_json(cert);
  out["graph6"] = to_graph6(g);
  emit(out);
  return cert.optimal() ? kPass : kFail;
}

CaseTag parse_case(const std::string& name) {
  for (CaseTag t : {CaseTag::PathCase, CaseTag::TreeCase, CaseTag::AttachedCycles, CaseTag::TwoCyclesEdge,
                    CaseTag::ManyCycles})
    if (name == to_string(t)) return t;
  throw Error(ErrorCode::ParseError, "unknown case " + name);
}

Mutation parse_mutation(const std::string& name) {
  for (Mutation m : {Mutation::None, Mutation::PathModulus, Mutation::TreeCongruence, Mutation::CycleModulus})
    if (name == to_string(m)) return m;
  throw Error(ErrorCode::ParseError, "unknown mutation " + name);
}

int cmd_gen(const std::string& spec_text, const std::string& case_name, std::uint64_t seed) {
  FamilySpec spec;
  if (!spec_text.empty()) {
    std::string body = spec_text;
    if (body.front() == '@') {
      std::ifstream in(body.substr(1));
      if (!in) throw Error(ErrorCode::ParseError, "cannot open " + body.substr(1));
      body.assign(std::istreambuf_iterator<char>(in), {});
    }
    json j;
    try {
      j = json::parse(body);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    spec = family_spec_from_json(j);
  } else if (!case_name.empty()) {
    spec = random_family_spec(parse_case(case_name), seed);
  } else {
    throw CLI::ValidationError("gen", "one of --spec or --case is required");
  }
  const Graph g = generate(spec);
  emit({{"spec", to_json(spec)}, {"graph6", to_graph6(g)}, {"graph", to_json(g)}});
  return kPass;
}

struct VerifyArgs {
  std::size_t max_n = 7;
  bool lemmas = false;
  bool oracles = false;
  bool from_stdin = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t workers = 0;
  std::string mutation = "none";
  bool table = false;
};

int cmd_verify(const VerifyArgs& args) {
  VerifyOptions opts;
  opts.mutation = parse_mutation(args.mutation);
  opts.oracles = args.oracles;
  opts.workers = args.workers;
  VerificationReport report;
  if (args.from_stdin) {
    report = verify_graphs(read_graph6_lines(std::cin), opts);
  } else {
    if (args.max_n < 2) throw Error(ErrorCode::InvalidParameter, "--max-n must be at least 2");
    report = verify_main_theorem(args.max_n, opts);
  }
  if (args.lemmas) {
    LemmaOptions lo;
    lo.max_n = args.max_n;
    lo.samples = args.samples;
    lo.seed = args.seed;
    lo.workers = args.workers;
    auto lemmas = verify_lemmas(lo);
    const double total = report.elapsed_seconds + lemmas.elapsed_seconds;
    report.absorb(std::move(lemmas));
    report.elapsed_seconds = total;
  }
  if (args.table)
    std::cout << summary_table(report);
  else
    emit(to_json(report));
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-graph eigenvalue multiplicity toolkit"};
  app.require_subcommand(1);

  GraphSource lg_src, mult_src, check_src;
  std::string lambda_text;
  std::string check_mutation = "none";

  auto* linegraph = app.add_subcommand("linegraph", "emit L(G) and the edge/vertex correspondence");
  lg_src.attach(linegraph);

  auto* mult = app.add_subcommand("mult", "exact multiplicity of 2cos(a pi/b) in L(G)");
  mult_src.attach(mult);
  mult->add_option("--lambda", lambda_text, "a/b")->required();

  auto* check = app.add_subcommand("check", "decide whether L(G) attains 2c+p-1 at lambda");
  check_src.attach(check);
  check->add_option("--lambda", lambda_text, "a/b")->required();
  check->add_option("--mutation", check_mutation, "recognizer self-test variant");

  std::string spec_text, case_name;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "build an extremal graph from a family spec");
  gen->add_option("--spec", spec_text, "spec JSON, or @file");
  gen->add_option("--case", case_name, "random spec for this case tag");
  gen->add_option("--seed", gen_seed, "seed for --case");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "exhaustive checks of the bound and the characterization");
  verify->add_option("--max-n", vargs.max_n, "largest vertex count enumerated");
  verify->add_flag("--lemmas", vargs.lemmas, "also run the lemma suite");
  verify->add_flag("--oracles", vargs.oracles, "compare polynomial, nullity and numeric multiplicities");
  verify->add_flag("--stdin", vargs.from_stdin, "verify graph6 lines from standard input instead");
  verify->add_option("--samples", vargs.samples, "random composites per lemma");
  verify->add_option("--seed", vargs.seed, "seed for composites");
  verify->add_option("--workers", vargs.workers, "worker threads (default: LINEOPT_WORKERS or all cores)");
  verify->add_option("--mutation", vargs.mutation, "none, path-modulus, tree-congruence or cycle-modulus");
  auto* as_json = verify->add_flag("--json", "JSON report (default)");
  verify->add_flag("--table", vargs.table, "summary table")->excludes(as_json);

  try {
    app.parse(argc, argv);
    if (linegraph->parsed()) return cmd_linegraph(lg_src.read());
    if (mult->parsed()) return cmd_mult(mult_src.read(), parse_lambda(lambda_text));
    if (check->parsed()) return cmd_check(check_src.read(), parse_lambda(lambda_text), parse_mutation(check_mutation));
    if (gen->parsed()) return cmd_gen(spec_text, case_name, gen_seed);
    if (verify->parsed()) return cmd_verify(vargs);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
