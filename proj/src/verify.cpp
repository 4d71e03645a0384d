#include "lineopt/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "lineopt/enumerate.hpp"
#include "lineopt/families.hpp"
#include "lineopt/graph_io.hpp"
#include "lineopt/line_graph.hpp"

namespace lineopt {

bool VerificationReport::passed() const {
  if (!bound_violations.empty() || !equivalence_failures.empty() || !lambda_form_failures.empty() ||
      !oracle_disagreements.empty() || !guard_violations.empty())
    return false;
  return std::all_of(lemmas.begin(), lemmas.end(), [](const auto& kv) { return kv.second.failures.empty(); });
}

void VerificationReport::absorb(VerificationReport other) {
  graphs_checked += other.graphs_checked;
  cycles_skipped += other.cycles_skipped;
  candidates_checked += other.candidates_checked;
  optimal_pairs += other.optimal_pairs;
  auto append = [](auto& into, auto& from) {
    into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
  };
  append(bound_violations, other.bound_violations);
  append(equivalence_failures, other.equivalence_failures);
  append(lambda_form_failures, other.lambda_form_failures);
  append(oracle_disagreements, other.oracle_disagreements);
  append(guard_violations, other.guard_violations);
  for (auto& [name, tally] : other.lemmas) {
    auto& mine = lemmas[name];
    mine.checked += tally.checked;
    mine.skipped += tally.skipped;
    append(mine.failures, tally.failures);
  }
}

nlohmann::json to_json(const VerificationReport& r) {
  using nlohmann::json;
  auto lam = [](const AlgebraicEigenvalue& l) { return json{{"a", l.a()}, {"b", l.b()}}; };
  json out;
  out["passed"] = r.passed();
  out["graphs_checked"] = r.graphs_checked;
  out["cycles_skipped"] = r.cycles_skipped;
  out["candidate_lambda_checked"] = r.candidates_checked;
  out["optimal_pairs"] = r.optimal_pairs;
  out["bound_violations"] = json::array();
  for (const auto& v : r.bound_violations)
    out["bound_violations"].push_back(
        {{"graph6", v.graph6}, {"factor", to_json(v.factor)}, {"multiplicity", v.multiplicity}, {"bound", v.bound}});
  out["equivalence_failures"] = json::array();
  for (const auto& f : r.equivalence_failures)
    out["equivalence_failures"].push_back({{"graph6", f.graph6},
                                           {"lambda", lam(f.lambda)},
                                           {"verdict", f.verdict},
                                           {"multiplicity", f.multiplicity},
                                           {"bound", f.bound}});
  out["lambda_form_failures"] = json::array();
  for (const auto& f : r.lambda_form_failures)
    out["lambda_form_failures"].push_back(
        {{"graph6", f.graph6}, {"factor", to_json(f.factor)}, {"leftover", to_json(f.leftover)}});
  out["oracle_disagreements"] = json::array();
  for (const auto& d : r.oracle_disagreements)
    out["oracle_disagreements"].push_back({{"graph6", d.graph6},
                                           {"lambda", lam(d.lambda)},
                                           {"polynomial", d.polynomial},
                                           {"nullity", d.nullity},
                                           {"numeric", d.numeric},
                                           {"ambiguous", d.ambiguous}});
  out["guard_violations"] = r.guard_violations;
  out["lemmas"] = json::object();
  for (const auto& [name, t] : r.lemmas) {
    json failures = json::array();
    for (const auto& f : t.failures) failures.push_back({{"graph6", f.graph6}, {"detail", f.detail}});
    out["lemmas"][name] = {{"checked", t.checked}, {"skipped", t.skipped}, {"failures", failures}};
  }
  out["elapsed_seconds"] = r.elapsed_seconds;
  return out;
}

std::string summary_table(const VerificationReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& name, std::size_t checked, std::size_t failed) {
    os << std::left << std::setw(28) << name << std::right << std::setw(12) << checked << std::setw(10) << failed
       << "\n";
  };
  os << std::left << std::setw(28) << "check" << std::right << std::setw(12) << "checked" << std::setw(10) << "failed"
     << "\n";
  if (r.graphs_checked > 0) {
    row("bound", r.graphs_checked, r.bound_violations.size());
    row("equivalence", r.candidates_checked, r.equivalence_failures.size());
    row("lambda form", r.graphs_checked, r.lambda_form_failures.size());
    if (!r.oracle_disagreements.empty() || !r.guard_violations.empty()) {
      row("oracles", r.candidates_checked, r.oracle_disagreements.size());
      row("numeric guard", r.graphs_checked, r.guard_violations.size());
    }
  }
  for (const auto& [name, t] : r.lemmas) row(name, t.checked, t.failures.size());
  os << (r.passed() ? "PASS" : "FAIL") << " in " << std::fixed << std::setprecision(2) << r.elapsed_seconds << " s\n";
  return os.str();
}

std::size_t default_workers() {
  if (const char* env = std::getenv("LINEOPT_WORKERS")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& fn) {
  if (workers == 0) workers = default_workers();
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

using Clock = std::chrono::steady_clock;

// Exact multiplicities of one graph's eigenvalues, one division per index.
class ExactSpectrum {
 public:
  explicit ExactSpectrum(const Graph& g) : cp_(char_poly(g)) {}
  explicit ExactSpectrum(IntPoly cp) : cp_(std::move(cp)) {}

  unsigned operator()(const AlgebraicEigenvalue& lambda) { return at_index(lambda.cyclotomic_index()); }
  unsigned at_index(unsigned n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, multiplicity_for_index(cp_, n)).first;
    return it->second;
  }
  const IntPoly& poly() const { return cp_; }

 private:
  IntPoly cp_;
  std::map<unsigned, unsigned> cache_;
};

std::size_t bound_of(const Graph& g) { return 2 * cyclomatic_number(g) + pendant_count(g) - 1; }

std::string lambda_text(const AlgebraicEigenvalue& l) { return "lambda " + l.to_string(); }

// Candidates grouped by cyclotomic index, in index order.
const std::vector<std::pair<unsigned, std::vector<AlgebraicEigenvalue>>>& grouped_candidates(std::size_t degree) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::pair<unsigned, std::vector<AlgebraicEigenvalue>>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  std::map<unsigned, std::vector<AlgebraicEigenvalue>> groups;
  for (const auto& l : trig_candidates(degree)) groups[l.cyclotomic_index()].push_back(l);
  std::vector<std::pair<unsigned, std::vector<AlgebraicEigenvalue>>> out(groups.begin(), groups.end());
  return cache.emplace(degree, std::move(out)).first->second;
}

constexpr double kTolerance = 1e-8;
constexpr double kGuard = 1e-6;

bool guard_holds(std::vector<double> spectrum) {
  std::sort(spectrum.begin(), spectrum.end());
  for (std::size_t i = 1; i < spectrum.size(); ++i) {
    const double gap = spectrum[i] - spectrum[i - 1];
    if (gap > kTolerance && gap <= kGuard) return false;
  }
  return true;
}

std::vector<OracleDisagreement> oracle_check(const Graph& g, ExactSpectrum& exact, VerificationReport* report = nullptr) {
  std::vector<OracleDisagreement> out;
  if (g.order() == 0) return out;
  const auto spectrum = numeric_spectrum(g);
  const std::string g6 = to_graph6(g);
  if (report && !guard_holds(spectrum)) report->guard_violations.push_back(g6);
  for (const auto& [n, lambdas] : grouped_candidates(g.order())) {
    const unsigned m = exact.at_index(n);
    const std::size_t null = nullity_over_field(g, n);
    for (const auto& l : lambdas) {
      const auto numeric = numeric_count(spectrum, l.value(), kTolerance, kGuard);
      if (m != null || numeric.count != m)
        out.push_back({g6, l, m, null, numeric.count, numeric.ambiguous});
    }
  }
  return out;
}

VerificationReport check_graph(const Graph& g, const VerifyOptions& options) {
  VerificationReport r;
  const Graph lg = line_graph(g).line;
  ExactSpectrum exact(lg);
  if (options.oracles) r.oracle_disagreements = oracle_check(lg, exact, &r);
  if (is_cycle(g)) {
    r.cycles_skipped = 1;
    return r;
  }
  r.graphs_checked = 1;
  const std::string g6 = to_graph6(g);
  const Recognizer recognizer(g, options.mutation);
  const std::size_t bound = recognizer.bound();

  for (const auto& cls : eig_classes(exact.poly())) {
    if (cls.multiplicity > bound) r.bound_violations.push_back({g6, cls.factor, cls.multiplicity, bound});
    if (cls.multiplicity != bound) continue;
    IntPoly leftover = cls.factor;
    for (unsigned n : trig_indices(g.size())) {
      if (leftover.degree() < 1) break;
      if (multiplicity_for_index(leftover, n) > 0) leftover = *divide_exact(leftover, trig_min_poly_for_index(n));
    }
    if (leftover.degree() > 0) r.lambda_form_failures.push_back({g6, cls.factor, leftover});
  }

  for (const auto& [n, lambdas] : grouped_candidates(g.size())) {
    const unsigned m = exact.at_index(n);
    for (const auto& l : lambdas) {
      ++r.candidates_checked;
      const bool attained = m == bound;
      if (attained) ++r.optimal_pairs;
      const auto cert = recognizer.certify(l);
      if (cert.optimal() != attained) r.equivalence_failures.push_back({g6, l, to_string(cert.tag), m, bound});
    }
  }
  return r;
}

template <class Fn>
VerificationReport run_parallel(std::size_t count, std::size_t workers, Fn&& fn) {
  std::vector<VerificationReport> parts(count);
  parallel_for(count, workers, [&](std::size_t i) { parts[i] = fn(i); });
  VerificationReport total;
  for (auto& p : parts) total.absorb(std::move(p));
  return total;
}

}  // namespace

std::vector<OracleDisagreement> cross_check_details(const Graph& g) {
  ExactSpectrum exact(g);
  return oracle_check(g, exact);
}

bool cross_check(const Graph& g) { return cross_check_details(g).empty(); }

VerificationReport verify_graphs(const std::vector<Graph>& graphs, const VerifyOptions& options) {
  const auto start = Clock::now();
  auto report = run_parallel(graphs.size(), options.workers, [&](std::size_t i) { return check_graph(graphs[i], options); });
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

VerificationReport verify_main_theorem(std::size_t max_n, const VerifyOptions& options) {
  const auto start = Clock::now();
  std::vector<Graph> corpus;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto level = enumerate_connected(n);
    corpus.insert(corpus.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  auto report = verify_graphs(corpus, options);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Lemma suite

namespace {

void fail(LemmaTally& t, const Graph& g, std::string detail) { t.failures.push_back({to_graph6(g), std::move(detail)}); }

VerificationReport path_law(std::size_t k) {
  VerificationReport r;
  auto& t = r.lemmas["path_law"];
  const Graph p = path_graph(k);
  ExactSpectrum exact(p);
  for (const auto& [n, lambdas] : grouped_candidates(k)) {
    const unsigned m = exact.at_index(n);
    for (const auto& l : lambdas) {
      ++t.checked;
      const unsigned expected = (k + 1) % l.b() == 0 ? 1 : 0;
      if (m != expected)
        fail(t, p, "P_" + std::to_string(k) + " " + lambda_text(l) + ": multiplicity " + std::to_string(m));
    }
  }
  return r;
}

VerificationReport cycle_law(std::size_t k, unsigned max_b) {
  VerificationReport r;
  auto& t = r.lemmas["cycle_law"];
  const Graph c = cycle_graph(k);
  ExactSpectrum exact(c);
  for (unsigned b = 2; b <= max_b; ++b) {
    for (unsigned a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const AlgebraicEigenvalue l(a, b);
      ++t.checked;
      const std::size_t modulus = l.is_even_form() ? b : 2 * b;
      const unsigned expected = k % modulus == 0 ? 2 : 0;
      const unsigned m = exact(l);
      if (m != expected)
        fail(t, c, "C_" + std::to_string(k) + " " + lambda_text(l) + ": multiplicity " + std::to_string(m));
    }
  }
  return r;
}

// Path deletion never drops the line-graph multiplicity by more than one, and
// deleting from an optimal graph keeps it optimal unless a cycle remains.
void path_deletion(const Graph& g, VerificationReport& r) {
  auto& ineq = r.lemmas["path_deletion"];
  auto& closure = r.lemmas["deletion_closure"];
  const auto paths = pendant_paths(g);
  if (paths.empty()) return;
  ExactSpectrum mg(line_graph(g).line);
  const bool g_cycle = is_cycle(g);
  const std::size_t g_bound = g_cycle ? 0 : bound_of(g);
  for (const auto& path : paths) {
    const Graph h = delete_pendant_path(g, path.vertices).graph;
    ExactSpectrum mh(line_graph(h).line);
    const bool h_cycle = is_cycle(h);
    const std::size_t h_bound = h_cycle ? 0 : bound_of(h);
    for (const auto& [n, lambdas] : grouped_candidates(g.size())) {
      const unsigned a = mg.at_index(n);
      const unsigned b = mh.at_index(n);
      for (const auto& l : lambdas) {
        ++ineq.checked;
        if (a > b + 1)
          fail(ineq, g, lambda_text(l) + " path at " + std::to_string(path.attachment) + ": " + std::to_string(a) +
                            " > " + std::to_string(b) + " + 1");
        if (g_cycle || a != g_bound || h_cycle) {
          ++closure.skipped;
          continue;
        }
        ++closure.checked;
        if (b != h_bound) fail(closure, g, lambda_text(l) + " remainder not optimal");
      }
    }
  }
}

// m(G - v) = m(G) + 1 whenever the u-side of the bridge uv satisfies
// m(G_u) = m(G_u - u) + 1 > 1.
void bridge_identity(const Graph& g, VerificationReport& r) {
  auto& t = r.lemmas["bridge_identity"];
  const auto bridges = summarize(g).bridges;
  if (bridges.empty()) return;
  ExactSpectrum mg(g);
  for (EdgeId e : bridges) {
    const Graph cut = remove_edge(g, e);
    for (int side = 0; side < 2; ++side) {
      const Vertex u = side == 0 ? g.edge(e).u : g.edge(e).v;
      const Vertex v = side == 0 ? g.edge(e).v : g.edge(e).u;
      const auto dist = bfs_distances(cut, u);
      std::vector<Vertex> comp;
      for (Vertex x = 0; x < g.order(); ++x)
        if (dist[x] != kUnreachable) comp.push_back(x);
      const auto gu = induced_subgraph(g, comp);
      const Vertex u_local = *gu.old_to_new[u];
      std::vector<Vertex> only_u{u_local};
      ExactSpectrum m_gu(gu.graph);
      ExactSpectrum m_gu_minus(remove_vertices(gu.graph, only_u).graph);
      std::vector<Vertex> only_v{v};
      ExactSpectrum m_g_minus_v(remove_vertices(g, only_v).graph);
      for (const auto& [n, lambdas] : grouped_candidates(g.order())) {
        const unsigned x = m_gu.at_index(n);
        if (x == 0 || x != m_gu_minus.at_index(n) + 1) {
          t.skipped += lambdas.size();
          continue;
        }
        t.checked += lambdas.size();
        if (m_g_minus_v.at_index(n) != mg.at_index(n) + 1)
          fail(t, g, lambda_text(lambdas.front()) + " bridge " + std::to_string(u) + "-" + std::to_string(v));
      }
    }
  }
}

// Hanging a path on t(m+1) vertices from w (sharing w) leaves m(lambda)
// equal to that of H - w, for lambda = 2cos(i pi/(m+1)).
void path_absorption(const Graph& h, Vertex w, const AlgebraicEigenvalue& l, std::size_t t_mult, LemmaTally& t) {
  const std::size_t length = t_mult * l.b();
  auto edges = h.edge_pairs();
  Vertex prev = w;
  Vertex next = static_cast<Vertex>(h.order());
  for (std::size_t i = 1; i < length; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  const Graph g = Graph::build(next, edges);
  std::vector<Vertex> only_w{w};
  const Graph rest = remove_vertices(h, only_w).graph;
  ++t.checked;
  const unsigned mg = multiplicity(g, l);
  const unsigned mr = multiplicity(rest, l);
  if (mg != mr)
    fail(t, h, lambda_text(l) + " path of order " + std::to_string(length) + " at " + std::to_string(w) + ": " +
                   std::to_string(mg) + " vs " + std::to_string(mr));
}

void path_absorption_all(const Graph& h, VerificationReport& r) {
  auto& t = r.lemmas["path_absorption"];
  for (Vertex w = 0; w < h.order(); ++w)
    for (unsigned b = 2; b <= 6; ++b)
      for (unsigned a = 1; a < b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        for (std::size_t mult = 1; mult <= 2; ++mult) path_absorption(h, w, AlgebraicEigenvalue(a, b), mult, t);
      }
}

// Optimality is equivalent to the three edge-reduction conditions.
void edge_reduction(const Graph& g, VerificationReport& r, bool all_edges) {
  auto& t = r.lemmas["edge_reduction"];
  if (is_cycle(g) || cyclomatic_number(g) == 0) return;
  auto edges = reduction_edges(g);
  if (edges.empty()) return;
  if (!all_edges) edges.resize(1);
  ExactSpectrum mg(line_graph(g).line);
  const std::size_t g_bound = bound_of(g);
  const std::size_t pg = pendant_count(g);
  for (EdgeId e : edges) {
    const Graph h = remove_edge(g, e);
    ExactSpectrum mh(line_graph(h).line);
    const bool h_cycle = is_cycle(h);
    const std::size_t h_bound = h_cycle ? 0 : bound_of(h);
    const bool pendant_ok = pendant_count(h) == pg + 1;
    for (const auto& [n, lambdas] : grouped_candidates(g.size())) {
      const unsigned a = mg.at_index(n);
      const unsigned b = mh.at_index(n);
      const bool optimal = a == g_bound;
      const bool conditions = a == b + 1 && !h_cycle && b == h_bound && pendant_ok;
      t.checked += lambdas.size();
      if (optimal != conditions)
        fail(t, g, lambda_text(lambdas.front()) + " edge " + std::to_string(g.edge(e).u) + "-" +
                       std::to_string(g.edge(e).v) + (optimal ? ": optimal but a condition fails"
                                                              : ": conditions hold but not optimal"));
    }
  }
}

// In an optimal graph with cycles, two major vertices on a common cycle are
// never adjacent.
void major_vertices_nonadjacent(const Graph& g, VerificationReport& r) {
  auto& t = r.lemmas["major_vertices_nonadjacent"];
  if (is_cycle(g) || cyclomatic_number(g) == 0) return;
  ExactSpectrum mg(line_graph(g).line);
  const std::size_t bound = bound_of(g);
  bool optimal = false;
  for (const auto& [n, lambdas] : grouped_candidates(g.size()))
    if (mg.at_index(n) == bound) optimal = true;
  if (!optimal) {
    ++t.skipped;
    return;
  }
  ++t.checked;
  const auto s = summarize(g);
  std::vector<bool> bridge(g.size(), false);
  for (EdgeId e : s.bridges) bridge[e] = true;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& ed = g.edge(e);
    if (!bridge[e] && g.degree(ed.u) >= 3 && g.degree(ed.v) >= 3)
      fail(t, g, "adjacent major vertices " + std::to_string(ed.u) + "-" + std::to_string(ed.v) + " on a cycle");
  }
}

// Zero annihilator dimension bounds the multiplicity by |U|, and shrinking U
// raises the dimension by at most the number of vertices removed.
void annihilator_sample(const Graph& g, std::mt19937_64& rng, VerificationReport& r) {
  auto& bound = r.lemmas["annihilator_bound"];
  auto& monotone = r.lemmas["annihilator_monotone"];
  const auto& groups = grouped_candidates(std::min<std::size_t>(g.order(), 8));
  if (groups.empty()) return;
  ExactSpectrum exact(g);
  // prefer eigenvalues that occur
  std::vector<AlgebraicEigenvalue> present;
  for (const auto& [n, lambdas] : groups)
    if (exact.at_index(n) > 0) present.push_back(lambdas.front());
  const auto& pool = present.empty() ? groups[rng() % groups.size()].second : present;
  const auto l = pool[rng() % pool.size()];
  std::vector<Vertex> x, y;
  for (Vertex v = 0; v < g.order(); ++v)
    if (rng() % 2) x.push_back(v);
  for (Vertex v : x)
    if (rng() % 2) y.push_back(v);
  const auto dx = annihilator_dimension(g, l, x);
  const auto dy = annihilator_dimension(g, l, y);
  ++monotone.checked;
  if (dy > dx + (x.size() - y.size())) fail(monotone, g, lambda_text(l) + " nested sets");
  if (dx != 0) {
    ++bound.skipped;
  } else {
    ++bound.checked;
    if (exact(l) > x.size()) fail(bound, g, lambda_text(l) + " annihilator smaller than multiplicity");
  }
}

Graph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
  Graph g = Graph::build(n, edges);
  for (std::size_t tries = 0; extra > 0 && tries < 50; ++tries) {
    const auto u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u == v || g.adjacent(u, v)) continue;
    g = add_edge(g, u, v);
    --extra;
  }
  return g;
}

Graph random_with_pendant_path(std::mt19937_64& rng) {
  while (true) {
    const std::size_t n = 6 + rng() % 7;
    Graph g = random_connected(rng, n, rng() % 4);
    if (!pendant_paths(g).empty()) return g;
  }
}

Graph random_reducible(std::mt19937_64& rng) {
  while (true) {
    Graph g;
    if (rng() % 2 == 0) {
      const CaseTag tags[] = {CaseTag::AttachedCycles, CaseTag::TwoCyclesEdge, CaseTag::ManyCycles};
      g = generate(random_family_spec(tags[rng() % 3], rng()));
      if (g.size() > 48) continue;
    } else {
      g = random_connected(rng, 5 + rng() % 8, 1 + rng() % 3);
    }
    if (!is_cycle(g) && !reduction_edges(g).empty()) return g;
  }
}

}  // namespace

VerificationReport verify_lemmas(const LemmaOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  const auto workers = options.workers;

  report.absorb(run_parallel(options.max_path, workers, [&](std::size_t i) { return path_law(i + 1); }));
  if (options.max_cycle >= 3)
    report.absorb(run_parallel(options.max_cycle - 2, workers,
                               [&](std::size_t i) { return cycle_law(i + 3, options.cycle_max_b); }));

  std::vector<Graph> corpus;
  for (std::size_t n = 2; n <= options.max_n; ++n) {
    auto level = enumerate_connected(n);
    corpus.insert(corpus.end(), level.begin(), level.end());
  }
  report.absorb(run_parallel(corpus.size(), workers, [&](std::size_t i) {
    VerificationReport r;
    const Graph& g = corpus[i];
    path_deletion(g, r);
    bridge_identity(g, r);
    if (g.order() <= 7) path_absorption_all(g, r);
    edge_reduction(g, r, true);
    major_vertices_nonadjacent(g, r);
    return r;
  }));

  report.absorb(run_parallel(options.samples, workers, [&](std::size_t i) {
    VerificationReport r;
    std::mt19937_64 rng(options.seed * 1000003 + i);
    path_deletion(random_with_pendant_path(rng), r);

    const Graph h = random_connected(rng, 3 + rng() % 6, rng() % 3);
    const auto w = static_cast<Vertex>(rng() % h.order());
    const unsigned b = 2 + static_cast<unsigned>(rng() % 7);
    unsigned a = 1 + static_cast<unsigned>(rng() % (b - 1));
    while (std::gcd(a, b) != 1) a = 1 + static_cast<unsigned>(rng() % (b - 1));
    path_absorption(h, w, AlgebraicEigenvalue(a, b), 1 + rng() % 3, r.lemmas["path_absorption"]);

    const Graph reducible = random_reducible(rng);
    edge_reduction(reducible, r, false);
    major_vertices_nonadjacent(reducible, r);

    if (!corpus.empty()) {
      const Graph& g = corpus[rng() % corpus.size()];
      annihilator_sample(line_graph(g).line, rng, r);
    }
    return r;
  }));

  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace lineopt
