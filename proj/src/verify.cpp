#include "tubings/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>
#include <unordered_map>

#include "tubings/dtub.hpp"
#include "tubings/errors.hpp"
#include "tubings/opcat.hpp"

namespace tubings {

Json VerificationReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["census"] = census;
  j["cases"] = cases;
  j["pass"] = passed();
  Json fails = Json::array();
  for (const std::string& f : failures) fails.push_back(f);
  j["failures"] = std::move(fails);
  j["wall_seconds"] = wall_seconds;
  j["seed"] = seed;
  return j;
}

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct CaseResult {
  long long cases = 0;
  std::vector<std::pair<std::size_t, std::string>> failures;
};

// Work-stealing over an indexed case list; failures are keyed by case index
// so the merged report is deterministic regardless of scheduling.
CaseResult run_cases(std::size_t count, int threads,
                     const std::function<void(std::size_t, CaseResult&)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min<std::size_t>(threads, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::vector<CaseResult> partial(threads);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i, partial[w]);
      }
    });
  }
  for (auto& th : pool) th.join();
  CaseResult merged;
  for (const CaseResult& p : partial) {
    merged.cases += p.cases;
    merged.failures.insert(merged.failures.end(), p.failures.begin(), p.failures.end());
  }
  std::sort(merged.failures.begin(), merged.failures.end());
  return merged;
}

void guarded(std::size_t i, CaseResult& out, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.failures.push_back({i, std::string("exception: ") + e.what()});
  }
}

std::vector<std::string> strip_keys(std::vector<std::pair<std::size_t, std::string>> v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (auto& [k, s] : v) out.push_back(std::move(s));
  return out;
}

Json nodeset_json(NodeSet s) {
  Json arr = Json::array();
  for (int v : s.to_vector()) arr.push_back(v);
  return arr;
}

// Index-based boundary table of one graph: row i lists (cover index, sign).
struct BoundaryTable {
  std::vector<Tubing> tubings;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<std::pair<int, int>>> rows;

  explicit BoundaryTable(const Graph& g) {
    tubings = enumerate_tubings(g);
    for (int i = 0; i < static_cast<int>(tubings.size()); ++i)
      index.emplace(tubings[i].encode(), i);
    rows.resize(tubings.size());
    for (int i = 0; i < static_cast<int>(tubings.size()); ++i) {
      const Tubing& T = tubings[i];
      for (NodeSet u : g.all_tubes()) {
        if (u == T.universal() || T.contains(u)) continue;
        bool ok = true;
        for (NodeSet t : T.tubes())
          if (!tubes_compatible(g, u, t)) { ok = false; break; }
        if (!ok) continue;
        std::vector<NodeSet> tubes = T.tubes();
        tubes.push_back(u);
        Tubing cover = Tubing::trusted(g, std::move(tubes));
        rows[i].push_back({index.at(cover.encode()), boundary_sign(T, u)});
      }
    }
  }
};

}  // namespace

VerificationReport verify_d2(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "d2";
  rep.seed = opt.seed;
  auto census = graph_census(opt.max_n);
  rep.census = "all tubings of " + std::to_string(census.size()) +
               " labeled connected graphs, n <= " + std::to_string(opt.max_n);
  auto result = run_cases(census.size(), opt.threads, [&](std::size_t gi, CaseResult& out) {
    BoundaryTable table(census[gi]);
    for (std::size_t ti = 0; ti < table.tubings.size(); ++ti) {
      out.cases++;
      std::unordered_map<int, long long> acc;
      for (auto [u1, s1] : table.rows[ti])
        for (auto [u2, s2] : table.rows[u1]) acc[u2] += static_cast<long long>(s1) * s2;
      for (auto [idx, coeff] : acc)
        if (coeff != 0) {
          Json j;
          j["graph"] = graph_to_json(census[gi]);
          j["tubing"] = tubing_to_json(table.tubings[ti]);
          j["nonzero_at"] = tubing_to_json(table.tubings[idx]);
          j["coefficient"] = coeff;
          out.failures.push_back({gi * 1000000 + ti, j.dump()});
          break;
        }
    }
  });
  rep.cases = result.cases;
  rep.failures = strip_keys(std::move(result.failures));
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport verify_welldef(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "welldef";
  rep.seed = opt.seed;
  auto census = graph_census(opt.max_n);
  rep.census = "decomposition choices for all tubings, n <= " + std::to_string(opt.max_n);
  auto result = run_cases(census.size(), opt.threads, [&](std::size_t gi, CaseResult& out) {
    for (const Tubing& T : enumerate_tubings(census[gi])) {
      if (T.size() < 2) continue;
      TubingChain reference = boundary(T);
      for (NodeSet t : T.proper_tubes()) {
        out.cases++;
        if (!(boundary_via_decomposition(T, t) == reference)) {
          Json j;
          j["tubing"] = tubing_to_json(T);
          j["decomposition_tube"] = nodeset_json(t);
          out.failures.push_back({gi, j.dump()});
        }
      }
    }
  });
  rep.cases = result.cases;
  rep.failures = strip_keys(std::move(result.failures));
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport verify_prelie(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "prelie";
  rep.seed = opt.seed;
  auto census = graph_census(opt.max_n);
  rep.census = "pre-Lie co-identity on all tubings, n <= " + std::to_string(opt.max_n);
  auto result = run_cases(census.size(), opt.threads, [&](std::size_t gi, CaseResult& out) {
    out.cases++;
    if (!prelie_identity_check(census[gi]))
      out.failures.push_back({gi, graph_to_json(census[gi]).dump()});
  });
  rep.cases = result.cases;
  rep.failures = strip_keys(std::move(result.failures));
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport verify_topo(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "topo";
  rep.seed = opt.seed;
  int cap = std::min(opt.max_n, 4);
  auto census = graph_census(cap);
  rep.census = "all tube collections on connected graphs, n <= " + std::to_string(cap);
  auto result = run_cases(census.size(), opt.threads, [&](std::size_t gi, CaseResult& out) {
    out.cases++;
    if (!tubing_iff_basis_check(census[gi]))
      out.failures.push_back({gi, graph_to_json(census[gi]).dump()});
  });
  rep.cases = result.cases;
  rep.failures = strip_keys(std::move(result.failures));
  rep.wall_seconds = timer.seconds();
  return rep;
}

namespace {

// Commutation of distinct slots and associativity through nested slots.
// Returns false on the first violated identity.
bool substitution_probe(const Tubing& T, NodeSet ta, const Tubing& Sa, NodeSet tb,
                        const Tubing& Sb) {
  Tubing lhs = gamma_t(gamma_t(T, ta, Sa), tb, Sb);
  Tubing rhs = gamma_t(gamma_t(T, tb, Sb), ta, Sa);
  return lhs == rhs;
}

bool associativity_probe(const Tubing& T, NodeSet t, const Tubing& S, NodeSet s,
                         const Tubing& W) {
  GraphSlice fiber = fiber_slice(T, t);
  Tubing gTS = gamma_t(T, t, S);
  NodeSet s_ambient = fiber.pull_to_parent(s);
  NodeSet stilde;
  for (NodeSet u : gTS.tubes()) {
    if (!s_ambient.subset_of(u)) continue;
    if (stilde.empty() || u.count() < stilde.count()) stilde = u;
  }
  // Theorem part 1: the fiber of s in S equals the fiber of s~ in gamma_t(T,S).
  GraphSlice inner = fiber_slice(S, s);
  GraphSlice outer = fiber_slice(gTS, stilde);
  if (!(inner.graph == outer.graph)) return false;
  std::vector<int> inner_parent;
  for (int v : inner.to_parent) inner_parent.push_back(fiber.to_parent[v - 1]);
  if (inner_parent != outer.to_parent) return false;
  // Theorem part 2.
  Tubing lhs = gamma_t(T, t, gamma_t(S, s, W));
  Tubing rhs = gamma_t(gTS, stilde, W);
  return lhs == rhs;
}

Graph random_connected_graph(int n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng() & 1) e.push_back({i, j});
    Graph g(n, e);
    if (g.is_connected()) return g;
  }
}

Tubing random_tubing(const Graph& g, std::mt19937_64& rng) {
  std::vector<NodeSet> proper = g.all_tubes();
  proper.erase(std::remove(proper.begin(), proper.end(), g.nodes()), proper.end());
  std::shuffle(proper.begin(), proper.end(), rng);
  std::vector<NodeSet> chosen{g.nodes()};
  for (NodeSet cand : proper) {
    if (rng() % 3 == 0) continue;
    bool ok = true;
    for (NodeSet c : chosen)
      if (!(cand == c) && !tubes_compatible(g, cand, c)) { ok = false; break; }
    if (ok) chosen.push_back(cand);
    if (static_cast<int>(chosen.size()) == g.node_count()) break;
  }
  return Tubing::trusted(g, std::move(chosen));
}

}  // namespace

VerificationReport verify_substitution(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "substitution";
  rep.seed = opt.seed;
  auto census = graph_census(std::min(opt.max_n, 4));
  rep.census = "exhaustive n <= " + std::to_string(std::min(opt.max_n, 4)) + ", " +
               std::to_string(opt.samples) + " random cases at n = 5,6 (seed " +
               std::to_string(opt.seed) + ")";
  auto result = run_cases(census.size(), opt.threads, [&](std::size_t gi, CaseResult& out) {
    const Graph& g = census[gi];
    for (const Tubing& T : enumerate_tubings(g)) {
      const auto tubes = T.tubes();
      std::vector<std::pair<NodeSet, GraphSlice>> fibers;
      for (NodeSet t : tubes) fibers.push_back({t, fiber_slice(T, t)});
      for (std::size_t a = 0; a < fibers.size(); ++a) {
        auto As = enumerate_tubings(fibers[a].second.graph);
        for (std::size_t b = a + 1; b < fibers.size(); ++b) {
          auto Bs = enumerate_tubings(fibers[b].second.graph);
          for (const Tubing& Sa : As)
            for (const Tubing& Sb : Bs) {
              out.cases++;
              if (!substitution_probe(T, fibers[a].first, Sa, fibers[b].first, Sb)) {
                Json j;
                j["identity"] = "commutation";
                j["tubing"] = tubing_to_json(T);
                j["slot_a"] = nodeset_json(fibers[a].first);
                j["slot_b"] = nodeset_json(fibers[b].first);
                out.failures.push_back({gi, j.dump()});
              }
            }
        }
        for (const Tubing& S : As) {
          for (NodeSet s : S.proper_tubes()) {
            for (const Tubing& W : enumerate_tubings(fiber_slice(S, s).graph)) {
              out.cases++;
              if (!associativity_probe(T, fibers[a].first, S, s, W)) {
                Json j;
                j["identity"] = "associativity";
                j["tubing"] = tubing_to_json(T);
                j["slot"] = nodeset_json(fibers[a].first);
                j["inner_tubing"] = tubing_to_json(S);
                j["inner_tube"] = nodeset_json(s);
                out.failures.push_back({gi, j.dump()});
              }
            }
          }
        }
      }
    }
  });
  rep.cases = result.cases;
  rep.failures = strip_keys(std::move(result.failures));

  // Random sampling at n = 5 and 6 with the fixed seed.
  std::mt19937_64 rng(opt.seed);
  for (long long k = 0; k < opt.samples; ++k) {
    int n = 5 + static_cast<int>(k % 2);
    Graph g = random_connected_graph(n, rng);
    Tubing T = random_tubing(g, rng);
    std::vector<NodeSet> tubes = T.tubes();
    NodeSet ta = tubes[rng() % tubes.size()];
    NodeSet tb = tubes[rng() % tubes.size()];
    GraphSlice fa = fiber_slice(T, ta);
    Tubing Sa = random_tubing(fa.graph, rng);
    rep.cases++;
    if (!(ta == tb)) {
      Tubing Sb = random_tubing(fiber_slice(T, tb).graph, rng);
      if (!substitution_probe(T, ta, Sa, tb, Sb)) {
        Json j;
        j["identity"] = "commutation";
        j["tubing"] = tubing_to_json(T);
        rep.failures.push_back(j.dump());
      }
    }
    auto proper = Sa.proper_tubes();
    if (!proper.empty()) {
      NodeSet s = proper[rng() % proper.size()];
      Tubing W = random_tubing(fiber_slice(Sa, s).graph, rng);
      rep.cases++;
      if (!associativity_probe(T, ta, Sa, s, W)) {
        Json j;
        j["identity"] = "associativity";
        j["tubing"] = tubing_to_json(T);
        rep.failures.push_back(j.dump());
      }
    }
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport verify_generators(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "generators";
  rep.seed = opt.seed;
  auto census = graph_census(opt.max_n);
  rep.census = "generator replay for all tubings, n <= " + std::to_string(opt.max_n);
  auto result = run_cases(census.size(), opt.threads, [&](std::size_t gi, CaseResult& out) {
    const Graph& g = census[gi];
    for (const Tubing& T : enumerate_tubings(g)) {
      out.cases++;
      if (!(replay_generators(g, generator_decomposition(T)) == T)) {
        out.failures.push_back({gi, tubing_to_json(T).dump()});
      }
    }
  });
  rep.cases = result.cases;
  rep.failures = strip_keys(std::move(result.failures));
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport verify_operad(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "operad";
  rep.seed = opt.seed;
  rep.census = "linear-graph triples with total nodes <= " + std::to_string(opt.max_n);
  std::vector<std::array<int, 3>> sizes;
  for (int n = 1; n <= opt.max_n - 2; ++n)
    for (int m = 1; n + m <= opt.max_n - 1; ++m)
      for (int p = 1; n + m + p <= opt.max_n; ++p) sizes.push_back({n, m, p});
  auto result = run_cases(sizes.size(), opt.threads, [&](std::size_t i, CaseResult& out) {
    out.cases++;
    auto [n, m, p] = sizes[i];
    if (!ns_operad_relation_check(n, m, p)) {
      Json j;
      j["sizes"] = Json::array({n, m, p});
      out.failures.push_back({i, j.dump()});
    }
  });
  rep.cases = result.cases;
  rep.failures = strip_keys(std::move(result.failures));
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport verify_permutad(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "permutad";
  rep.seed = opt.seed;
  rep.census = "complete-graph triples with total nodes <= " + std::to_string(opt.max_n);
  std::vector<std::array<int, 3>> sizes;
  for (int n = 1; n <= opt.max_n - 2; ++n)
    for (int m = 1; n + m <= opt.max_n - 1; ++m)
      for (int p = 1; n + m + p <= opt.max_n; ++p) sizes.push_back({n, m, p});
  auto result = run_cases(sizes.size(), opt.threads, [&](std::size_t i, CaseResult& out) {
    out.cases++;
    auto [n, m, p] = sizes[i];
    if (!permutad_relation_check(n, m, p)) {
      Json j;
      j["sizes"] = Json::array({n, m, p});
      out.failures.push_back({i, j.dump()});
    }
  });
  rep.cases = result.cases;
  rep.failures = strip_keys(std::move(result.failures));
  rep.wall_seconds = timer.seconds();
  return rep;
}

namespace {

// Connected tubings grouped by node count, for assembling dtubings.
std::vector<std::vector<Tubing>> components_by_size(int max_size) {
  std::vector<std::vector<Tubing>> by_size(max_size + 1);
  for (const Graph& g : graph_census(max_size))
    for (const Tubing& T : enumerate_tubings(g)) by_size[g.node_count()].push_back(T);
  return by_size;
}

// Visit every valid dtubing with >= 2 components and at most max_total nodes.
void for_each_dtubing(const std::vector<std::vector<Tubing>>& by_size, int max_total,
                      std::vector<DComponent>& stack,
                      const std::function<void(const DTubing&)>& visit, int remaining) {
  if (stack.size() >= 2) {
    bool any = false;
    for (const DComponent& c : stack) any = any || c.reduced;
    if (any) visit(DTubing::checked(stack));
  }
  for (int size = 1; size <= remaining; ++size) {
    for (const Tubing& T : by_size[size]) {
      for (bool reduced : {false, true}) {
        stack.push_back({T, reduced});
        for_each_dtubing(by_size, max_total, stack, visit, remaining - size);
        stack.pop_back();
      }
    }
  }
}

std::vector<DTubing> dtubings_up_to(int max_total) {
  auto by_size = components_by_size(max_total - 1);
  std::vector<DTubing> out;
  std::vector<DComponent> stack;
  for_each_dtubing(by_size, max_total, stack,
                   [&](const DTubing& d) { out.push_back(d); }, max_total);
  return out;
}

}  // namespace

VerificationReport verify_trias(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "trias";
  rep.seed = opt.seed;
  int cap = std::min(opt.max_n, 6);
  rep.census = "dtubings with total nodes <= " + std::to_string(cap) +
               "; relation triples with small components; simplex counts to n = 10";

  // d^2 = 0 on every dtubing with at least two components; parallel over the
  // leading component, streaming to keep memory flat.
  auto by_size = components_by_size(cap - 1);
  std::vector<std::pair<const Tubing*, bool>> heads;
  for (int size = 1; size < cap; ++size)
    for (const Tubing& T : by_size[size])
      for (bool reduced : {false, true}) heads.push_back({&T, reduced});
  auto result = run_cases(heads.size(), opt.threads, [&](std::size_t hi, CaseResult& out) {
    guarded(hi, out, [&]() {
      std::vector<DComponent> stack{{*heads[hi].first, heads[hi].second}};
      int remaining = cap - heads[hi].first->graph().node_count();
      for_each_dtubing(by_size, cap, stack,
                       [&](const DTubing& d) {
                         out.cases++;
                         if (!differential(differential(d)).empty())
                           out.failures.push_back({hi, dtubing_to_json(d).dump() + " d2 != 0"});
                       },
                       remaining);
    });
  });
  rep.cases = result.cases;
  rep.failures = strip_keys(std::move(result.failures));

  // Product relations on small triples.
  std::vector<DTubing> sample;
  for (const Graph& g : graph_census(2))
    for (const Tubing& T : enumerate_tubings(g)) sample.push_back(DTubing::of_connected(T));
  for (const DTubing& d : dtubings_up_to(3)) sample.push_back(d);
  rep.cases++;
  if (!trias_relation_check(sample)) rep.failures.push_back("trias relations failed");

  // Leibniz rules (viii)-(x) checked independently of the decomposition.
  std::vector<DTubing> pool;
  for (const Graph& g : graph_census(3))
    for (const Tubing& T : enumerate_tubings(g)) pool.push_back(DTubing::of_connected(T));
  for (const DTubing& d : dtubings_up_to(3)) pool.push_back(d);
  for (const DTubing& x : pool)
    for (const DTubing& y : pool) {
      if (x.total_nodes() + y.total_nodes() > cap) continue;
      DChain X, Y;
      X.add(x, 1);
      Y.add(y, 1);
      int gx = x.degree();
      int sx = gx % 2 ? -1 : 1;
      rep.cases += 3;
      if (!(differential(vdash(X, Y)) == (vdash(differential(X), Y) += vdash(X, differential(Y)) * sx)))
        rep.failures.push_back("rule (ix) failed at " + x.to_string() + " , " + y.to_string());
      if (!(differential(dashv(X, Y)) == (dashv(differential(X), Y) += dashv(X, differential(Y)) * sx)))
        rep.failures.push_back("rule (x) failed at " + x.to_string() + " , " + y.to_string());
      DChain rhs = times(differential(X), Y);
      rhs += times(X, differential(Y)) * (-sx);
      rhs += dashv(X, Y) * sx;
      rhs += vdash(X, Y) * (-sx);
      if (!(differential(times(X, Y)) == rhs))
        rep.failures.push_back("rule (viii) failed at " + x.to_string() + " , " + y.to_string());
    }

  // Simplex face counts: dtubings over n single-node components = 2^n - 1.
  Tubing dot = Tubing::trivial(Graph::complete(1));
  for (int n = 1; n <= 10; ++n) {
    rep.cases++;
    long long count = 0;
    for (std::uint64_t flags = 0; flags < (std::uint64_t(1) << n); ++flags) {
      std::vector<DComponent> comps;
      for (int k = 0; k < n; ++k) comps.push_back({dot, ((flags >> k) & 1) != 0});
      bool valid = n == 1 ? !comps[0].reduced
                          : std::any_of(comps.begin(), comps.end(),
                                        [](const DComponent& c) { return c.reduced; });
      if (valid) ++count;
    }
    long long expected = (1LL << n) - 1;
    if (count != expected)
      rep.failures.push_back("simplex count mismatch at n = " + std::to_string(n));
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport verify_lalgebra(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "lalgebra";
  rep.seed = opt.seed;
  rep.census = "exhaustive triples with components <= 2 nodes, plus " +
               std::to_string(std::max<long long>(opt.samples / 10, 1)) +
               " random larger triples (seed " + std::to_string(opt.seed) + ")";
  std::vector<Tubing> small;
  for (const Graph& g : graph_census(2))
    for (const Tubing& T : enumerate_tubings(g)) small.push_back(T);
  auto check_triple = [&](const Tubing& x, const Tubing& y, const Tubing& z) -> bool {
    // x |> (y <| z) = (x |> y) <| z
    if (!(l_right(x, l_left(y, z)) == l_left(l_right(x, y), z))) return false;
    // perp associativity and the mixed relations
    if (!(l_perp(l_perp(x, y), z) == l_perp(x, l_perp(y, z)))) return false;
    if (!(l_right(x, l_perp(y, z)) == l_perp(l_right(x, y), z))) return false;
    if (!(l_perp(x, l_right(y, z)) == l_perp(l_left(x, y), z))) return false;
    if (!(l_perp(x, l_left(y, z)) == l_left(l_perp(x, y), z))) return false;
    return true;
  };
  for (const Tubing& x : small)
    for (const Tubing& y : small)
      for (const Tubing& z : small) {
        rep.cases++;
        if (!check_triple(x, y, z)) {
          Json j;
          j["x"] = tubing_to_json(x);
          j["y"] = tubing_to_json(y);
          j["z"] = tubing_to_json(z);
          rep.failures.push_back(j.dump());
        }
      }
  std::mt19937_64 rng(opt.seed);
  long long larger = std::max<long long>(opt.samples / 10, 1);
  for (long long k = 0; k < larger; ++k) {
    int sizes[3];
    for (int& s : sizes) s = 2 + static_cast<int>(rng() % 3);
    Tubing x = random_tubing(random_connected_graph(sizes[0], rng), rng);
    Tubing y = random_tubing(random_connected_graph(sizes[1], rng), rng);
    Tubing z = random_tubing(random_connected_graph(sizes[2], rng), rng);
    rep.cases++;
    if (!check_triple(x, y, z)) {
      Json j;
      j["x"] = tubing_to_json(x);
      j["y"] = tubing_to_json(y);
      j["z"] = tubing_to_json(z);
      rep.failures.push_back(j.dump());
    }
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

VerificationReport verify_opcat(const SuiteOptions& opt) {
  Timer timer;
  VerificationReport rep;
  rep.suite = "opcat";
  rep.seed = opt.seed;
  int cap = std::min(opt.max_n, 4);
  auto census = graph_census(cap);
  rep.census = "axiom chains on connected graphs n <= " + std::to_string(cap) +
               "; complete-graph fibers vs surjections";
  auto result = run_cases(census.size(), opt.threads, [&](std::size_t gi, CaseResult& out) {
    out.cases++;
    AxiomReport r = axiom_suite(census[gi]);
    if (!r.all_passed()) {
      for (const auto& e : r.entries)
        if (e.failures)
          out.failures.push_back(
              {gi, graph_to_json(census[gi]).dump() + " axiom " + e.axiom + ": " +
                       e.counterexample});
    }
  });
  rep.cases = result.cases;
  rep.failures = strip_keys(std::move(result.failures));
  for (int n = 1; n <= cap; ++n) {
    rep.cases++;
    if (!complete_graph_fiber_check(n))
      rep.failures.push_back("complete-graph fiber/surjection mismatch at n = " +
                             std::to_string(n));
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

std::vector<std::string> suite_names() {
  return {"d2",     "welldef", "prelie",   "topo",  "substitution", "generators",
          "operad", "permutad", "trias",   "lalgebra", "opcat"};
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "d2") return verify_d2(opt);
  if (name == "welldef") return verify_welldef(opt);
  if (name == "prelie") return verify_prelie(opt);
  if (name == "topo") return verify_topo(opt);
  if (name == "substitution" || name == "subst") return verify_substitution(opt);
  if (name == "generators" || name == "gens") return verify_generators(opt);
  if (name == "operad") return verify_operad(opt);
  if (name == "permutad") return verify_permutad(opt);
  if (name == "trias") return verify_trias(opt);
  if (name == "lalgebra" || name == "lalg") return verify_lalgebra(opt);
  if (name == "opcat") return verify_opcat(opt);
  throw InputError("unknown suite: " + name);
}

}  // namespace tubings
