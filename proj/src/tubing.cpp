#include "tubings/tubing.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <thread>

#include "tubings/errors.hpp"

namespace tubings {

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::nested: return "nested";
    case PairClass::far_apart: return "far_apart";
    case PairClass::linked: return "linked";
    case PairClass::intersecting: return "intersecting";
  }
  return "?";
}

PairClass classify_pair(const Graph& g, NodeSet t, NodeSet u) {
  if (!is_tube(g, t) || !is_tube(g, u))
    throw PreconditionError("classify_pair requires two tubes");
  if (t == u) throw PreconditionError("classify_pair requires distinct tubes");
  if (t.subset_of(u) || u.subset_of(t)) return PairClass::nested;
  if (t.intersects(u)) return PairClass::intersecting;
  if (g.neighbors_of(t).intersects(u)) return PairClass::linked;
  return PairClass::far_apart;
}

bool is_tubing(const Graph& g, const std::vector<NodeSet>& tubes) {
  bool has_universal = false;
  for (NodeSet t : tubes) {
    if (!t.subset_of(g.nodes()) || t.empty() || !g.is_connected_subset(t)) return false;
    if (t == g.nodes()) has_universal = true;
  }
  if (!has_universal) return false;
  for (std::size_t i = 0; i < tubes.size(); ++i)
    for (std::size_t j = i + 1; j < tubes.size(); ++j) {
      if (tubes[i] == tubes[j]) return false;
      PairClass c = classify_pair(g, tubes[i], tubes[j]);
      if (c != PairClass::nested && c != PairClass::far_apart) return false;
    }
  return true;
}

std::vector<NodeSet> canonical_union(std::vector<NodeSet> tubes) {
  std::sort(tubes.begin(), tubes.end(), tube_less);
  tubes.erase(std::unique(tubes.begin(), tubes.end()), tubes.end());
  return tubes;
}

static std::vector<NodeSet> canonicalize(std::vector<NodeSet> tubes) {
  return canonical_union(std::move(tubes));
}

Tubing Tubing::checked(const Graph& g, std::vector<NodeSet> tubes) {
  tubes = canonicalize(std::move(tubes));
  if (!g.is_connected())
    throw PreconditionError("tubings of disconnected graphs are handled by the dtub layer");
  if (!is_tubing(g, tubes)) throw PreconditionError("not a tubing of the given graph");
  return Tubing(g, std::move(tubes));
}

Tubing Tubing::trusted(const Graph& g, std::vector<NodeSet> tubes) {
  tubes = canonicalize(std::move(tubes));
  assert(is_tubing(g, tubes));
  return Tubing(g, std::move(tubes));
}

Tubing Tubing::trivial(const Graph& g) { return Tubing(g, {g.nodes()}); }

bool Tubing::contains(NodeSet t) const {
  return std::find(tubes_.begin(), tubes_.end(), t) != tubes_.end();
}

std::vector<NodeSet> Tubing::proper_tubes() const {
  std::vector<NodeSet> out;
  for (NodeSet t : tubes_)
    if (t != universal()) out.push_back(t);
  return out;
}

std::vector<NodeSet> Tubing::maximal_proper_tubes() const {
  return maximal_tubes_inside(universal());
}

std::vector<NodeSet> Tubing::maximal_tubes_inside(NodeSet s) const {
  std::vector<NodeSet> inside;
  for (NodeSet t : tubes_)
    if (t.proper_subset_of(s)) inside.push_back(t);
  std::vector<NodeSet> out;
  for (NodeSet t : inside) {
    bool maximal = true;
    for (NodeSet u : inside)
      if (t.proper_subset_of(u)) { maximal = false; break; }
    if (maximal) out.push_back(t);
  }
  return out;
}

std::vector<NodeSet> Tubing::numbering_order() const {
  std::vector<NodeSet> remaining = tubes_;
  std::vector<NodeSet> order;
  while (!remaining.empty()) {
    std::vector<NodeSet> inner;
    for (NodeSet t : remaining) {
      bool innermost = true;
      for (NodeSet u : remaining)
        if (u != t && u.proper_subset_of(t)) { innermost = false; break; }
      if (innermost) inner.push_back(t);
    }
    std::sort(inner.begin(), inner.end(),
              [](NodeSet a, NodeSet b) { return a.min_node() < b.min_node(); });
    for (NodeSet t : inner) {
      order.push_back(t);
      remaining.erase(std::find(remaining.begin(), remaining.end(), t));
    }
  }
  return order;
}

NodeSet Tubing::free_nodes(NodeSet s) const {
  NodeSet covered;
  for (NodeSet t : tubes_)
    if (t.proper_subset_of(s)) covered |= t;
  return s - covered;
}

bool Tubing::operator<(const Tubing& o) const {
  if (!(graph_ == o.graph_)) return graph_ < o.graph_;
  if (tubes_.size() != o.tubes_.size()) return tubes_.size() < o.tubes_.size();
  for (std::size_t i = 0; i < tubes_.size(); ++i)
    if (!(tubes_[i] == o.tubes_[i])) return tube_less(tubes_[i], o.tubes_[i]);
  return false;
}

std::string Tubing::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < tubes_.size(); ++i) {
    if (i) s += ", ";
    s += tubes_[i].to_string();
  }
  return s + "}";
}

std::string Tubing::encode() const {
  std::string s = graph_.encode() + "|";
  for (NodeSet t : tubes_) s += std::to_string(t.bits()) + ",";
  return s;
}

namespace {

void extend_tubing(const Graph& g, const std::vector<NodeSet>& proper, std::size_t start,
                   std::vector<NodeSet>& chosen, std::vector<Tubing>& out) {
  std::vector<NodeSet> with_universal = chosen;
  with_universal.push_back(g.nodes());
  out.push_back(Tubing::trusted(g, std::move(with_universal)));
  for (std::size_t k = start; k < proper.size(); ++k) {
    bool ok = true;
    for (NodeSet c : chosen)
      if (!tubes_compatible(g, proper[k], c)) { ok = false; break; }
    if (!ok) continue;
    chosen.push_back(proper[k]);
    extend_tubing(g, proper, k + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Tubing> enumerate_tubings(const Graph& g, bool parallel) {
  if (!g.is_connected()) throw PreconditionError("enumerate_tubings requires a connected graph");
  if (g.node_count() > 16) throw ResourceError("tubing enumeration limited to 16 nodes");
  std::vector<NodeSet> proper = g.all_tubes();
  proper.erase(std::remove(proper.begin(), proper.end(), g.nodes()), proper.end());

  if (!parallel || proper.size() < 2) {
    std::vector<Tubing> out;
    std::vector<NodeSet> chosen;
    extend_tubing(g, proper, 0, chosen, out);
    return out;
  }

  // One branch per first proper tube; concatenation in branch order matches
  // the sequential output exactly.
  std::vector<std::future<std::vector<Tubing>>> branches;
  for (std::size_t k = 0; k < proper.size(); ++k) {
    branches.push_back(std::async(std::launch::async, [&g, &proper, k]() {
      std::vector<Tubing> part;
      std::vector<NodeSet> chosen{proper[k]};
      extend_tubing(g, proper, k + 1, chosen, part);
      return part;
    }));
  }
  // Sequential order = trivial tubing first, then the branches in tube order.
  std::vector<Tubing> out;
  out.push_back(Tubing::trivial(g));
  for (auto& b : branches) {
    auto part = b.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<long long> f_vector(const Graph& g) {
  auto all = enumerate_tubings(g);
  std::vector<long long> out(g.node_count(), 0);
  for (const Tubing& T : all) out[T.dimension()] += 1;
  return out;
}

std::optional<Tubing> restrict_to_tube(const Tubing& T, NodeSet t) {
  if (!is_tube(T.graph(), t)) throw PreconditionError("restrict_to_tube requires a tube");
  GraphSlice slice = induced_subgraph(T.graph(), t);
  std::vector<NodeSet> inside;
  for (NodeSet u : T.tubes())
    if (u.subset_of(t)) inside.push_back(slice.push_to_child(u));
  if (T.contains(t)) return Tubing::trusted(slice.graph, std::move(inside));
  if (inside.empty()) return std::nullopt;
  inside.push_back(slice.graph.nodes());
  return Tubing::trusted(slice.graph, std::move(inside));
}

Tubing induce_on_complement(const Tubing& T, NodeSet t) {
  if (!is_tube(T.graph(), t)) throw PreconditionError("induce_on_complement requires a tube");
  for (NodeSet u : T.tubes()) {
    if (u == t) continue;
    PairClass c = classify_pair(T.graph(), t, u);
    if (c != PairClass::nested && c != PairClass::far_apart)
      throw PreconditionError("tube " + t.to_string() +
                              " is incompatible with the tubing; no induced tubing exists");
  }
  GraphSlice slice = reconnected_complement(T.graph(), t);
  std::vector<NodeSet> out;
  for (NodeSet u : T.tubes()) {
    if (u.subset_of(t)) continue;
    out.push_back(slice.push_to_child(u - t));
  }
  return Tubing::trusted(slice.graph, std::move(out));
}

Tubing induce_on_iterated_complement(const Tubing& T, const std::vector<NodeSet>& ts) {
  Tubing cur = T;
  GraphSlice acc{T.graph(), {}};
  acc.to_parent.resize(T.graph().node_count());
  for (int i = 0; i < T.graph().node_count(); ++i) acc.to_parent[i] = i + 1;
  for (NodeSet t : ts) {
    NodeSet tc = acc.push_to_child(t);
    Tubing next = induce_on_complement(cur, tc);
    GraphSlice slice = reconnected_complement(cur.graph(), tc);
    std::vector<int> combined(slice.to_parent.size());
    for (std::size_t i = 0; i < slice.to_parent.size(); ++i)
      combined[i] = acc.to_parent[slice.to_parent[i] - 1];
    acc.graph = slice.graph;
    acc.to_parent = std::move(combined);
    cur = std::move(next);
  }
  return cur;
}

bool poset_leq(const Tubing& T, const Tubing& Tp) {
  if (!(T.graph() == Tp.graph())) throw InputError("poset_leq requires tubings of one graph");
  for (NodeSet t : Tp.tubes())
    if (!T.contains(t)) return false;
  return true;
}

Tubing restriction_map(const Tubing& T, const Graph& omega) {
  const Graph& gamma = T.graph();
  if (omega.node_count() != gamma.node_count())
    throw InputError("restriction_map requires the same node set");
  for (auto [u, v] : omega.edges())
    if (!gamma.has_edge(u, v))
      throw InputError("restriction_map requires Edg(Omega) within Edg(Gamma)");
  if (!omega.is_connected()) throw PreconditionError("restriction target must be connected");
  std::vector<NodeSet> out;
  for (NodeSet t : T.tubes()) {
    NodeSet rest = t;
    while (!rest.empty()) {
      NodeSet comp = NodeSet::single(rest.min_node());
      for (;;) {
        NodeSet grow = (omega.neighbors_of(comp) & rest) - comp;
        if (grow.empty()) break;
        comp |= grow;
      }
      out.push_back(comp);
      rest = rest - comp;
    }
  }
  return Tubing::trusted(omega, std::move(out));
}

static bool is_complete(const Graph& g) {
  return g.edge_count() == g.node_count() * (g.node_count() - 1) / 2;
}

std::vector<int> to_surjection(const Tubing& T) {
  if (!is_complete(T.graph()))
    throw PreconditionError("to_surjection requires a complete graph");
  // Tubes of a complete-graph tubing form a chain; sort by size.
  std::vector<NodeSet> chain = T.tubes();
  std::sort(chain.begin(), chain.end(),
            [](NodeSet a, NodeSet b) { return a.count() < b.count(); });
  std::vector<int> x(T.graph().node_count(), 0);
  NodeSet prev;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    for (int v : (chain[j] - prev).to_vector()) x[v - 1] = static_cast<int>(j) + 1;
    prev = chain[j];
  }
  return x;
}

Tubing from_surjection(const Graph& complete_graph, const std::vector<int>& x) {
  if (!is_complete(complete_graph))
    throw PreconditionError("from_surjection requires a complete graph");
  if (static_cast<int>(x.size()) != complete_graph.node_count())
    throw InputError("surjection length must match the node count");
  int r = 0;
  for (int v : x) r = std::max(r, v);
  std::vector<bool> hit(r, false);
  for (int v : x) {
    if (v < 1 || v > r) throw InputError("surjection values must lie in 1..r");
    hit[v - 1] = true;
  }
  for (bool h : hit)
    if (!h) throw InputError("map is not surjective onto 1..r");
  std::vector<NodeSet> tubes;
  for (int j = 1; j <= r; ++j) {
    NodeSet t;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] <= j) t |= NodeSet::single(static_cast<int>(i) + 1);
    tubes.push_back(t);
  }
  return Tubing::trusted(complete_graph, std::move(tubes));
}

std::vector<NodeSet> generated_topology(const Tubing& T) {
  std::vector<NodeSet> out{NodeSet()};
  const auto& tubes = T.tubes();
  const std::uint64_t limit = std::uint64_t(1) << tubes.size();
  for (std::uint64_t m = 1; m < limit; ++m) {
    NodeSet u;
    for (std::size_t k = 0; k < tubes.size(); ++k)
      if ((m >> k) & 1) u |= tubes[k];
    out.push_back(u);
  }
  std::sort(out.begin(), out.end(),
            [](NodeSet a, NodeSet b) { return a.bits() < b.bits(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_topological_basis(const Graph& g, const std::vector<NodeSet>& basis) {
  NodeSet cover;
  for (NodeSet b : basis) cover |= b;
  if (!(cover == g.nodes())) return false;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      NodeSet inter = basis[i] & basis[j];
      NodeSet covered;
      for (NodeSet b : basis)
        if (b.subset_of(inter)) covered |= b;
      if (!(covered == inter)) return false;
    }
  return true;
}

// A two-point subspace {v,w} is disconnected exactly when some basis element
// separates v from w and another separates w from v.
static bool two_point_connected(const std::vector<NodeSet>& basis, int v, int w) {
  bool v_alone = false, w_alone = false;
  for (NodeSet b : basis) {
    if (b.contains(v) && !b.contains(w)) v_alone = true;
    if (b.contains(w) && !b.contains(v)) w_alone = true;
  }
  return !(v_alone && w_alone);
}

bool satisfies_connectivity_condition(const Graph& g, const std::vector<NodeSet>& basis) {
  for (NodeSet b : basis)
    if (!is_tube(g, b)) throw PreconditionError("basis elements must be tubes");
  if (!is_topological_basis(g, basis))
    throw PreconditionError("collection is not a topological basis");
  for (auto [v, w] : g.edges())
    if (!two_point_connected(basis, v, w)) return false;
  for (NodeSet t : basis) {
    if (t == g.nodes()) continue;
    GraphSlice comp = reconnected_complement(g, t);
    for (auto [cv, cw] : comp.graph.edges()) {
      int v = comp.to_parent[cv - 1], w = comp.to_parent[cw - 1];
      if (!two_point_connected(basis, v, w)) return false;
    }
  }
  return true;
}

bool tubing_iff_basis_check(const Graph& g) {
  if (!g.is_connected()) throw PreconditionError("check requires a connected graph");
  if (g.node_count() > 4) throw ResourceError("exhaustive basis check limited to 4 nodes");
  std::vector<NodeSet> tubes = g.all_tubes();
  const std::uint64_t limit = std::uint64_t(1) << tubes.size();
  for (std::uint64_t m = 0; m < limit; ++m) {
    std::vector<NodeSet> coll;
    for (std::size_t k = 0; k < tubes.size(); ++k)
      if ((m >> k) & 1) coll.push_back(tubes[k]);
    bool tubing = is_tubing(g, coll);
    bool basis = is_topological_basis(g, coll);
    bool basis_and_conn = basis && satisfies_connectivity_condition(g, coll);
    if (tubing != basis_and_conn) return false;
  }
  return true;
}

}  // namespace tubings
