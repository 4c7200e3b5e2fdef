#include "tubings/chain.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "tubings/errors.hpp"

namespace tubings {

void TubingChain::add(const Tubing& T, const Coeff& c) {
  if (c == 0) return;
  auto it = terms_.find(T);
  if (it == terms_.end()) {
    terms_.emplace(T, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Coeff TubingChain::coefficient(const Tubing& T) const {
  auto it = terms_.find(T);
  return it == terms_.end() ? Coeff(0) : it->second;
}

TubingChain& TubingChain::operator+=(const TubingChain& o) {
  for (const auto& [T, c] : o.terms_) add(T, c);
  return *this;
}

TubingChain TubingChain::operator*(const Coeff& c) const {
  TubingChain out;
  if (c == 0) return out;
  for (const auto& [T, k] : terms_) out.add(T, k * c);
  return out;
}

SignedPermutation sigma_t(const Graph& g, NodeSet t) {
  if (!is_tube(g, t)) throw PreconditionError("sigma_t requires a tube");
  std::vector<int> image = t.to_vector();
  for (int v : (g.nodes() - t).to_vector()) image.push_back(v);
  return {std::move(image), g};
}

int graph_signature(const Graph& g, const SignedPermutation& sigma) {
  const int n = g.node_count();
  std::vector<int> pos(n + 1, 0);
  for (int k = 0; k < n; ++k) pos[sigma.image[k]] = k;
  int inv = 0;
  for (auto [i, j] : g.edges())
    if (pos[j] < pos[i]) ++inv;
  return inv % 2 ? -1 : 1;
}

int alpha(const Graph& g, NodeSet t, const Tubing& S) {
  GraphSlice comp = reconnected_complement(g, t);
  if (!(S.graph() == comp.graph))
    throw InputError("alpha: S must live on the reconnected complement of t");
  std::vector<NodeSet> maxt;
  for (NodeSet m : S.maximal_proper_tubes()) {
    NodeSet mp = comp.pull_to_parent(m);
    if (g.neighbors_of(mp).intersects(t))
      throw PreconditionError("alpha: t is linked to a proper tube of S");
    maxt.push_back(mp);
  }
  if (maxt.empty()) return t.count() % 2 ? -1 : 1;  // (-1)^{|t|}
  int m = Graph::kMaxNodes + 1;
  for (NodeSet s : maxt) m = std::min(m, s.min_node());
  return t.min_node() < m ? -1 : 1;
}

std::pair<Tubing, int> circ_parts(const Tubing& S, const Tubing& W, const Graph& g, NodeSet t) {
  GraphSlice inner = induced_subgraph(g, t);
  GraphSlice comp = reconnected_complement(g, t);
  if (!(S.graph() == inner.graph))
    throw InputError("circ: first factor must live on the induced subgraph of t");
  if (!(W.graph() == comp.graph))
    throw InputError("circ: second factor must live on the reconnected complement of t");
  std::vector<NodeSet> tubes{g.nodes()};
  for (NodeSet s : S.tubes()) tubes.push_back(inner.pull_to_parent(s));
  bool linked_proper = false;
  for (NodeSet w : W.tubes()) {
    NodeSet wp = comp.pull_to_parent(w);
    if (g.neighbors_of(wp).intersects(t)) {
      if (!(w == W.universal())) linked_proper = true;
      tubes.push_back(wp | t);
    } else {
      tubes.push_back(wp);
    }
  }
  int coeff = 1;
  if (!linked_proper) coeff = alpha(g, t, W) * (t.count() % 2 ? -1 : 1);
  return {Tubing::trusted(g, std::move(tubes)), coeff};
}

TubingChain circ_signed(const Tubing& S, const Tubing& W, const Graph& g, NodeSet t) {
  auto [tub, coeff] = circ_parts(S, W, g, t);
  TubingChain out;
  out.add(tub, coeff);
  return out;
}

namespace {

// Inverted pairs of sigma_u are exactly the pairs a < b with a outside u and b
// inside u. Counts those that are (non-)edges.
int inverted_nonedge_pairs(const Graph& g, NodeSet u) {
  int count = 0;
  for (int b : u.to_vector()) {
    NodeSet below(b >= 64 ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << (b - 1)) - 1);
    NodeSet candidates = ((below & g.nodes()) - u) - g.adjacency(b);
    count += candidates.count();
  }
  return count;
}

int block_split_sign(const std::vector<int>& block_labels, NodeSet u) {
  // (-1)^{inv + |U| + 1} where inv counts label pairs a<b in the block with a
  // outside u and b inside u.
  int inv = 0, inside = 0;
  int seen_outside = 0;
  for (int v : block_labels) {
    if (u.contains(v)) {
      inv += seen_outside;
      ++inside;
    } else {
      ++seen_outside;
    }
  }
  return (inv + inside + 1) % 2 ? -1 : 1;
}

struct BlockInfo {
  NodeSet home;  // tube owning the block
  NodeSet free;  // its free nodes
};

std::vector<BlockInfo> blocks_in_numbering_order(const Tubing& T) {
  std::vector<BlockInfo> out;
  for (NodeSet s : T.numbering_order()) out.push_back({s, T.free_nodes(s)});
  return out;
}

}  // namespace

int boundary_sign(const Tubing& T, NodeSet u) {
  const Graph& g = T.graph();
  std::vector<BlockInfo> blocks = blocks_in_numbering_order(T);
  // Home: smallest tube of T containing u.
  NodeSet home;
  int best = Graph::kMaxNodes + 1;
  for (NodeSet s : T.tubes())
    if (u.proper_subset_of(s) && s.count() < best) { home = s; best = s.count(); }
  std::size_t j = 0;
  while (!(blocks[j].home == home)) ++j;
  NodeSet block = blocks[j].free;
  NodeSet ubar = u & block;

  int r = inverted_nonedge_pairs(g, u) % 2 ? 1 : -1;  // -(-1)^{inv_ne}
  int pre = 0;
  for (std::size_t i = 0; i < j; ++i) pre += blocks[i].free.count() - 1;
  int pre_sign = pre % 2 ? -1 : 1;
  int eb = block_split_sign(block.to_vector(), ubar);

  // Koszul reordering: the split block [u-part, residual] placed at j must be
  // permuted into the numbering order of T u {u}.
  std::vector<NodeSet> tubes = T.tubes();
  tubes.push_back(u);
  Tubing Tp = Tubing::trusted(g, std::move(tubes));
  std::vector<NodeSet> target = Tp.numbering_order();
  // Keys: tubes of T' (u is a key; home keeps its key; others unchanged).
  std::vector<NodeSet> current;
  std::vector<int> deg;
  for (const BlockInfo& b : blocks) {
    if (b.home == home) {
      current.push_back(u);
      deg.push_back(ubar.count() - 1);
      current.push_back(home);
      deg.push_back(block.count() - ubar.count() - 1);
    } else {
      current.push_back(b.home);
      deg.push_back(b.free.count() - 1);
    }
  }
  int koszul = 1;
  for (std::size_t i = 0; i < target.size(); ++i) {
    std::size_t k = i;
    while (!(current[k] == target[i])) ++k;
    for (std::size_t m = k; m > i; --m) {
      if ((deg[m] % 2) && (deg[m - 1] % 2)) koszul = -koszul;
      std::swap(current[m], current[m - 1]);
      std::swap(deg[m], deg[m - 1]);
    }
  }
  return r * pre_sign * eb * koszul;
}

namespace {

std::shared_mutex boundary_cache_mutex;
std::unordered_map<std::string, std::vector<std::pair<Tubing, int>>> boundary_cache;

std::vector<std::pair<Tubing, int>> boundary_terms(const Tubing& T) {
  const std::string key = T.encode();
  {
    std::shared_lock lock(boundary_cache_mutex);
    auto it = boundary_cache.find(key);
    if (it != boundary_cache.end()) return it->second;
  }
  std::vector<std::pair<Tubing, int>> terms;
  for (NodeSet u : T.graph().all_tubes()) {
    if (u == T.universal() || T.contains(u)) continue;
    bool ok = true;
    for (NodeSet t : T.tubes())
      if (!tubes_compatible(T.graph(), u, t)) { ok = false; break; }
    if (!ok) continue;
    int sign = boundary_sign(T, u);
    std::vector<NodeSet> tubes = T.tubes();
    tubes.push_back(u);
    terms.push_back({Tubing::trusted(T.graph(), std::move(tubes)), sign});
  }
  {
    std::unique_lock lock(boundary_cache_mutex);
    // Bounded cache: census suites sweep many graphs, locality makes a flush
    // cheap. Insertions are idempotent, so races only recompute.
    if (boundary_cache.size() >= 50000) boundary_cache.clear();
    boundary_cache.emplace(key, terms);
  }
  return terms;
}

}  // namespace

TubingChain boundary(const Tubing& T) {
  TubingChain out;
  for (const auto& [U, s] : boundary_terms(T)) out.add(U, s);
  return out;
}

TubingChain boundary_chain(const TubingChain& c) {
  TubingChain out;
  for (const auto& [T, k] : c.terms()) out += boundary(T) * k;
  return out;
}

namespace {

int cover_sign(const Tubing& T, const Tubing& cover) {
  for (NodeSet u : cover.tubes())
    if (!T.contains(u)) return boundary_sign(T, u);
  throw PreconditionError("cover adds no tube");
}

}  // namespace

TubingChain boundary_via_decomposition(const Tubing& T, NodeSet t) {
  if (!T.contains(t) || t == T.universal())
    throw PreconditionError("decomposition requires a proper tube of the tubing");
  if (T.dimension() == 0) return {};
  Tubing S1 = *restrict_to_tube(T, t);
  Tubing W = induce_on_complement(T, t);
  // Recursive sub-boundaries supply the faces; each assembled cover takes its
  // incidence sign in the ambient complex.
  TubingChain out;
  auto recurse = [](const Tubing& X) -> TubingChain {
    if (X.size() < 2 || X.dimension() == 0) return boundary(X);
    NodeSet pick = X.numbering_order().front();
    if (pick == X.universal()) return boundary(X);
    return boundary_via_decomposition(X, pick);
  };
  for (const auto& entry : recurse(S1).terms()) {
    Tubing cover = insert_in_tube(T, t, entry.first);
    out.add(cover, cover_sign(T, cover));
  }
  for (const auto& entry : recurse(W).terms()) {
    Tubing cover = insert_in_complement(T, t, entry.first);
    out.add(cover, cover_sign(T, cover));
  }
  return out;
}

}  // namespace tubings

namespace tubings {

void CoproductChain::add(const TensorFactor& l, const TensorFactor& r, const Coeff& c) {
  if (c == 0) return;
  auto key = std::make_pair(l, r);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CoproductChain prelie_coproduct(const Tubing& T) {
  CoproductChain out;
  out.add(std::nullopt, T, 1);  // empty tube
  for (NodeSet t : T.tubes()) {
    if (t == T.universal()) {
      out.add(T, std::nullopt, 1);
    } else {
      out.add(*restrict_to_tube(T, t), induce_on_complement(T, t), 1);
    }
  }
  return out;
}

namespace {

using Triple = std::tuple<TensorFactor, TensorFactor, TensorFactor>;
using TripleChain = std::map<Triple, Coeff>;

void triple_add(TripleChain& ch, Triple k, const Coeff& c) {
  if (c == 0) return;
  auto it = ch.find(k);
  if (it == ch.end()) {
    ch.emplace(std::move(k), c);
    return;
  }
  it->second += c;
  if (it->second == 0) ch.erase(it);
}

CoproductChain coproduct_of(const TensorFactor& x) {
  if (!x.has_value()) {
    CoproductChain unit;
    unit.add(std::nullopt, std::nullopt, 1);
    return unit;
  }
  return prelie_coproduct(*x);
}

// (Id (x) Delta - Delta (x) Id) applied to Delta(T).
TripleChain prelie_lhs(const Tubing& T) {
  TripleChain out;
  for (const auto& [pair, c] : prelie_coproduct(T).terms()) {
    const auto& [l, r] = pair;
    for (const auto& [pr, c2] : coproduct_of(r).terms())
      triple_add(out, {l, pr.first, pr.second}, c * c2);
    for (const auto& [pl, c2] : coproduct_of(l).terms())
      triple_add(out, {pl.first, pl.second, r}, -c * c2);
  }
  return out;
}

TripleChain twist_first_two(const TripleChain& ch) {
  TripleChain out;
  for (const auto& [k, c] : ch) triple_add(out, {std::get<1>(k), std::get<0>(k), std::get<2>(k)}, c);
  return out;
}

}  // namespace

bool prelie_identity_check(const Graph& g) {
  for (const Tubing& T : enumerate_tubings(g)) {
    TripleChain lhs = prelie_lhs(T);
    if (!(twist_first_two(lhs) == lhs)) return false;
  }
  return true;
}

namespace {

// Unsigned insertion on a linear graph: y occupies nodes i+1..i+m of
// L_{n+m}, x fills the reconnected complement.
Tubing linear_insert(const Tubing& x, int i, const Tubing& y) {
  const int n = x.graph().node_count(), m = y.graph().node_count();
  Graph amb = Graph::linear(n + m);
  NodeSet t;
  for (int k = i + 1; k <= i + m; ++k) t |= NodeSet::single(k);
  return circ_parts(y, x, amb, t).first;
}

}  // namespace

bool ns_operad_relation_check(int n, int m, int p) {
  auto X = enumerate_tubings(Graph::linear(n));
  auto Y = enumerate_tubings(Graph::linear(m));
  auto Z = enumerate_tubings(Graph::linear(p));
  for (const Tubing& x : X)
    for (const Tubing& y : Y)
      for (const Tubing& z : Z) {
        // (a) far-apart slots: (x o_i y) o_j z = (x o_{j-m} z) o_i y
        for (int i = 0; i <= n; ++i)
          for (int j = i + m + 1; j <= n + m; ++j) {
            Tubing lhs = linear_insert(linear_insert(x, i, y), j, z);
            Tubing rhs = linear_insert(linear_insert(x, j - m, z), i, y);
            if (!(lhs == rhs)) return false;
          }
        // (b) nested slots: x o_i (y o_j z) = (x o_i y) o_{i+j} z
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j <= m; ++j) {
            Tubing lhs = linear_insert(x, i, linear_insert(y, j, z));
            Tubing rhs = linear_insert(linear_insert(x, i, y), i + j, z);
            if (!(lhs == rhs)) return false;
          }
      }
  return true;
}

bool permutad_relation_check(int n, int m, int p) {
  // On complete graphs nested compositions realize the permutad relation
  // (x o_sigma y) o_tau z = x o_delta (y o_gamma z) whenever
  // tau (sigma x 1) = delta (1 x gamma); realized here through all nested tube
  // pairs t' inside t of K_{n+m+p} with |t| = m + p, |t'| = p. The chains are
  // signed; every composition coefficient on a complete graph is +1.
  const int N = n + m + p;
  Graph amb = Graph::complete(N);
  auto tubes = amb.all_tubes();
  auto Zs = enumerate_tubings(Graph::complete(p));
  auto Ys = enumerate_tubings(Graph::complete(m));
  auto Xs = enumerate_tubings(Graph::complete(n));
  for (NodeSet t : tubes) {
    if (t.count() != m + p || t == amb.nodes()) continue;
    for (NodeSet tp : tubes) {
      if (tp.count() != p || !tp.proper_subset_of(t)) continue;
      GraphSlice gt = induced_subgraph(amb, t);
      GraphSlice gtp_in_gt = induced_subgraph(gt.graph, gt.push_to_child(tp));
      GraphSlice comp_tp = reconnected_complement(amb, tp);
      NodeSet ttilde = comp_tp.push_to_child(t - tp);
      // shuffle bookkeeping: tau (sigma x 1) = delta (1 x gamma)
      SignedPermutation tau = sigma_t(amb, t);
      SignedPermutation sig = sigma_t(gt.graph, gt.push_to_child(tp));
      SignedPermutation del = sigma_t(amb, tp);
      SignedPermutation gam = sigma_t(comp_tp.graph, ttilde);
      for (int k = 1; k <= N; ++k) {
        int lhs = k <= m + p ? tau.image[sig.image[k - 1] - 1] : tau.image[k - 1];
        int rhs = k <= p ? del.image[k - 1] : del.image[p + gam.image[k - p - 1] - 1];
        if (lhs != rhs) return false;
      }
      for (const Tubing& z : Zs)
        for (const Tubing& y : Ys)
          for (const Tubing& x : Xs) {
            // lhs: compose z into y inside K_t, then into x at t
            TubingChain inner1 = circ_signed(z, y, gt.graph, gt.push_to_child(tp));
            TubingChain lhs;
            for (const auto& [S, c] : inner1.terms())
              lhs += circ_signed(S, x, amb, t) * c;
            // rhs: compose y (at the image of t) with x in the complement of
            // t', then insert z at t'
            TubingChain inner2 = circ_signed(y, x, comp_tp.graph, ttilde);
            TubingChain rhs;
            for (const auto& [W, c] : inner2.terms())
              rhs += circ_signed(z, W, amb, tp) * c;
            if (!(lhs == rhs)) return false;
          }
    }
  }
  return true;
}

}  // namespace tubings
