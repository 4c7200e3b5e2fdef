#include "tubings/graph.hpp"

#include <algorithm>

#include "tubings/errors.hpp"

namespace tubings {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 1) throw InputError("graph must have at least one node");
  if (n > kMaxNodes) throw ResourceError("node count exceeds the 64-node cap");
  adj_.assign(n, NodeSet());
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw InputError("edge endpoint out of range: {" + std::to_string(u) + "," +
                       std::to_string(v) + "}");
    if (u == v) throw InputError("self-loop at node " + std::to_string(u));
    adj_[u - 1] |= NodeSet::single(v);
    adj_[v - 1] |= NodeSet::single(u);
  }
}

Graph Graph::linear(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph Graph::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  if (n > 2) e.push_back({1, n});
  return Graph(n, e);
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

NodeSet Graph::neighbors_of(NodeSet s) const {
  NodeSet out;
  for (int v : s.to_vector()) out |= adj_[v - 1];
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[u - 1].to_vector())
      if (u < v) out.push_back({u, v});
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (const auto& a : adj_) total += a.count();
  return total / 2;
}

bool Graph::is_connected_subset(NodeSet s) const {
  if (s.empty()) return false;
  NodeSet seen = NodeSet::single(s.min_node());
  for (;;) {
    NodeSet frontier = (neighbors_of(seen) & s) - seen;
    if (frontier.empty()) break;
    seen |= frontier;
  }
  return seen == s;
}

bool Graph::is_connected() const { return is_connected_subset(nodes()); }

std::vector<NodeSet> Graph::all_tubes() const {
  if (n_ > 24) throw ResourceError("tube enumeration limited to 24 nodes");
  std::vector<NodeSet> out;
  const std::uint64_t limit = std::uint64_t(1) << n_;
  for (std::uint64_t m = 1; m < limit; ++m) {
    NodeSet s(m);
    if (is_connected_subset(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), tube_less);
  return out;
}

bool Graph::operator<(const Graph& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (int i = 0; i < n_; ++i)
    if (adj_[i].bits() != o.adj_[i].bits()) return adj_[i].bits() < o.adj_[i].bits();
  return false;
}

std::string Graph::encode() const {
  std::string s = "n" + std::to_string(n_);
  for (auto [u, v] : edges()) s += ";" + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

bool is_tube(const Graph& g, NodeSet s) {
  if (!s.subset_of(g.nodes()))
    throw InputError("node set " + s.to_string() + " not within 1.." +
                     std::to_string(g.node_count()));
  return !s.empty() && g.is_connected_subset(s);
}

GraphSlice induced_subgraph(const Graph& g, NodeSet t) {
  if (!is_tube(g, t))
    throw PreconditionError("induced_subgraph requires a tube, got " + t.to_string());
  std::vector<int> to_parent = t.to_vector();
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < static_cast<int>(to_parent.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(to_parent.size()); ++j)
      if (g.has_edge(to_parent[i], to_parent[j])) e.push_back({i + 1, j + 1});
  return {Graph(static_cast<int>(to_parent.size()), e), std::move(to_parent)};
}

GraphSlice reconnected_complement(const Graph& g, NodeSet t) {
  if (!is_tube(g, t))
    throw PreconditionError("reconnected_complement requires a tube, got " + t.to_string());
  NodeSet rest = g.nodes() - t;
  if (rest.empty())
    throw PreconditionError("reconnected complement of the universal tube is empty");
  std::vector<int> to_parent = rest.to_vector();
  NodeSet adj_t = g.neighbors_of(t) & rest;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < static_cast<int>(to_parent.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(to_parent.size()); ++j) {
      int u = to_parent[i], v = to_parent[j];
      if (g.has_edge(u, v) || (adj_t.contains(u) && adj_t.contains(v)))
        e.push_back({i + 1, j + 1});
    }
  return {Graph(static_cast<int>(to_parent.size()), e), std::move(to_parent)};
}

GraphSlice iterated_complement(const Graph& g, const std::vector<NodeSet>& ts) {
  NodeSet seen;
  for (NodeSet t : ts) {
    if (t.intersects(seen)) throw InputError("iterated complement tubes must be disjoint");
    seen |= t;
  }
  GraphSlice cur{g, {}};
  cur.to_parent.resize(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) cur.to_parent[i] = i + 1;
  for (NodeSet t : ts) {
    NodeSet tc = cur.push_to_child(t);
    if (tc.count() != t.count())
      throw InputError("iterated complement tube lost nodes; tubes must be disjoint");
    GraphSlice next = reconnected_complement(cur.graph, tc);
    std::vector<int> combined(next.to_parent.size());
    for (std::size_t i = 0; i < next.to_parent.size(); ++i)
      combined[i] = cur.to_parent[next.to_parent[i] - 1];
    cur.graph = std::move(next.graph);
    cur.to_parent = std::move(combined);
  }
  return cur;
}

std::vector<Graph> connected_graphs(int n) {
  if (n > 6) throw ResourceError("graph census limited to 6 nodes");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  std::vector<Graph> out;
  const std::uint64_t limit = std::uint64_t(1) << pairs.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((bits >> k) & 1) e.push_back(pairs[k]);
    Graph g(n, e);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> graph_census(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto gs = connected_graphs(n);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

}  // namespace tubings
