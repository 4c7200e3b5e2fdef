#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tubings/nodeset.hpp"

namespace tubings {

// Simple finite graph on totally ordered nodes 1..n, n <= 64.
// Connectedness is not an invariant: disconnected graphs are legal values,
// the tubing layer decides what to allow on them.
class Graph {
 public:
  static constexpr int kMaxNodes = 64;

  Graph() : n_(0) {}
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph linear(int n);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph edgeless(int n);

  int node_count() const { return n_; }
  NodeSet nodes() const { return NodeSet::full(n_); }
  NodeSet adjacency(int node) const { return adj_[node - 1]; }
  bool has_edge(int u, int v) const { return adj_[u - 1].contains(v); }

  // Union of the neighbourhoods of the members of s (may intersect s).
  NodeSet neighbors_of(NodeSet s) const;

  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  bool is_connected() const;
  bool is_connected_subset(NodeSet s) const;

  // All tubes (non-empty connected node sets) in canonical order.
  std::vector<NodeSet> all_tubes() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator<(const Graph& o) const;

  // Stable textual encoding, used as cache key and for hashing.
  std::string encode() const;

 private:
  int n_;
  std::vector<NodeSet> adj_;
};

// s non-empty and connected in g.
bool is_tube(const Graph& g, NodeSet s);

// Result of cutting a graph down to a node subset: the renumbered graph plus
// the order-preserving relabeling back into the parent.
struct GraphSlice {
  Graph graph;
  std::vector<int> to_parent;  // child node i (1-based) -> parent node

  NodeSet pull_to_parent(NodeSet child) const {
    NodeSet out;
    for (int v : child.to_vector()) out |= NodeSet::single(to_parent[v - 1]);
    return out;
  }

  // Parent nodes not covered by the slice are dropped.
  NodeSet push_to_child(NodeSet parent) const {
    NodeSet out;
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i)
      if (parent.contains(to_parent[i])) out |= NodeSet::single(i + 1);
    return out;
  }
};

// Induced subgraph on tube t, renumbered order-preservingly.
GraphSlice induced_subgraph(const Graph& g, NodeSet t);

// Reconnected complement: nodes outside t; {v,w} is an edge iff it was one in
// g or both v and w are adjacent in g to nodes of t.
GraphSlice reconnected_complement(const Graph& g, NodeSet t);

// Fold of reconnected_complement over pairwise disjoint tubes; the result is
// independent of the order of ts.
GraphSlice iterated_complement(const Graph& g, const std::vector<NodeSet>& ts);

// All labeled connected graphs on 1..max_n nodes, deterministic order.
// Counts are 1, 1, 4, 38, 728 for n = 1..5.
std::vector<Graph> graph_census(int max_n);
std::vector<Graph> connected_graphs(int n);

}  // namespace tubings

template <>
struct std::hash<tubings::Graph> {
  std::size_t operator()(const tubings::Graph& g) const {
    return std::hash<std::string>()(g.encode());
  }
};
