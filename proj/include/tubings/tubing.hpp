#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tubings/graph.hpp"

namespace tubings {

enum class PairClass { nested, far_apart, linked, intersecting };

std::string to_string(PairClass c);

// Classification of a pair of distinct tubes: nested (one contains the other),
// far apart (disjoint, no connecting edge), linked (disjoint with an edge) or
// intersecting (overlapping, neither nested).
PairClass classify_pair(const Graph& g, NodeSet t, NodeSet u);

inline bool tubes_compatible(const Graph& g, NodeSet t, NodeSet u) {
  if (t == u) return true;
  PairClass c = classify_pair(g, t, u);
  return c == PairClass::nested || c == PairClass::far_apart;
}

// Every element a tube, the universal tube present, all pairs compatible.
bool is_tubing(const Graph& g, const std::vector<NodeSet>& tubes);

// Sort into canonical tube order and drop duplicates.
std::vector<NodeSet> canonical_union(std::vector<NodeSet> tubes);

// Compatible tube family on a connected graph, containing the universal tube.
// Tubes are held in canonical order (min node, size, lexicographic).
class Tubing {
 public:
  // Validating constructor; throws PreconditionError on violations.
  static Tubing checked(const Graph& g, std::vector<NodeSet> tubes);
  // Trusted constructors for values produced by the library itself; in debug
  // builds they re-validate.
  static Tubing trusted(const Graph& g, std::vector<NodeSet> tubes);
  static Tubing trivial(const Graph& g);

  const Graph& graph() const { return graph_; }
  const std::vector<NodeSet>& tubes() const { return tubes_; }
  int size() const { return static_cast<int>(tubes_.size()); }
  int dimension() const { return graph_.node_count() - size(); }
  NodeSet universal() const { return graph_.nodes(); }
  bool contains(NodeSet t) const;

  std::vector<NodeSet> proper_tubes() const;
  // Inclusion-maximal proper tubes.
  std::vector<NodeSet> maximal_proper_tubes() const;
  // Maximal tubes of the restriction to s: inclusion-maximal tubes strictly inside s.
  std::vector<NodeSet> maximal_tubes_inside(NodeSet s) const;

  // Tubes in the recursive numbering order: innermost tubes first by minimal
  // node, then the tubes surviving into the iterated complement, recursively.
  std::vector<NodeSet> numbering_order() const;

  // Free nodes of tube s: members of s in no tube of the tubing strictly inside s.
  NodeSet free_nodes(NodeSet s) const;

  bool operator==(const Tubing& o) const { return graph_ == o.graph_ && tubes_ == o.tubes_; }
  bool operator<(const Tubing& o) const;

  std::string to_string() const;
  std::string encode() const;

 private:
  Tubing(Graph g, std::vector<NodeSet> tubes) : graph_(std::move(g)), tubes_(std::move(tubes)) {}
  Graph graph_;
  std::vector<NodeSet> tubes_;
};

// All tubings of a connected graph, canonical deterministic order. The
// parallel mode splits the search over first-tube branches; its output is
// identical to the sequential one.
std::vector<Tubing> enumerate_tubings(const Graph& g, bool parallel = false);

// Entry r counts the faces of dimension r, i.e. the (n-r)-tubings.
std::vector<long long> f_vector(const Graph& g);

// Restriction T|_t. For t in T this is the tubing of tubes inside t. For other
// tubes t the family of tubes of T inside t is completed with the universal
// tube of the slice; when that family is empty the result is the empty marker
// (nullopt), never an empty Tubing.
std::optional<Tubing> restrict_to_tube(const Tubing& T, NodeSet t);

// Induced tubing T_t^* on the reconnected complement. Requires T u {t} to be a
// tubing; otherwise the Remark-style failure is signalled as a precondition
// error.
Tubing induce_on_complement(const Tubing& T, NodeSet t);

// Induce by removing several pairwise disjoint tubes, each compatible with T.
Tubing induce_on_iterated_complement(const Tubing& T, const std::vector<NodeSet>& ts);

// T <= T' iff T' is a subset of T as tube sets (T refines T').
bool poset_leq(const Tubing& T, const Tubing& Tp);

// Natural surjection Tub(Gamma) -> Tub(Omega) for Edg(Omega) within Edg(Gamma):
// each tube maps to its connected components in Omega.
Tubing restriction_map(const Tubing& T, const Graph& omega);

// Bijection with surjective maps for complete graphs.
std::vector<int> to_surjection(const Tubing& T);
Tubing from_surjection(const Graph& complete_graph, const std::vector<int>& x);

// All unions of tube subfamilies plus the empty set.
std::vector<NodeSet> generated_topology(const Tubing& T);

// Topological-basis predicate: covers the nodes and pairwise intersections are
// covered by basis elements inside them.
bool is_topological_basis(const Graph& g, const std::vector<NodeSet>& basis);

// Connectivity condition of the basis characterisation: every edge of g or of
// a reconnected complement g_t^* for t in the basis spans a connected
// two-point subspace.
bool satisfies_connectivity_condition(const Graph& g, const std::vector<NodeSet>& basis);

// Exhaustive equivalence: a tube collection is a tubing iff it is a basis
// satisfying the connectivity condition. Checks every collection of tubes.
bool tubing_iff_basis_check(const Graph& g);

}  // namespace tubings

template <>
struct std::hash<tubings::Tubing> {
  std::size_t operator()(const tubings::Tubing& t) const {
    return std::hash<std::string>()(t.encode());
  }
};
