#pragma once

#include <vector>

#include "tubings/tubing.hpp"

namespace tubings {

// The fiber of tube t in T: the iterated reconnected complement of the induced
// subgraph on t by the maximal tubes of T strictly inside t. Substitution
// arguments for slot t live on this graph; to_parent maps back to ambient
// coordinates.
GraphSlice fiber_slice(const Tubing& T, NodeSet t);

// T o_t S: union of T with S pulled back into ambient coordinates.
// S must be a tubing of the induced subgraph on t compatible with T|_t.
Tubing insert_in_tube(const Tubing& T, NodeSet t, const Tubing& S);

// T (diamond) S: tubes of S not linked to t pass through, tubes linked to t
// absorb it. S must be a tubing of the reconnected complement compatible with
// the induced tubing T_t^*.
Tubing insert_in_complement(const Tubing& T, NodeSet t, const Tubing& S);

// Minimal tube containing s (a tube of the iterated complement of T, given in
// ambient coordinates) such that adding it to T keeps a tubing: s plus the
// maximal proper tubes of T linked to it.
NodeSet tilde_closure(const Tubing& T, NodeSet s_ambient);

// t-substitution: T plus the tilde-closure inside t of every tube of S, where
// S is a tubing of the fiber of t.
Tubing gamma_t(const Tubing& T, NodeSet t, const Tubing& S);

// Tubes of a tubing given a total labelling t^0 = universal, t^1, ..., t^k.
// The default labelling follows the recursive numbering: the universal tube is
// slot 0 and slot i holds the tube with number i.
struct LabeledTubing {
  Tubing base;
  std::vector<NodeSet> labels;

  static LabeledTubing with_default_labels(const Tubing& T);
  static LabeledTubing with_labels(const Tubing& T, std::vector<NodeSet> labels);
};

// Full substitution: fold gamma_t over the slots in label order. Arguments are
// checked against the fiber graph of their slot; the result is independent of
// the label order for a fixed slot assignment.
Tubing gamma_full(const LabeledTubing& T, const std::vector<Tubing>& args);

// Proper tubes of T ordered so that replaying single-tube substitutions
// gamma_{t_Gamma}(-, {u}) from the trivial tubing rebuilds T.
std::vector<NodeSet> generator_decomposition(const Tubing& T);

// Replay a generator sequence from the trivial tubing.
Tubing replay_generators(const Graph& g, const std::vector<NodeSet>& gens);

}  // namespace tubings
