#include "tubings/substitution.hpp"

#include <algorithm>
#include <cassert>

#include "tubings/errors.hpp"

namespace tubings {

GraphSlice fiber_slice(const Tubing& T, NodeSet t) {
  if (!T.contains(t)) throw PreconditionError("fiber_slice: tube not in the tubing");
  GraphSlice inner = induced_subgraph(T.graph(), t);
  std::vector<NodeSet> maxt;
  for (NodeSet m : T.maximal_tubes_inside(t)) maxt.push_back(inner.push_to_child(m));
  GraphSlice fiber = iterated_complement(inner.graph, maxt);
  std::vector<int> to_parent(fiber.to_parent.size());
  for (std::size_t i = 0; i < fiber.to_parent.size(); ++i)
    to_parent[i] = inner.to_parent[fiber.to_parent[i] - 1];
  return {std::move(fiber.graph), std::move(to_parent)};
}

Tubing insert_in_tube(const Tubing& T, NodeSet t, const Tubing& S) {
  if (!T.contains(t)) throw PreconditionError("insert_in_tube: tube not in the tubing");
  GraphSlice slice = induced_subgraph(T.graph(), t);
  if (!(S.graph() == slice.graph))
    throw InputError("insert_in_tube: argument lives on " + S.graph().encode() +
                     ", expected " + slice.graph.encode());
  std::vector<NodeSet> tubes = T.tubes();
  for (NodeSet s : S.tubes()) tubes.push_back(slice.pull_to_parent(s));
  // Compatibility of S with T|_t is exactly validity of the union.
  if (!is_tubing(T.graph(), canonical_union(tubes)))
    throw PreconditionError("insert_in_tube: argument incompatible with the restriction");
  return Tubing::trusted(T.graph(), std::move(tubes));
}

Tubing insert_in_complement(const Tubing& T, NodeSet t, const Tubing& S) {
  if (!T.contains(t)) throw PreconditionError("insert_in_complement: tube not in the tubing");
  GraphSlice slice = reconnected_complement(T.graph(), t);
  if (!(S.graph() == slice.graph))
    throw InputError("insert_in_complement: argument lives on " + S.graph().encode() +
                     ", expected " + slice.graph.encode());
  // S must be compatible with the induced tubing.
  Tubing induced = induce_on_complement(T, t);
  std::vector<NodeSet> probe = induced.tubes();
  for (NodeSet s : S.tubes()) probe.push_back(s);
  if (!is_tubing(slice.graph, canonical_union(probe)))
    throw PreconditionError("insert_in_complement: argument incompatible with the induced tubing");
  std::vector<NodeSet> tubes = T.tubes();
  for (NodeSet s : S.tubes()) {
    NodeSet sp = slice.pull_to_parent(s);
    if (T.graph().neighbors_of(sp).intersects(t)) sp |= t;
    tubes.push_back(sp);
  }
  return Tubing::trusted(T.graph(), std::move(tubes));
}

NodeSet tilde_closure(const Tubing& T, NodeSet s_ambient) {
  NodeSet out = s_ambient;
  NodeSet nbr = T.graph().neighbors_of(s_ambient);
  for (NodeSet m : T.maximal_proper_tubes())
    if (nbr.intersects(m)) out |= m;
  return out;
}

Tubing gamma_t(const Tubing& T, NodeSet t, const Tubing& S) {
  if (!T.contains(t)) throw PreconditionError("gamma_t: tube not in the tubing");
  GraphSlice fiber = fiber_slice(T, t);
  if (!(S.graph() == fiber.graph))
    throw InputError("gamma_t: argument lives on " + S.graph().encode() +
                     ", expected the fiber " + fiber.graph.encode());
  // Closure inside Gamma_t: absorb maximal tubes of T strictly inside t that
  // are linked to the inserted tube.
  std::vector<NodeSet> maxt = T.maximal_tubes_inside(t);
  std::vector<NodeSet> tubes = T.tubes();
  for (NodeSet s : S.tubes()) {
    NodeSet sp = fiber.pull_to_parent(s);
    NodeSet nbr = T.graph().neighbors_of(sp);
    for (NodeSet m : maxt)
      if (nbr.intersects(m)) sp |= m;
    tubes.push_back(sp);
  }
  assert(is_tubing(T.graph(), canonical_union(tubes)));
  return Tubing::trusted(T.graph(), std::move(tubes));
}

LabeledTubing LabeledTubing::with_default_labels(const Tubing& T) {
  std::vector<NodeSet> order = T.numbering_order();
  std::vector<NodeSet> labels;
  labels.push_back(T.universal());
  for (NodeSet t : order)
    if (t != T.universal()) labels.push_back(t);
  return {T, std::move(labels)};
}

LabeledTubing LabeledTubing::with_labels(const Tubing& T, std::vector<NodeSet> labels) {
  if (static_cast<int>(labels.size()) != T.size())
    throw InputError("labelling must enumerate every tube once");
  if (!(labels.front() == T.universal()))
    throw InputError("slot 0 of a labelling is the universal tube");
  std::vector<NodeSet> sorted = labels;
  std::sort(sorted.begin(), sorted.end(), tube_less);
  if (!(sorted == T.tubes())) throw InputError("labelling must enumerate every tube once");
  return {T, std::move(labels)};
}

Tubing gamma_full(const LabeledTubing& T, const std::vector<Tubing>& args) {
  if (args.size() != T.labels.size())
    throw InputError("gamma_full: expected " + std::to_string(T.labels.size()) +
                     " arguments, got " + std::to_string(args.size()));
  // Fibers are computed from the original tubing; they are stable under the
  // substitutions performed at the other slots.
  for (std::size_t i = 0; i < args.size(); ++i) {
    GraphSlice fiber = fiber_slice(T.base, T.labels[i]);
    if (!(args[i].graph() == fiber.graph))
      throw InputError("gamma_full: slot " + std::to_string(i) + " expects a tubing of " +
                       fiber.graph.encode() + ", got " + args[i].graph().encode());
  }
  Tubing acc = T.base;
  for (std::size_t i = 0; i < args.size(); ++i) acc = gamma_t(acc, T.labels[i], args[i]);
  return acc;
}

std::vector<NodeSet> generator_decomposition(const Tubing& T) {
  // Subsets must be inserted before their supersets; size-ascending order
  // guarantees that, canonical order breaks ties.
  std::vector<NodeSet> gens = T.proper_tubes();
  std::stable_sort(gens.begin(), gens.end(),
                   [](NodeSet a, NodeSet b) { return a.count() < b.count(); });
  return gens;
}

Tubing replay_generators(const Graph& g, const std::vector<NodeSet>& gens) {
  Tubing acc = Tubing::trivial(g);
  for (NodeSet u : gens) {
    GraphSlice fiber = fiber_slice(acc, g.nodes());
    NodeSet free = fiber.push_to_child(u);
    if (free.empty())
      throw PreconditionError("generator " + u.to_string() + " lies inside earlier tubes");
    if (!is_tube(fiber.graph, free))
      throw PreconditionError("generator " + u.to_string() +
                              " is not a tube of the current complement");
    Tubing arg = Tubing::trusted(fiber.graph, {free, fiber.graph.nodes()});
    Tubing next = gamma_t(acc, g.nodes(), arg);
    if (!next.contains(u))
      throw PreconditionError("generator replay produced a different closure for " +
                              u.to_string());
    acc = std::move(next);
  }
  return acc;
}

}  // namespace tubings
