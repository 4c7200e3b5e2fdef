#pragma once

#include <string>
#include <vector>

#include "tubings/substitution.hpp"
#include "tubings/tubing.hpp"

namespace tubings {

// Object of the operadic category: a connected graph with a tubing.
struct OcdObject {
  Tubing tubing;

  const Graph& graph() const { return tubing.graph(); }
  bool operator==(const OcdObject& o) const { return tubing == o.tubing; }
};

// The unique arrow iota_{Gamma,T,S}; exists exactly when S is a subset of T as
// tube sets (T refines S).
struct OcdMorphism {
  Tubing source;  // T
  Tubing target;  // S

  static OcdMorphism checked(const Tubing& T, const Tubing& S);
  static OcdMorphism identity(const Tubing& T) { return {T, T}; }
};

// The recursive numbering of the tubes: innermost tubes first by minimal node,
// then the survivors in the iterated complement with an offset. Returns the
// tubes in numbering order; the number of a tube is its 1-based position.
std::vector<NodeSet> tube_numbering(const Tubing& T);
int tube_number(const Tubing& T, NodeSet t);

// |iota|(k) = number in S of the minimal tube of S containing the k-th tube
// of T. Entry k-1 of the result holds |iota|(k).
std::vector<int> cardinality_of_morphism(const OcdMorphism& f);

// Fiber over index i: the fiber graph of the i-th tube s of S with the tubing
// induced from T|_s.
OcdObject fiber(const OcdMorphism& f, int i);

// Induced morphism between fibers of g o f and g over index i of g's target.
OcdMorphism fiber_morphism(const OcdMorphism& f, const OcdMorphism& g, int i);

struct AxiomReport {
  struct Entry {
    std::string axiom;
    long long cases = 0;
    long long failures = 0;
    std::string counterexample;  // empty when the axiom holds
  };
  std::vector<Entry> entries;
  bool all_passed() const;
};

// Verifies the strict-operadic-category axioms over every chain
// T <= S <= Q <= R of tubings of the graph: terminal cardinalities, identity
// fibers, fiber cardinalities, functoriality of Fib_i, fiber compatibility and
// the (f_i)_j = f_j condition.
AxiomReport axiom_suite(const Graph& g);

// On complete graphs morphisms are surjection compositions; checks that every
// fiber agrees with the surjection picture.
bool complete_graph_fiber_check(int n);

}  // namespace tubings
