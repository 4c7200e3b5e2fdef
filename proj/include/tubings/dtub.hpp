#pragma once

#include <map>
#include <string>
#include <vector>

#include "tubings/chain.hpp"

namespace tubings {

// One connected component of a disconnected-graph tubing. A reduced component
// stands for the proper-tube part of its tubing; the universal tube stays in
// storage so reduction is loss-free.
struct DComponent {
  Tubing tubing;
  bool reduced = false;

  bool operator==(const DComponent& o) const {
    return tubing == o.tubing && reduced == o.reduced;
  }
  bool operator<(const DComponent& o) const {
    if (!(tubing == o.tubing)) return tubing < o.tubing;
    return reduced < o.reduced;
  }
};

// Tubing of an ordered disjoint union of connected graphs. With two or more
// components at least one must be reduced; a single component is full.
class DTubing {
 public:
  static DTubing checked(std::vector<DComponent> components);
  static DTubing of_connected(const Tubing& T);

  const std::vector<DComponent>& components() const { return components_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  int total_nodes() const;

  int def_count() const;  // number of reduced components
  int degree() const;     // sum of component dimensions plus max(0, def-1)

  bool operator==(const DTubing& o) const { return components_ == o.components_; }
  bool operator<(const DTubing& o) const;

  std::string to_string() const;

 private:
  explicit DTubing(std::vector<DComponent> c) : components_(std::move(c)) {}
  std::vector<DComponent> components_;
};

class DChain {
 public:
  void add(const DTubing& T, const Coeff& c);
  bool empty() const { return terms_.empty(); }
  const std::map<DTubing, Coeff>& terms() const { return terms_; }

  DChain& operator+=(const DChain& o);
  DChain operator*(const Coeff& c) const;
  bool operator==(const DChain& o) const { return terms_ == o.terms_; }

 private:
  std::map<DTubing, Coeff> terms_;
};

// The three associative products. Each returns a single basis element or the
// zero chain in the guarded cases.
DChain vdash(const DTubing& x, const DTubing& y);   // x |- y
DChain dashv(const DTubing& x, const DTubing& y);   // x -| y
DChain times(const DTubing& x, const DTubing& y);   // x (x) y

DChain vdash(const DChain& x, const DChain& y);
DChain dashv(const DChain& x, const DChain& y);
DChain times(const DChain& x, const DChain& y);

enum class TriasOp { vdash, dashv, times };

// First step of the right-comb decomposition: the leading generator, the
// operation, and the remaining factor. Re-evaluating the full comb reproduces
// the element exactly. Single components are generators (no decomposition).
struct DecompStep {
  TriasOp op;
  DTubing head;  // connected full generator
  DTubing tail;
};

DecompStep canonical_decompose(const DTubing& T);

// Differential: the boundary operator on generators, extended through the
// canonical decomposition by the graded Leibniz rules of the three products.
DChain differential(const DTubing& T);
DChain differential(const DChain& c);

// The seven product relations plus associativity of each product on all
// triples drawn from the sample.
bool trias_relation_check(const std::vector<DTubing>& sample);

// Connected-sum graph: disjoint union plus one edge from the largest free node
// of T to the smallest (offset) free node of S.
Graph join_graph(const Tubing& T, const Tubing& S);

// L-algebra operations on connected tubings, valued in the joined graph.
Tubing l_right(const Tubing& T, const Tubing& S);  // T |> S
Tubing l_left(const Tubing& T, const Tubing& S);   // T <| S
Tubing l_perp(const Tubing& T, const Tubing& S);   // T _|_ S

}  // namespace tubings
