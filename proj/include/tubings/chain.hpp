#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "tubings/substitution.hpp"
#include "tubings/tubing.hpp"

namespace tubings {

using Coeff = boost::multiprecision::cpp_int;

// Integer-coefficient formal sum of tubings of one ambient graph. Zero
// coefficients are never stored; keys are kept in canonical order.
class TubingChain {
 public:
  TubingChain() = default;

  void add(const Tubing& T, const Coeff& c);
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Tubing, Coeff>& terms() const { return terms_; }
  Coeff coefficient(const Tubing& T) const;

  TubingChain& operator+=(const TubingChain& o);
  TubingChain operator*(const Coeff& c) const;
  bool operator==(const TubingChain& o) const { return terms_ == o.terms_; }

 private:
  std::map<Tubing, Coeff> terms_;
};

// sigma_t: tube nodes ascending, then complement nodes ascending.
struct SignedPermutation {
  std::vector<int> image;  // image[k-1] = sigma(k)
  Graph graph;
};

SignedPermutation sigma_t(const Graph& g, NodeSet t);

// (-1)^{# inverted pairs that are edges}: pairs i<j with sigma^{-1}(j) before
// sigma^{-1}(i) and {i,j} an edge of the graph.
int graph_signature(const Graph& g, const SignedPermutation& sigma);

// Position sign of Def. partialcomp (c). S is a tubing of the reconnected
// complement of t; t must not be linked to any proper tube of S. When S has no
// proper tube the value is (-1)^{|t|}, the unique convention under which
// composing with a trivial complement factor is unsigned.
int alpha(const Graph& g, NodeSet t, const Tubing& S);

// Signed partial composition: single term gamma_{t_Gamma}(T_Gamma o_t S, W)
// with coefficient alpha(t,W) * (-1)^{|t|} when t is not linked to any proper
// tube of W and +1 otherwise.
TubingChain circ_signed(const Tubing& S, const Tubing& W, const Graph& g, NodeSet t);

// The unsigned composition tubing and its coefficient.
std::pair<Tubing, int> circ_parts(const Tubing& S, const Tubing& W, const Graph& g, NodeSet t);

// Incidence sign of the cover T u {u} in the boundary of T.
int boundary_sign(const Tubing& T, NodeSet u);

// Boundary operator: sum of all covers T u {u} with incidence signs. Supported
// exactly on the covers of T, all coefficients +-1; the empty chain in
// dimension 0. Satisfies the displayed base case on the trivial tubing and
// boundary(boundary(T)) = 0.
TubingChain boundary(const Tubing& T);

TubingChain boundary_chain(const TubingChain& c);

// Recursive evaluation through the decomposition at a chosen proper tube t:
// the boundaries of T|_t and T_t^* are computed recursively and their covers
// are carried back into the ambient graph (pull-back on the tube side,
// tilde-closure on the complement side). The result is independent of the
// choice of t and agrees with boundary(T).
TubingChain boundary_via_decomposition(const Tubing& T, NodeSet t);

// Tensor factors are tubings or the unit (empty optional).
using TensorFactor = std::optional<Tubing>;

class CoproductChain {
 public:
  void add(const TensorFactor& l, const TensorFactor& r, const Coeff& c);
  const std::map<std::pair<TensorFactor, TensorFactor>, Coeff>& terms() const { return terms_; }
  bool operator==(const CoproductChain& o) const { return terms_ == o.terms_; }

 private:
  std::map<std::pair<TensorFactor, TensorFactor>, Coeff> terms_;
};

// Delta_bullet(T) = sum over t in T of T|_t (x) T_t^*, plus 1 (x) T for the
// empty tube; the universal tube contributes T (x) 1.
CoproductChain prelie_coproduct(const Tubing& T);

// Right pre-Lie co-identity on every tubing of the graph.
bool prelie_identity_check(const Graph& g);

// Relations of the induced operations on linear and complete graphs. Both
// checkers verify the displayed composition identities for all argument
// tubings; on complete graphs every composition coefficient is +1 and the
// identity holds for the signed chains.
bool ns_operad_relation_check(int n, int m, int p);
bool permutad_relation_check(int n, int m, int p);

}  // namespace tubings
