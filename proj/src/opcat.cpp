#include "tubings/opcat.hpp"

#include <algorithm>

#include "tubings/errors.hpp"

namespace tubings {

OcdMorphism OcdMorphism::checked(const Tubing& T, const Tubing& S) {
  if (!(T.graph() == S.graph())) throw InputError("morphisms require one ambient graph");
  if (!poset_leq(T, S))
    throw PreconditionError("no morphism: target tubes must be a subset of the source");
  return {T, S};
}

std::vector<NodeSet> tube_numbering(const Tubing& T) { return T.numbering_order(); }

int tube_number(const Tubing& T, NodeSet t) {
  std::vector<NodeSet> order = T.numbering_order();
  auto it = std::find(order.begin(), order.end(), t);
  if (it == order.end()) throw InputError("tube not in the tubing");
  return static_cast<int>(it - order.begin()) + 1;
}

std::vector<int> cardinality_of_morphism(const OcdMorphism& f) {
  std::vector<NodeSet> src = f.source.numbering_order();
  std::vector<NodeSet> tgt = f.target.numbering_order();
  std::vector<int> out;
  out.reserve(src.size());
  for (NodeSet t : src) {
    NodeSet best;
    int best_size = Graph::kMaxNodes + 1;
    for (NodeSet s : tgt)
      if (t.subset_of(s) && s.count() < best_size) { best = s; best_size = s.count(); }
    out.push_back(static_cast<int>(std::find(tgt.begin(), tgt.end(), best) - tgt.begin()) + 1);
  }
  return out;
}

OcdObject fiber(const OcdMorphism& f, int i) {
  std::vector<NodeSet> tgt = f.target.numbering_order();
  if (i < 1 || i > static_cast<int>(tgt.size()))
    throw InputError("fiber index out of range");
  NodeSet s = tgt[i - 1];
  // Restrict both tubings to s, then remove the maximal proper tubes of S|_s.
  Tubing Ts = *restrict_to_tube(f.source, s);
  Tubing Ss = *restrict_to_tube(f.target, s);
  std::vector<NodeSet> maxt = Ss.maximal_proper_tubes();
  Tubing induced = induce_on_iterated_complement(Ts, maxt);
  return {induced};
}

OcdMorphism fiber_morphism(const OcdMorphism& f, const OcdMorphism& g, int i) {
  if (!(f.target == g.source)) throw InputError("morphisms do not compose");
  OcdMorphism gf = OcdMorphism::checked(f.source, g.target);
  OcdObject from = fiber(gf, i);
  OcdObject to = fiber(g, i);
  return OcdMorphism::checked(from.tubing, to.tubing);
}

bool AxiomReport::all_passed() const {
  for (const Entry& e : entries)
    if (e.failures) return false;
  return true;
}

namespace {

// All tubings S with S's tubes a subset of T's tubes (valid automatically).
std::vector<Tubing> coarsenings(const Tubing& T) {
  std::vector<NodeSet> proper = T.proper_tubes();
  std::vector<Tubing> out;
  const std::uint64_t limit = std::uint64_t(1) << proper.size();
  for (std::uint64_t m = 0; m < limit; ++m) {
    std::vector<NodeSet> tubes{T.universal()};
    for (std::size_t k = 0; k < proper.size(); ++k)
      if ((m >> k) & 1) tubes.push_back(proper[k]);
    out.push_back(Tubing::trusted(T.graph(), std::move(tubes)));
  }
  return out;
}

std::string describe(const Tubing& a, const Tubing& b) {
  return a.to_string() + " -> " + b.to_string();
}

}  // namespace

AxiomReport axiom_suite(const Graph& g) {
  if (g.node_count() > 4) throw ResourceError("axiom suite limited to 4 nodes");
  AxiomReport report;
  AxiomReport::Entry terminal{"terminal-cardinality", 0, 0, ""};
  AxiomReport::Entry identity{"identity-fibers-terminal", 0, 0, ""};
  AxiomReport::Entry cards{"fiber-cardinality", 0, 0, ""};
  AxiomReport::Entry functorial{"fiber-functoriality", 0, 0, ""};
  AxiomReport::Entry compat{"fiber-compatibility", 0, 0, ""};
  AxiomReport::Entry nested{"nested-fiber-morphisms", 0, 0, ""};

  // (ii) terminal objects have cardinality [1]
  terminal.cases++;
  if (tube_numbering(Tubing::trivial(g)).size() != 1) {
    terminal.failures++;
    terminal.counterexample = "trivial tubing";
  }

  for (const Tubing& T : enumerate_tubings(g)) {
    // (iii) identity fibers are terminal
    OcdMorphism idT = OcdMorphism::identity(T);
    for (int i = 1; i <= T.size(); ++i) {
      identity.cases++;
      OcdObject fb = fiber(idT, i);
      if (fb.tubing.size() != 1) {
        identity.failures++;
        if (identity.counterexample.empty())
          identity.counterexample = T.to_string() + " i=" + std::to_string(i);
      }
    }
    for (const Tubing& S : coarsenings(T)) {
      OcdMorphism f = OcdMorphism::checked(T, S);
      std::vector<int> card_f = cardinality_of_morphism(f);
      // (c) |f^{-1}(i)| = |f|^{-1}(i)
      for (int i = 1; i <= S.size(); ++i) {
        cards.cases++;
        long long preimage = std::count(card_f.begin(), card_f.end(), i);
        if (fiber(f, i).tubing.size() != preimage) {
          cards.failures++;
          if (cards.counterexample.empty())
            cards.counterexample = describe(T, S) + " i=" + std::to_string(i);
        }
      }
      for (const Tubing& Q : coarsenings(S)) {
        OcdMorphism gmor = OcdMorphism::checked(S, Q);
        OcdMorphism gf = OcdMorphism::checked(T, Q);
        std::vector<int> card_g = cardinality_of_morphism(gmor);
        std::vector<int> card_gf = cardinality_of_morphism(gf);
        for (int i = 1; i <= Q.size(); ++i) {
          // (iv) f_i exists with the natural cardinality restriction, and
          // Fib_i is functorial: (g o f)^{-1}(i) -> g^{-1}(i).
          functorial.cases++;
          OcdMorphism fi = fiber_morphism(f, gmor, i);
          // |f_i| must match the restriction of |f| to |g o f|^{-1}(i).
          std::vector<int> restricted;
          std::vector<int> tgt_positions;
          for (std::size_t k = 0; k < card_gf.size(); ++k)
            if (card_gf[k] == i) restricted.push_back(card_f[k]);
          for (std::size_t k = 0; k < card_g.size(); ++k)
            if (card_g[k] == i) tgt_positions.push_back(static_cast<int>(k) + 1);
          std::vector<int> expected;
          for (int v : restricted)
            expected.push_back(
                static_cast<int>(std::find(tgt_positions.begin(), tgt_positions.end(), v) -
                                 tgt_positions.begin()) +
                1);
          if (cardinality_of_morphism(fi) != expected) {
            functorial.failures++;
            if (functorial.counterexample.empty())
              functorial.counterexample = describe(T, S) + ", " + describe(S, Q);
          }
          // (v) f^{-1}(j) = f_i^{-1}(j) for j with |g|(j) = i
          for (int j = 1; j <= S.size(); ++j) {
            if (card_g[j - 1] != i) continue;
            compat.cases++;
            int j_in_fi = static_cast<int>(std::find(tgt_positions.begin(), tgt_positions.end(), j) -
                                           tgt_positions.begin()) +
                          1;
            if (!(fiber(f, j) == fiber(fi, j_in_fi))) {
              compat.failures++;
              if (compat.counterexample.empty())
                compat.counterexample =
                    describe(T, S) + ", " + describe(S, Q) + " j=" + std::to_string(j);
            }
          }
        }
        // (vi) (f_i)_j = f_j over chains of three morphisms
        for (const Tubing& R : coarsenings(Q)) {
          OcdMorphism h = OcdMorphism::checked(Q, R);
          std::vector<int> card_h = cardinality_of_morphism(h);
          for (int i = 1; i <= R.size(); ++i) {
            OcdMorphism fi = fiber_morphism(f, OcdMorphism::checked(S, R), i);
            OcdMorphism gi = fiber_morphism(gmor, h, i);
            // positions of Q's tubes inside h^{-1}(i)
            std::vector<int> q_positions;
            for (std::size_t k = 0; k < card_h.size(); ++k)
              if (card_h[k] == i) q_positions.push_back(static_cast<int>(k) + 1);
            for (int j : q_positions) {
              nested.cases++;
              int j_local =
                  static_cast<int>(std::find(q_positions.begin(), q_positions.end(), j) -
                                   q_positions.begin()) +
                  1;
              OcdMorphism fij = fiber_morphism(fi, gi, j_local);
              OcdMorphism fj = fiber_morphism(f, gmor, j);
              if (!(fij.source == fj.source && fij.target == fj.target)) {
                nested.failures++;
                if (nested.counterexample.empty())
                  nested.counterexample = describe(T, S) + ", " + describe(S, Q) + ", " +
                                          describe(Q, R) + " i=" + std::to_string(i) +
                                          " j=" + std::to_string(j);
              }
            }
          }
        }
      }
    }
  }
  report.entries = {terminal, identity, cards, functorial, compat, nested};
  return report;
}

bool complete_graph_fiber_check(int n) {
  Graph K = Graph::complete(n);
  for (const Tubing& T : enumerate_tubings(K)) {
    std::vector<int> xT = to_surjection(T);
    for (const Tubing& S : coarsenings(T)) {
      OcdMorphism f = OcdMorphism::checked(T, S);
      std::vector<int> xS = to_surjection(S);
      std::vector<int> card = cardinality_of_morphism(f);
      // |f| composed with x_T recovers x_S.
      for (int v = 1; v <= n; ++v)
        if (card[xT[v - 1] - 1] != xS[v - 1]) return false;
      for (int i = 1; i <= S.size(); ++i) {
        OcdObject fb = fiber(f, i);
        std::vector<int> xf = to_surjection(fb.tubing);
        // Restriction of x_T to the i-th block of x_S, with values compressed
        // order-preservingly.
        std::vector<int> domain, values;
        for (int v = 1; v <= n; ++v)
          if (xS[v - 1] == i) domain.push_back(v);
        std::vector<int> sorted_vals;
        for (int v : domain) sorted_vals.push_back(xT[v - 1]);
        std::sort(sorted_vals.begin(), sorted_vals.end());
        sorted_vals.erase(std::unique(sorted_vals.begin(), sorted_vals.end()),
                          sorted_vals.end());
        for (std::size_t k = 0; k < domain.size(); ++k) {
          int expected = static_cast<int>(std::find(sorted_vals.begin(), sorted_vals.end(),
                                                    xT[domain[k] - 1]) -
                                          sorted_vals.begin()) +
                         1;
          if (xf[k] != expected) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace tubings
