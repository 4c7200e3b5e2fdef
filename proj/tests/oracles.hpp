#pragma once

// Brute-force oracles, kept independent of the library's enumeration and sign
// machinery: subsets are filtered directly against the definitions.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tubings/tubing.hpp"

namespace oracle {

using tubings::Graph;
using tubings::NodeSet;

// Pairwise compatibility straight from the definition: nested, or disjoint
// with no connecting edge.
inline bool compatible(const Graph& g, NodeSet a, NodeSet b) {
  if (a.subset_of(b) || b.subset_of(a)) return true;
  if (a.intersects(b)) return false;
  return !g.neighbors_of(a).intersects(b);
}

// Every subset of the proper tubes, filtered by pairwise compatibility, plus
// the universal tube. Exponential, fine at desk scale.
inline std::vector<std::vector<NodeSet>> all_tubings(const Graph& g) {
  std::vector<NodeSet> proper;
  for (NodeSet t : g.all_tubes())
    if (!(t == g.nodes())) proper.push_back(t);
  std::vector<std::vector<NodeSet>> out;
  const std::uint64_t limit = std::uint64_t(1) << proper.size();
  for (std::uint64_t m = 0; m < limit; ++m) {
    std::vector<NodeSet> family;
    for (std::size_t k = 0; k < proper.size(); ++k)
      if ((m >> k) & 1) family.push_back(proper[k]);
    bool ok = true;
    for (std::size_t i = 0; i < family.size() && ok; ++i)
      for (std::size_t j = i + 1; j < family.size() && ok; ++j)
        ok = compatible(g, family[i], family[j]);
    if (!ok) continue;
    family.push_back(g.nodes());
    out.push_back(std::move(family));
  }
  return out;
}

inline long long count_tubings(const Graph& g) {
  return static_cast<long long>(all_tubings(g).size());
}

inline std::vector<long long> f_vector(const Graph& g) {
  std::vector<long long> out(g.node_count(), 0);
  for (const auto& fam : all_tubings(g))
    out[g.node_count() - static_cast<int>(fam.size())] += 1;
  return out;
}

}  // namespace oracle
