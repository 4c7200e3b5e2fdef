#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tubings {

// Subset of the nodes 1..n of an ambient graph, stored as a 64-bit mask.
// Bit k-1 represents node k.
class NodeSet {
 public:
  constexpr NodeSet() : bits_(0) {}
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}

  static NodeSet single(int node) { return NodeSet(std::uint64_t(1) << (node - 1)); }

  static NodeSet full(int n) {
    return NodeSet(n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
  }

  static NodeSet of(std::initializer_list<int> nodes) {
    std::uint64_t b = 0;
    for (int v : nodes) b |= std::uint64_t(1) << (v - 1);
    return NodeSet(b);
  }

  static NodeSet of_vector(const std::vector<int>& nodes) {
    std::uint64_t b = 0;
    for (int v : nodes) b |= std::uint64_t(1) << (v - 1);
    return NodeSet(b);
  }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  bool contains(int node) const { return (bits_ >> (node - 1)) & 1; }
  bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }
  bool proper_subset_of(NodeSet o) const { return subset_of(o) && bits_ != o.bits_; }

  // Smallest node, 1-based; 0 when empty.
  int min_node() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  int max_node() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

  NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
  NodeSet& operator|=(NodeSet o) { bits_ |= o.bits_; return *this; }
  NodeSet& operator&=(NodeSet o) { bits_ &= o.bits_; return *this; }

  bool operator==(const NodeSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_;
};

// Canonical tube order: by minimal node, then by size, then lexicographic on the
// ascending node lists. For equal minimum and size, the first differing node
// decides, which for masks is the lowest differing bit.
inline bool tube_less(NodeSet a, NodeSet b) {
  if (a.min_node() != b.min_node()) return a.min_node() < b.min_node();
  if (a.count() != b.count()) return a.count() < b.count();
  std::uint64_t d = a.bits() ^ b.bits();
  if (d == 0) return false;
  std::uint64_t low = d & (~d + 1);
  return (a.bits() & low) != 0;
}

}  // namespace tubings
