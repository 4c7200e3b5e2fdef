#include "tubings/dtub.hpp"

#include <algorithm>

#include "tubings/errors.hpp"

namespace tubings {

DTubing DTubing::checked(std::vector<DComponent> components) {
  if (components.empty()) throw PreconditionError("a dtubing needs at least one component");
  for (const DComponent& c : components)
    if (!c.tubing.graph().is_connected())
      throw PreconditionError("dtubing components must be connected");
  if (components.size() == 1) {
    if (components[0].reduced)
      throw PreconditionError("a single-component dtubing must be full");
  } else {
    bool any = false;
    for (const DComponent& c : components) any = any || c.reduced;
    if (!any) throw PreconditionError("a dtubing with several components needs a reduced one");
  }
  return DTubing(std::move(components));
}

DTubing DTubing::of_connected(const Tubing& T) { return DTubing({DComponent{T, false}}); }

int DTubing::total_nodes() const {
  int n = 0;
  for (const DComponent& c : components_) n += c.tubing.graph().node_count();
  return n;
}

int DTubing::def_count() const {
  int d = 0;
  for (const DComponent& c : components_) d += c.reduced ? 1 : 0;
  return d;
}

int DTubing::degree() const {
  int dim = 0;
  for (const DComponent& c : components_) dim += c.tubing.dimension();
  return dim + std::max(0, def_count() - 1);
}

bool DTubing::operator<(const DTubing& o) const {
  return components_ < o.components_;
}

std::string DTubing::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += " | ";
    s += components_[i].tubing.to_string();
    if (components_[i].reduced) s += "-";
  }
  return s + ")";
}

void DChain::add(const DTubing& T, const Coeff& c) {
  if (c == 0) return;
  auto it = terms_.find(T);
  if (it == terms_.end()) {
    terms_.emplace(T, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

DChain& DChain::operator+=(const DChain& o) {
  for (const auto& [T, c] : o.terms_) add(T, c);
  return *this;
}

DChain DChain::operator*(const Coeff& c) const {
  DChain out;
  if (c == 0) return out;
  for (const auto& [T, k] : terms_) out.add(T, k * c);
  return out;
}

namespace {

std::vector<DComponent> fullified(const std::vector<DComponent>& cs) {
  std::vector<DComponent> out = cs;
  for (DComponent& c : out) c.reduced = false;
  return out;
}

std::vector<DComponent> reduce_single(const std::vector<DComponent>& cs) {
  std::vector<DComponent> out = cs;
  out[0].reduced = true;
  return out;
}

std::vector<DComponent> concat(std::vector<DComponent> a, const std::vector<DComponent>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

DChain vdash(const DTubing& x, const DTubing& y) {
  DChain out;
  if (x.def_count() > 1) return out;
  const auto& ys = y.components();
  std::vector<DComponent> right = ys.size() == 1 ? reduce_single(ys) : ys;
  out.add(DTubing::checked(concat(fullified(x.components()), right)), 1);
  return out;
}

DChain dashv(const DTubing& x, const DTubing& y) {
  DChain out;
  if (y.def_count() > 1) return out;
  const auto& xs = x.components();
  std::vector<DComponent> left = xs.size() == 1 ? reduce_single(xs) : xs;
  out.add(DTubing::checked(concat(left, fullified(y.components()))), 1);
  return out;
}

DChain times(const DTubing& x, const DTubing& y) {
  const auto& xs = x.components();
  const auto& ys = y.components();
  std::vector<DComponent> left = xs.size() == 1 ? reduce_single(xs) : xs;
  std::vector<DComponent> right = ys.size() == 1 ? reduce_single(ys) : ys;
  DChain out;
  out.add(DTubing::checked(concat(left, right)), 1);
  return out;
}

namespace {

DChain lift2(DChain (*op)(const DTubing&, const DTubing&), const DChain& x, const DChain& y) {
  DChain out;
  for (const auto& [a, ka] : x.terms())
    for (const auto& [b, kb] : y.terms())
      out += op(a, b) * (ka * kb);
  return out;
}

}  // namespace

DChain vdash(const DChain& x, const DChain& y) { return lift2(&vdash, x, y); }
DChain dashv(const DChain& x, const DChain& y) { return lift2(&dashv, x, y); }
DChain times(const DChain& x, const DChain& y) { return lift2(&times, x, y); }

DecompStep canonical_decompose(const DTubing& T) {
  const auto& cs = T.components();
  if (cs.size() < 2) throw PreconditionError("single components are generators");
  DTubing head = DTubing::of_connected(cs[0].tubing);
  std::vector<DComponent> rest(cs.begin() + 1, cs.end());
  if (cs.size() == 2) {
    TriasOp op = cs[0].reduced ? (cs[1].reduced ? TriasOp::times : TriasOp::dashv)
                               : TriasOp::vdash;
    if (!cs[0].reduced && !cs[1].reduced)
      throw PreconditionError("invalid dtubing: no reduced component");
    return {op, head, DTubing::of_connected(rest[0].tubing)};
  }
  bool rest_has_reduced = false;
  for (const DComponent& c : rest) rest_has_reduced = rest_has_reduced || c.reduced;
  if (!cs[0].reduced) {
    // tail keeps its flags under |- when it has several components
    return {TriasOp::vdash, head, DTubing::checked(rest)};
  }
  if (rest_has_reduced) {
    return {TriasOp::times, head, DTubing::checked(rest)};
  }
  // Leading component reduced, the rest all full: only -| produces this, and
  // it wipes the right factor's flags, so the tail is taken in the canonical
  // def-1 form with its last component reduced.
  std::vector<DComponent> tail = rest;
  tail.back().reduced = true;
  return {TriasOp::dashv, head, DTubing::checked(tail)};
}

namespace {

DChain apply_op(TriasOp op, const DChain& x, const DChain& y) {
  switch (op) {
    case TriasOp::vdash: return vdash(x, y);
    case TriasOp::dashv: return dashv(x, y);
    case TriasOp::times: return times(x, y);
  }
  return {};
}

}  // namespace

DChain differential(const DTubing& T) {
  if (T.component_count() == 1) {
    DChain out;
    for (const auto& [U, c] : boundary(T.components()[0].tubing).terms())
      out.add(DTubing::of_connected(U), c);
    return out;
  }
  DecompStep step = canonical_decompose(T);
  DChain X;
  X.add(step.head, 1);
  DChain Y;
  Y.add(step.tail, 1);
  DChain dX = differential(step.head);
  DChain dY = differential(step.tail);
  const int gx = step.head.degree();
  DChain out;
  if (step.op == TriasOp::times) {
    out += times(dX, Y);
    out += times(X, dY) * ((gx + 1) % 2 ? -1 : 1);
    out += dashv(X, Y) * (gx % 2 ? -1 : 1);
    out += vdash(X, Y) * (gx % 2 ? 1 : -1);
  } else {
    out += apply_op(step.op, dX, Y);
    out += apply_op(step.op, X, dY) * (gx % 2 ? -1 : 1);
  }
  return out;
}

DChain differential(const DChain& c) {
  DChain out;
  for (const auto& [T, k] : c.terms()) out += differential(T) * k;
  return out;
}

bool trias_relation_check(const std::vector<DTubing>& sample) {
  for (const DTubing& x : sample)
    for (const DTubing& y : sample)
      for (const DTubing& z : sample) {
        DChain X, Y, Z;
        X.add(x, 1);
        Y.add(y, 1);
        Z.add(z, 1);
        // (i)-(vii) plus associativity of each product
        if (!(dashv(vdash(X, Y), Z) == vdash(X, dashv(Y, Z)))) return false;
        if (!(dashv(dashv(X, Y), Z) == dashv(X, vdash(Y, Z)))) return false;
        if (!(vdash(dashv(X, Y), Z) == vdash(X, vdash(Y, Z)))) return false;
        if (!(times(vdash(X, Y), Z) == vdash(X, times(Y, Z)))) return false;
        if (!(dashv(times(X, Y), Z) == times(X, dashv(Y, Z)))) return false;
        if (!(times(dashv(X, Y), Z) == times(X, vdash(Y, Z)))) return false;
        if (!vdash(times(X, Y), Z).empty()) return false;
        if (!dashv(X, times(Y, Z)).empty()) return false;
        if (!(vdash(vdash(X, Y), Z) == vdash(X, vdash(Y, Z)))) return false;
        if (!(dashv(dashv(X, Y), Z) == dashv(X, dashv(Y, Z)))) return false;
        if (!(times(times(X, Y), Z) == times(X, times(Y, Z)))) return false;
      }
  return true;
}

namespace {

// Largest node outside every proper tube.
int last_free_node(const Tubing& T) {
  NodeSet covered;
  for (NodeSet t : T.proper_tubes()) covered |= t;
  return (T.universal() - covered).max_node();
}

int first_free_node(const Tubing& T) {
  NodeSet covered;
  for (NodeSet t : T.proper_tubes()) covered |= t;
  return (T.universal() - covered).min_node();
}

NodeSet offset_set(NodeSet s, int by) {
  NodeSet out;
  for (int v : s.to_vector()) out |= NodeSet::single(v + by);
  return out;
}

}  // namespace

Graph join_graph(const Tubing& T, const Tubing& S) {
  const int n = T.graph().node_count();
  const int m = S.graph().node_count();
  std::vector<std::pair<int, int>> e = T.graph().edges();
  for (auto [u, v] : S.graph().edges()) e.push_back({u + n, v + n});
  e.push_back({last_free_node(T), first_free_node(S) + n});
  return Graph(n + m, e);
}

Tubing l_right(const Tubing& T, const Tubing& S) {
  Graph j = join_graph(T, S);
  const int n = T.graph().node_count();
  std::vector<NodeSet> tubes = T.tubes();
  for (NodeSet s : S.proper_tubes()) tubes.push_back(offset_set(s, n));
  tubes.push_back(j.nodes());
  return Tubing::checked(j, std::move(tubes));
}

Tubing l_left(const Tubing& T, const Tubing& S) {
  Graph j = join_graph(T, S);
  const int n = T.graph().node_count();
  std::vector<NodeSet> tubes = T.proper_tubes();
  for (NodeSet s : S.tubes()) tubes.push_back(offset_set(s, n));
  tubes.push_back(j.nodes());
  return Tubing::checked(j, std::move(tubes));
}

Tubing l_perp(const Tubing& T, const Tubing& S) {
  Graph j = join_graph(T, S);
  const int n = T.graph().node_count();
  std::vector<NodeSet> tubes = T.proper_tubes();
  for (NodeSet s : S.proper_tubes()) tubes.push_back(offset_set(s, n));
  tubes.push_back(j.nodes());
  return Tubing::checked(j, std::move(tubes));
}

}  // namespace tubings
