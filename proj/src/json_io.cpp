#include "tubings/json_io.hpp"

#include "tubings/errors.hpp"

namespace tubings {

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.node_count();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InputError("graph JSON needs fields \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("edges must be pairs [i,j]");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u >= v) throw InputError("edges must satisfy i < j");
    edges.push_back({u, v});
  }
  return Graph(n, edges);
}

static Json nodeset_to_json(NodeSet s) {
  Json arr = Json::array();
  for (int v : s.to_vector()) arr.push_back(v);
  return arr;
}

static NodeSet nodeset_from_json(const Json& j, int n) {
  NodeSet s;
  for (const Json& v : j) {
    int node = v.get<int>();
    if (node < 1 || node > n) throw InputError("tube node out of range");
    s |= NodeSet::single(node);
  }
  return s;
}

Json tubing_to_json(const Tubing& T) {
  Json j;
  j["graph"] = graph_to_json(T.graph());
  Json tubes = Json::array();
  for (NodeSet t : T.tubes()) tubes.push_back(nodeset_to_json(t));
  j["tubes"] = std::move(tubes);
  return j;
}

Tubing tubing_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("tubes"))
    throw InputError("tubing JSON needs fields \"graph\" and \"tubes\"");
  Graph g = graph_from_json(j.at("graph"));
  std::vector<NodeSet> tubes;
  for (const Json& t : j.at("tubes")) tubes.push_back(nodeset_from_json(t, g.node_count()));
  return Tubing::checked(g, std::move(tubes));
}

Json chain_to_json(const TubingChain& c) {
  Json arr = Json::array();
  for (const auto& [T, k] : c.terms()) {
    Json term;
    term["coeff"] = k.str();
    term["tubing"] = tubing_to_json(T);
    arr.push_back(std::move(term));
  }
  return arr;
}

TubingChain chain_from_json(const Json& j) {
  TubingChain out;
  for (const Json& term : j) {
    Coeff c(term.at("coeff").is_string() ? Coeff(term.at("coeff").get<std::string>())
                                         : Coeff(term.at("coeff").get<long long>()));
    out.add(tubing_from_json(term.at("tubing")), c);
  }
  return out;
}

Json coproduct_to_json(const CoproductChain& c) {
  Json arr = Json::array();
  for (const auto& [pair, k] : c.terms()) {
    Json term;
    term["coeff"] = k.str();
    term["left"] = pair.first ? tubing_to_json(*pair.first) : Json("unit");
    term["right"] = pair.second ? tubing_to_json(*pair.second) : Json("unit");
    arr.push_back(std::move(term));
  }
  return arr;
}

Json dtubing_to_json(const DTubing& d) {
  Json comps = Json::array();
  for (const DComponent& c : d.components()) {
    Json jc = tubing_to_json(c.tubing);
    jc["reduced"] = c.reduced;
    comps.push_back(std::move(jc));
  }
  Json j;
  j["components"] = std::move(comps);
  return j;
}

DTubing dtubing_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("components"))
    throw InputError("dtubing JSON needs field \"components\"");
  std::vector<DComponent> comps;
  for (const Json& jc : j.at("components")) {
    DComponent c{tubing_from_json(jc), jc.value("reduced", false)};
    comps.push_back(std::move(c));
  }
  return DTubing::checked(std::move(comps));
}

Json dchain_to_json(const DChain& c) {
  Json arr = Json::array();
  for (const auto& [d, k] : c.terms()) {
    Json term;
    term["coeff"] = k.str();
    term["dtubing"] = dtubing_to_json(d);
    arr.push_back(std::move(term));
  }
  return arr;
}

}  // namespace tubings
