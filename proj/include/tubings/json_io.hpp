#pragma once

#include <json.hpp>

#include "tubings/chain.hpp"
#include "tubings/dtub.hpp"
#include "tubings/tubing.hpp"

namespace tubings {

using Json = nlohmann::ordered_json;

// Graph: {"n": <int>, "edges": [[i,j], ...]} with 1-based nodes, i < j.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Tubing: {"graph": ..., "tubes": [[...], ...]}; the universal tube is listed.
Json tubing_to_json(const Tubing& T);
Tubing tubing_from_json(const Json& j);

// Chain: [{"coeff": c, "tubing": ...}, ...]
Json chain_to_json(const TubingChain& c);
TubingChain chain_from_json(const Json& j);

Json coproduct_to_json(const CoproductChain& c);

// DTubing: {"components": [{"graph": ..., "tubes": ..., "reduced": bool}, ...]}
Json dtubing_to_json(const DTubing& d);
DTubing dtubing_from_json(const Json& j);

Json dchain_to_json(const DChain& c);

}  // namespace tubings
