#include <doctest.h>

#include "tubings/errors.hpp"
#include "tubings/graph.hpp"

using namespace tubings;

TEST_CASE("node sets") {
  NodeSet s = NodeSet::of({2, 5, 7});
  CHECK(s.count() == 3);
  CHECK(s.min_node() == 2);
  CHECK(s.max_node() == 7);
  CHECK(s.contains(5));
  CHECK(!s.contains(3));
  CHECK(NodeSet::of({2, 5}).subset_of(s));
  CHECK((s - NodeSet::of({5})) == NodeSet::of({2, 7}));
  CHECK(NodeSet::full(3) == NodeSet::of({1, 2, 3}));
}

TEST_CASE("canonical tube order") {
  // min node first, then size, then first differing node
  CHECK(tube_less(NodeSet::of({1}), NodeSet::of({2})));
  CHECK(tube_less(NodeSet::of({1}), NodeSet::of({1, 2})));
  CHECK(tube_less(NodeSet::of({1, 3, 5}), NodeSet::of({1, 4, 5})));
  CHECK(tube_less(NodeSet::of({1, 3, 5}), NodeSet::of({1, 3, 6})));
  CHECK(!tube_less(NodeSet::of({1, 4}), NodeSet::of({1, 4})));
}

TEST_CASE("graph families and validation") {
  Graph l4 = Graph::linear(4);
  CHECK(l4.edge_count() == 3);
  CHECK(l4.has_edge(2, 3));
  CHECK(!l4.has_edge(1, 3));
  CHECK(Graph::complete(5).edge_count() == 10);
  CHECK(Graph::cycle(4).edge_count() == 4);
  CHECK(Graph::cycle(2).edge_count() == 1);
  CHECK(Graph::edgeless(3).edge_count() == 0);
  CHECK(!Graph::edgeless(3).is_connected());

  CHECK_THROWS_AS(Graph(3, {{1, 5}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{2, 2}}), InputError);
  CHECK_THROWS_AS(Graph(0, {}), InputError);
}

TEST_CASE("is_tube") {
  Graph l3 = Graph::linear(3);
  CHECK(is_tube(l3, NodeSet::of({1, 2})));
  CHECK(!is_tube(l3, NodeSet::of({1, 3})));
  Graph k4 = Graph::complete(4);
  for (NodeSet t : k4.all_tubes()) CHECK(is_tube(k4, t));
  CHECK(k4.all_tubes().size() == 15);  // every non-empty subset
  CHECK_THROWS_AS(is_tube(l3, NodeSet::of({4})), InputError);
}

TEST_CASE("induced subgraph renumbers order-preservingly") {
  GraphSlice s = induced_subgraph(Graph::linear(5), NodeSet::of({2, 3, 4}));
  CHECK(s.graph == Graph::linear(3));
  CHECK(s.to_parent == std::vector<int>{2, 3, 4});
  CHECK(s.pull_to_parent(NodeSet::of({1, 2})) == NodeSet::of({2, 3}));
  CHECK(s.push_to_child(NodeSet::of({3, 4})) == NodeSet::of({2, 3}));

  GraphSlice k = induced_subgraph(Graph::complete(6), NodeSet::of({1, 3, 4, 6}));
  CHECK(k.graph == Graph::complete(4));

  CHECK(induced_subgraph(Graph::linear(4), NodeSet::of({2})).graph == Graph::complete(1));
  CHECK_THROWS_AS(induced_subgraph(Graph::linear(4), NodeSet::of({1, 3})), PreconditionError);
}

TEST_CASE("reconnected complement") {
  // complete graphs stay complete
  for (int k = 1; k <= 3; ++k)
    CHECK(reconnected_complement(Graph::complete(5), NodeSet::full(k)).graph ==
          Graph::complete(5 - k));
  // removing an arc of a cycle reconnects the ends
  CHECK(reconnected_complement(Graph::cycle(6), NodeSet::of({2, 3})).graph == Graph::cycle(4));
  // interior tube of a path
  CHECK(reconnected_complement(Graph::linear(4), NodeSet::of({2, 3})).graph == Graph::linear(2));
  CHECK_THROWS_AS(reconnected_complement(Graph::linear(3), NodeSet::full(3)),
                  PreconditionError);
}

TEST_CASE("reconnected complement preserves order and connectivity") {
  for (const Graph& g : graph_census(5)) {
    for (NodeSet t : g.all_tubes()) {
      if (t == g.nodes()) continue;
      GraphSlice s = reconnected_complement(g, t);
      CHECK(std::is_sorted(s.to_parent.begin(), s.to_parent.end()));
      CHECK(s.graph.is_connected());
    }
  }
}

TEST_CASE("iterated complement is order independent") {
  // the worked fiber of the complete-graph example
  CHECK(iterated_complement(Graph::complete(8), {NodeSet::of({2, 3, 5, 6, 7, 8})}).graph ==
        Graph::complete(2));
  CHECK(iterated_complement(Graph::linear(4), {}).graph == Graph::linear(4));
  GraphSlice a = iterated_complement(Graph::linear(4), {NodeSet::of({1}), NodeSet::of({4})});
  GraphSlice b = iterated_complement(Graph::linear(4), {NodeSet::of({4}), NodeSet::of({1})});
  CHECK(a.graph == Graph::linear(2));
  CHECK(a.graph == b.graph);
  CHECK(a.to_parent == b.to_parent);
  CHECK_THROWS_AS(iterated_complement(Graph::linear(4), {NodeSet::of({1, 2}), NodeSet::of({2})}),
                  InputError);

  for (const Graph& g : graph_census(6)) {
    auto tubes = g.all_tubes();
    for (NodeSet t : tubes)
      for (NodeSet u : tubes) {
        if (t.intersects(u) || (t | u) == g.nodes()) continue;
        GraphSlice x = iterated_complement(g, {t, u});
        GraphSlice y = iterated_complement(g, {u, t});
        CHECK(x.graph == y.graph);
        CHECK(x.to_parent == y.to_parent);
      }
    if (g.node_count() >= 6) break;  // one 6-node graph is plenty here
  }
}

TEST_CASE("graph census counts") {
  CHECK(connected_graphs(1).size() == 1);
  CHECK(connected_graphs(2).size() == 1);
  CHECK(connected_graphs(3).size() == 4);
  CHECK(connected_graphs(4).size() == 38);
  CHECK(connected_graphs(5).size() == 728);
  CHECK(graph_census(3).size() == 6);
}

TEST_CASE("encode is stable and distinguishes graphs") {
  CHECK(Graph::linear(3).encode() == "n3;1-2;2-3");
  CHECK(Graph::linear(3).encode() != Graph::complete(3).encode());
}
