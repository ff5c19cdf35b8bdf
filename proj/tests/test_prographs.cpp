#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "svyt/prograph.hpp"

using namespace svyt;

namespace {

Prograph g_(const std::string& text) { return prograph_from_text(text); }

}  // namespace

TEST_CASE("expansion and word validity") {
  Prograph g = g_("k=2;x=1;word=C@1,P@1");
  CHECK(g.coproducts() == 1);
  CHECK(g.products() == 1);
  CHECK(g.outputs() == 1);
  CHECK(g.edge_count() == 4);
  CHECK_THROWS_AS(expand(2, 1, {{'C', 2}}), std::invalid_argument);
  CHECK_THROWS_AS(expand(2, 1, {{'P', 1}}), std::invalid_argument);
  CHECK_THROWS_AS(expand(3, 2, {{'P', 1}}), std::invalid_argument);
  CHECK_THROWS_AS(expand(1, 1, {}), std::invalid_argument);
}

TEST_CASE("validate accepts every enumerated graph") {
  auto graphs = all_prographs(2, 2, 2, 1);
  REQUIRE(graphs.size() == 5);
  for (const auto& g : graphs) {
    std::string why;
    CHECK(validate_graph(expand(g), &why));
  }
  CHECK(validate_graph(expand(g_("k=2;x=1;word="))));  // single strand
}

TEST_CASE("validate rejects a product consuming non-consecutive strands") {
  // Wire a 2-ary product across strands 0 and 2 of a three-input graph.
  ExpandedPrograph g;
  g.arity = 2;
  g.inputs = 3;
  g.input_edges = {0, 1, 2};
  g.edge_count = 4;
  g.producer = {-1, -1, -1, 0};
  g.consumer = {0, -1, 0, -1};
  ExpandedPrograph::Node node;
  node.is_product = true;
  node.in = {0, 2};
  node.out = {3};
  g.nodes.push_back(node);
  g.output_edges = {3, 1};
  std::string why;
  CHECK_FALSE(validate_graph(g, &why));
  CHECK(why.find("consecutive") != std::string::npos);

  // The same wiring on adjacent strands validates.
  g.nodes[0].in = {0, 1};
  g.consumer = {0, 0, -1, -1};
  g.output_edges = {3, 2};
  CHECK(validate_graph(g, &why));
}

TEST_CASE("depth-left search labels the worked closed 2-ary graph") {
  auto lab = depth_left_search(g_("k=2;x=1;word=C@1,C@1,C@3,P@2,P@2,P@1"));
  CHECK(lab.label_of_edge == std::vector<int>{0, 1, 4, 2, 3, 5, 7, 6, 8, 9});
}

TEST_CASE("depth-left search labels the worked 3-ary coproduct tree") {
  // (Delta_3 x id x Delta_3) . Delta_3. Edge ids: input, then the root's
  // three children, then each child subtree's outputs in creation order.
  auto lab = depth_left_search(g_("k=3;x=1;word=C@1,C@1,C@5"));
  CHECK(lab.label_of_edge ==
        std::vector<int>{0, 1, 5, 6, 2, 3, 4, 7, 8, 9});
}

TEST_CASE("single strand labels as the zero edge") {
  auto lab = depth_left_search(g_("k=2;x=1;word="));
  CHECK(lab.label_of_edge == std::vector<int>{0});
}

TEST_CASE("searches coincide on closed graphs") {
  for (int k = 2; k <= 3; ++k)
    for (int n = 1; n <= 3; ++n)
      for_each_prograph(k, n, n, 1, [&](const Prograph& g) {
        CHECK(depth_left_search(g).label_of_edge ==
              xfold_depth_left_search(g).label_of_edge);
        return true;
      });
}

TEST_CASE("searches produce permutations of 0..E-1") {
  for_each_prograph(3, 2, 1, 3, [&](const Prograph& g) {
    auto lab = xfold_depth_left_search(g);
    std::set<int> seen(lab.label_of_edge.begin(), lab.label_of_edge.end());
    CHECK(static_cast<int>(seen.size()) == g.edge_count());
    CHECK(*seen.begin() == 0);
    CHECK(*seen.rbegin() == g.edge_count() - 1);
    return true;
  });
}

TEST_CASE("depth-left search requires a single input strand") {
  CHECK_THROWS_AS(depth_left_search(g_("k=2;x=3;word=P@1")),
                  std::invalid_argument);
  CHECK(xfold_depth_left_search(g_("k=2;x=3;word=P@1")).label_of_edge.size() ==
        4);
}

TEST_CASE("depth-left search labels non-closed single-input graphs fully") {
  // Terminal endpoints never enter the candidate set, so a graph with
  // several output strands still labels every edge.
  Prograph g = g_("k=3;x=1;word=C@1,C@2");
  auto lab = depth_left_search(g);
  CHECK(lab.label_of_edge.size() == 7);
  CHECK(lab.label_of_edge == xfold_depth_left_search(g).label_of_edge);
  std::set<int> labels(lab.label_of_edge.begin(), lab.label_of_edge.end());
  CHECK(labels.size() == 7);
}

TEST_CASE("output strand count") {
  CHECK(output_strand_count(3, 3, 1, 3) == 7);
  for (int k = 2; k <= 5; ++k) CHECK(output_strand_count(k, 3, 3, 1) == 1);
  CHECK_THROWS_AS(output_strand_count(2, 1, 3, 1), std::invalid_argument);
}

TEST_CASE("rotation swaps the worked pair and is an involution") {
  Prograph left = g_("k=3;x=1;word=C@1,C@2,P@1,P@1");
  Prograph right = g_("k=3;x=1;word=C@1,C@3,P@2,P@1");
  CHECK(rotate(left) == right);
  CHECK(rotate(right) == left);
  CHECK(rotate(g_("k=2;x=1;word=")) == g_("k=2;x=1;word="));
  for_each_prograph(3, 2, 2, 1, [&](const Prograph& g) {
    CHECK(rotate(rotate(g)) == g);
    return true;
  });
}

TEST_CASE("rotation reverses the x-fold labels edge for edge") {
  auto duality = [](int k, int n, int m, int x) {
    int total = x + k * n + m - 1;
    for_each_prograph(k, n, m, x, [&](const Prograph& g) {
      auto rword = rotated_word(k, x, g.word());
      ExpandedPrograph e = expand(g);
      ExpandedPrograph re = expand(k, g.outputs(), rword);
      auto map = rotation_edge_map(e, re);
      auto lab = xfold_depth_left_search(e);
      auto rlab = xfold_depth_left_search(re);
      for (int edge = 0; edge < e.edge_count; ++edge)
        CHECK(rlab.label_of_edge[map[edge]] ==
              total - lab.label_of_edge[edge]);
      return true;
    });
  };
  duality(2, 2, 1, 3);
  duality(3, 2, 1, 3);
  duality(2, 3, 3, 1);
}

TEST_CASE("justification closes graphs and leaves closed ones unchanged") {
  Prograph closed = g_("k=2;x=1;word=C@1,P@1");
  CHECK(justify(closed) == closed);
  // Five-input 3-ary instance shaped like the worked justification figure.
  Prograph wide = g_("k=3;x=5;word=C@1");
  Prograph j = justify(wide);
  CHECK(j == g_("k=3;x=1;word=C@1,C@1,C@1,P@5,P@3,P@1"));
  CHECK(j.inputs() == 1);
  CHECK(j.outputs() == 1);
  CHECK(j.coproducts() == 1 + 2);
  CHECK_THROWS_AS(justify(g_("k=3;x=2;word=")), std::invalid_argument);
}

TEST_CASE("justification is injective") {
  std::set<std::string> images;
  int total = 0;
  for_each_prograph(3, 2, 2, 3, [&](const Prograph& g) {
    images.insert(to_text(justify(g)));
    ++total;
    return true;
  });
  CHECK(static_cast<int>(images.size()) == total);
}

TEST_CASE("unjustification inverts justification") {
  for (auto [k, n, m, x] :
       std::vector<std::array<int, 4>>{{2, 2, 1, 3}, {3, 2, 1, 3},
                                       {3, 1, 0, 5}, {2, 3, 2, 2}}) {
    for_each_prograph(k, n, m, x, [&, k = k, x = x](const Prograph& g) {
      int y = g.outputs();
      Prograph j = justify(g);
      CHECK(unjustify(j, x, y) == g);
      return true;
    });
  }
  // The closed tower C,P,C,P lacks the left-aligned coproduct prefix.
  CHECK_THROWS_AS(unjustify(g_("k=2;x=1;word=C@1,P@1,C@1,P@1"), 3, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(unjustify(g_("k=2;x=3;word=P@1"), 3, 1),
                  std::invalid_argument);
}

TEST_CASE("left-weighted justification matches the worked 4-ary instance") {
  // Two inputs, one coproduct: two free strands join on the left, then the
  // ordinary justification adds one bottom coproduct and two top products.
  Prograph g = g_("k=4;x=2;word=C@1");
  Prograph image = left_weighted_justify(g);
  CHECK(image == g_("k=4;x=1;word=C@1,C@3,P@4,P@1"));
  CHECK(image.coproducts() == 2);
  CHECK_THROWS_AS(left_weighted_justify(g_("k=3;x=3;word=C@1")),
                  std::invalid_argument);  // x = 1 mod (k-1)
  CHECK_THROWS_AS(left_weighted_justify(g_("k=2;x=2;word=C@1")),
                  std::invalid_argument);
}

TEST_CASE("left-weighted justification validates and stays injective") {
  for_each_prograph(4, 1, 1, 2, [&](const Prograph& g) {
    Prograph image = left_weighted_justify(g);
    CHECK(validate_graph(expand(image)));
    CHECK(image.inputs() == 1);
    CHECK(image.outputs() == 1);
    return true;
  });
  std::set<std::string> images;
  int total = 0;
  for_each_prograph(3, 2, 1, 2, [&](const Prograph& g) {
    images.insert(to_text(left_weighted_justify(g)));
    ++total;
    return true;
  });
  CHECK(static_cast<int>(images.size()) == total);
}

TEST_CASE("enumeration counts the known families") {
  CHECK(count_prographs(2, 2, 2, 1) == 5);
  for (int k = 2; k <= 4; ++k) CHECK(count_prographs(k, 1, 1, 1) == 1);
  CHECK(count_prographs(3, 3, 3, 1) == 190);
}

TEST_CASE("enumeration yields canonical words without repeats") {
  std::set<std::string> seen;
  for_each_prograph(2, 3, 3, 1, [&](const Prograph& g) {
    CHECK(canonical_word(expand(g)) == g.word());
    CHECK(seen.insert(to_text(g)).second);
    return true;
  });
  CHECK(seen.size() == 42);
}

TEST_CASE("frontier simulation ends with the predicted strand count") {
  for (auto [k, n, m, x] : std::vector<std::array<int, 4>>{
           {2, 2, 1, 3}, {3, 2, 1, 2}, {4, 2, 1, 1}}) {
    int y = output_strand_count(k, n, m, x);
    for_each_prograph(k, n, m, x, [&, y = y](const Prograph& g) {
      CHECK(g.outputs() == y);
      CHECK(static_cast<int>(expand(g).output_edges.size()) == y);
      return true;
    });
  }
}

TEST_CASE("enumeration budget") {
  PrographEnumLimits tight{3};
  CHECK_THROWS_AS(count_prographs(2, 2, 2, 1, tight), BudgetExceeded);
}

TEST_CASE("text encoding round-trips and rejects malformed input") {
  for_each_prograph(3, 2, 1, 2, [&](const Prograph& g) {
    CHECK(prograph_from_text(to_text(g)) == g);
    return true;
  });
  CHECK(to_text(g_("k=2;x=1;word=")) == "k=2;x=1;word=");
  CHECK_THROWS_AS(g_("k=2;word=C@1"), std::invalid_argument);
  CHECK_THROWS_AS(g_("k=2;x=1;word=Q@1"), std::invalid_argument);
  CHECK_THROWS_AS(g_("k=2;x=1;word=C1"), std::invalid_argument);
}

TEST_CASE("dot rendering carries the search labels") {
  std::string dot = to_dot(g_("k=2;x=1;word=C@1,P@1"));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"0\"") != std::string::npos);
  CHECK(dot.find("label=\"3\"") != std::string::npos);
}
