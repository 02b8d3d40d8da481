#include <doctest.h>

#include "oracles.hpp"
#include "treechild/generate.hpp"
#include "treechild/io.hpp"
#include "treechild/network.hpp"

using namespace treechild;

namespace {

RawDigraph cherry_ab() { return RawDigraph{3, {{0, 1}, {0, 2}}, {{1, "a"}, {2, "b"}}}; }

}  // namespace

TEST_CASE("valid rooted networks construct") {
  RootedNetwork n = RootedNetwork::from_raw(cherry_ab());
  CHECK(n.vertex_count() == 3);
  CHECK(n.arc_count() == 2);
  CHECK(n.leaf_count() == 2);
  CHECK(n.root() == 0);
  CHECK(n.is_tree_vertex(0) == false);  // the root has no parent
  CHECK(n.parent_of_leaf("a") == VertexId{0});
  CHECK(reticulation_number(n) == 0);

  RootedNetwork single = RootedNetwork::single_leaf("x");
  CHECK(single.is_single_vertex());
  CHECK(single.leaf_count() == 1);
  CHECK_FALSE(single.parent_of_leaf("x").has_value());
}

TEST_CASE("rooted validation collects every violation") {
  SUBCASE("empty") { CHECK(validate_rooted(RawDigraph{}).has("empty")); }
  SUBCASE("self loop and range") {
    RawDigraph g = cherry_ab();
    g.arcs.emplace_back(1, 1);
    g.arcs.emplace_back(0, 7);
    auto report = validate_rooted(g);
    CHECK(report.has("self-loop"));
    CHECK(report.has("vertex-range"));
  }
  SUBCASE("parallel arcs") {
    RawDigraph g{4, {{0, 1}, {0, 1}, {1, 2}, {1, 3}}, {{2, "a"}, {3, "b"}}};
    CHECK(validate_rooted(g).has("parallel-arc"));
  }
  SUBCASE("labels") {
    RawDigraph g = cherry_ab();
    g.labels[2] = "a";
    CHECK(validate_rooted(g).has("label-duplicate"));
    g = cherry_ab();
    g.labels[0] = "r";
    CHECK(validate_rooted(g).has("labelled-internal"));
    g = cherry_ab();
    g.labels.erase(2);
    CHECK(validate_rooted(g).has("leaf-label"));
    g = cherry_ab();
    g.labels[2] = "b,c";
    CHECK(validate_rooted(g).has("label-syntax"));
  }
  SUBCASE("cycle") {
    // 0 -> 1 -> 2 -> 3 -> 1 with leaves hanging off.
    RawDigraph g{6, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 1}, {2, 5}}, {{4, "a"}, {5, "b"}}};
    CHECK(validate_rooted(g).has("cycle"));
  }
  SUBCASE("two roots") {
    RawDigraph g{6, {{0, 2}, {0, 3}, {1, 4}, {1, 5}}, {{2, "a"}, {3, "b"}, {4, "c"}, {5, "d"}}};
    CHECK(validate_rooted(g).has("root-count"));
  }
  SUBCASE("degree profile") {
    RawDigraph g{4, {{0, 1}, {0, 2}, {1, 3}}, {{2, "a"}, {3, "b"}}};
    CHECK(validate_rooted(g).has("degree-profile"));
  }
  SUBCASE("from_raw throws with the report") {
    RawDigraph g = cherry_ab();
    g.labels[2] = "a";
    try {
      (void)RootedNetwork::from_raw(g);
      FAIL("expected InvalidNetwork");
    } catch (const InvalidNetwork& e) {
      CHECK(e.report().has("label-duplicate"));
      CHECK_FALSE(e.report().summary().empty());
    }
  }
}

TEST_CASE("unrooted validation") {
  CHECK(validate_unrooted(RawGraph{2, {{0, 1}}, {{0, "a"}, {1, "b"}}}).ok());
  CHECK(validate_unrooted(RawGraph{1, {}, {{0, "a"}}}).ok());
  RawGraph parallel{4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}}, {{2, "a"}, {3, "b"}}};
  CHECK(validate_unrooted(parallel).has("parallel-edge"));
  RawGraph split{4, {{0, 1}, {2, 3}}, {{0, "a"}, {1, "b"}, {2, "c"}, {3, "d"}}};
  CHECK(validate_unrooted(split).has("disconnected"));
  RawGraph degree4{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {{1, "a"}, {2, "b"}, {3, "c"}, {4, "d"}}};
  CHECK(validate_unrooted(degree4).has("degree-profile"));
}

TEST_CASE("reticulation numbers agree with the definitions") {
  RootedNetwork two_ret = parse_rooted("(((a,(b)#H1),((#H1,c))#H2),#H2);");
  CHECK(reticulation_number(two_ret) == 2);
  CHECK(reticulation_number(two_ret) == oracle::reticulations(two_ret.to_raw()));
  UnrootedNetwork u = parse_unrooted("unrooted\nu v\nu w\nv w\nu a\nv b\nw x\nx c\nx d\n");
  CHECK(reticulation_number(u) == u.edge_count() - u.vertex_count() + 1);
  CHECK(reticulation_number(u) == 1);
}

TEST_CASE("structural tree-child predicates match the naive oracle") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RootedNetwork n = generate_orchard(2 + seed % 6, seed % 4, seed).network;
    for (int extra = 0; extra < 2; ++extra) {
      const RawDigraph raw = n.to_raw();
      CHECK(is_stack_free(n) == !oracle::has_stack(raw));
      CHECK(has_sibling_reticulations(n) == oracle::has_sibling_reticulations(raw));
      CHECK(is_tree_child_structural(n) == oracle::tree_child(raw));
      // The child-based definition is equivalent to the stack/sibling one.
      CHECK(is_tree_child_by_children(n) == is_tree_child_structural(n));
      ++checked;
      if (n.arc_count() >= 2) n = add_random_reticulation(n, rng);
    }
  }
  CHECK(checked == 300);
}

TEST_CASE("unroot suppresses the root and rejects double edges") {
  RootedNetwork n = parse_rooted("((a,b),(c,d));");
  UnrootedNetwork u = unroot(n);
  CHECK(u.vertex_count() == n.vertex_count() - 1);
  CHECK(u.edge_count() == n.arc_count() - 1);
  CHECK(u.leaf_count() == 4);

  // Root children adjacent: suppressing the root would duplicate an edge.
  RootedNetwork two_ret = parse_rooted("(((a,(b)#H1),((#H1,c))#H2),#H2);");
  CHECK_THROWS_AS((void)unroot(two_ret), InvalidNetwork);

  CHECK(unroot(RootedNetwork::single_leaf("a")).is_single_vertex());
  CHECK(unroot(parse_rooted("(a,b);")).is_single_edge());
}

TEST_CASE("leaf index keeps labels sorted") {
  LeafIndex idx;
  idx.insert("c", 3);
  idx.insert("a", 1);
  idx.insert("b", 2);
  REQUIRE(idx.size() == 3);
  CHECK(idx.entries()[0].first == "a");
  CHECK(idx.find("b") == VertexId{2});
  CHECK(*idx.label_of(3) == "c");
  idx.erase("b");
  CHECK_FALSE(idx.find("b").has_value());
  CHECK(idx.label_of(2) == nullptr);
}
