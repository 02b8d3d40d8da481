#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "treechild/cherries.hpp"
#include "treechild/generate.hpp"
#include "treechild/io.hpp"
#include "treechild/isomorphism.hpp"

using namespace treechild;

TEST_CASE("parse_rooted: smallest networks") {
  RootedNetwork n = parse_rooted("(a,b);");
  CHECK(n.leaf_count() == 2);
  CHECK(n.vertex_count() == 3);
  CHECK(n.parent_of_leaf("a") == n.root());
  CHECK(n.parent_of_leaf("b") == n.root());

  RootedNetwork single = parse_rooted("a;");
  CHECK(single.is_single_vertex());
  CHECK(serialize_rooted(single) == "a;");
  CHECK(serialize_rooted(n) == "(a,b);");
  CHECK(serialize_rooted(parse_rooted("  ( b ,a ) ;\n")) == "(a,b);");
}

TEST_CASE("parse_rooted: hybrid tags") {
  RootedNetwork n = parse_rooted("((a,(b)#H1),(#H1,c));");
  CHECK(n.leaf_count() == 3);
  CHECK(reticulation_number(n) == 1);
  VertexId pb = *n.parent_of_leaf("b");
  CHECK(n.is_reticulation(pb));
  // The reticulation's parents are p_a and p_c, so both (b,a) and (b,c) are reticulated cherries.
  std::vector<std::string> found;
  for (const auto& site : list_reticulated_cherries(n)) found.push_back(to_string(site.reduction));
  CHECK(found == std::vector<std::string>{"(b,a)", "(b,c)"});
  CHECK(list_cherries(n).empty());

  // The definition may come second.
  RootedNetwork late = parse_rooted("((a,#H1),((b)#H1,c));");
  CHECK(are_isomorphic(n, late));
}

TEST_CASE("parse_rooted: errors carry positions") {
  struct Case {
    const char* text;
    std::size_t column;
  };
  const std::vector<Case> syntax = {
      {"((a,b);", 7},      // unbalanced
      {"(a,b)", 6},        // missing ';'
      {"(a,b);x", 7},      // trailing text
      {"(a,b)c;", 6},      // internal label
      {"(a:1,b);", 3},     // branch length
      {"(a,b[x]);", 5},    // comment
      {"(a,,b);", 4},      // empty child
      {"(a,b#);", 6},      // empty tag
      {"", 1},             // empty input
  };
  for (const auto& c : syntax) {
    CAPTURE(c.text);
    try {
      (void)parse_rooted(c.text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == c.column);
      CHECK(std::string(e.what()).find("line 1, column") == 0);
    }
  }

  const std::vector<const char*> semantic = {
      "((a,(b)#H1),c);",                // tag used once
      "((a,(b)#H1),((c)#H1,#H1));",     // tag used three times
      "((a,(b)#H1),((c)#H1,d));",       // tag defined twice
      "(a,a);",                         // duplicate label
      "((a,b));",                       // unary root
  };
  for (const char* text : semantic) {
    CAPTURE(text);
    try {
      (void)parse_rooted(text);
      FAIL("expected SemanticError");
    } catch (const SemanticError& e) {
      CHECK(e.position().has_value());
    }
  }
}

TEST_CASE("parse_rooted_document reads one network per line") {
  auto nets = parse_rooted_document("(a,b);\n\n((a,b),c);\r\n");
  REQUIRE(nets.size() == 2);
  CHECK(nets[1].leaf_count() == 3);
  try {
    (void)parse_rooted_document("(a,b);\n(a,;\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 4);
  }
}

TEST_CASE("serialize_rooted is canonical") {
  // Isomorphic inputs written differently give byte-equal output.
  RootedNetwork a = parse_rooted("((c,(b)#H1),(#H1,a));");
  RootedNetwork b = parse_rooted("((a,#H7),((b)#H7,c));");
  REQUIRE(are_isomorphic(a, b));
  CHECK(serialize_rooted(a) == serialize_rooted(b));
  CHECK(serialize_rooted(a) == "((a,(b)#H1),(#H1,c));");
}

TEST_CASE("rooted round trip on generated networks") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RootedNetwork n = generate_orchard(2 + seed % 7, seed % 5, seed).network;
    std::string text = serialize_rooted(n);
    RootedNetwork back = parse_rooted(text);
    CAPTURE(text);
    CHECK(are_isomorphic(n, back));
    CHECK(serialize_rooted(back) == text);
  }
}

TEST_CASE("parse_unrooted") {
  UnrootedNetwork e = parse_unrooted("unrooted\na b");
  CHECK(e.is_single_edge());
  CHECK(e.leaf_count() == 2);

  UnrootedNetwork s = parse_unrooted("unrooted\nx\n");
  CHECK(s.is_single_vertex());
  CHECK(serialize_unrooted(s) == "unrooted\nx\n");

  UnrootedNetwork crlf = parse_unrooted("unrooted\r\n  u a\r\nu b\r\n\r\nu c\r\n");
  CHECK(crlf.leaf_count() == 3);
  CHECK(serialize_unrooted(crlf) == "unrooted\n_1 a\n_1 b\n_1 c\n");

  try {
    (void)parse_unrooted("unrooted\na b c\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS((void)parse_unrooted("a b\n"), ParseError);
  CHECK_THROWS_AS((void)parse_unrooted(""), ParseError);
  try {
    (void)parse_unrooted("unrooted\nu a\nu b\nu c\nu d\n");  // degree 4
    FAIL("expected SemanticError");
  } catch (const SemanticError& e) {
    REQUIRE(e.position().has_value());
    CHECK(e.position()->line == 2);
    CHECK(e.report().has("degree-profile"));
  }
}

TEST_CASE("serialize_unrooted avoids clashing internal names") {
  UnrootedNetwork n = parse_unrooted("unrooted\nv _1\nv _2\nv a\n");
  std::string text = serialize_unrooted(n);
  CHECK(text == "unrooted\n_1 __1\n_2 __1\n__1 a\n");
  CHECK(are_isomorphic(parse_unrooted(text), n));
}

TEST_CASE("unrooted round trip on the corpus") {
  for (const auto& u : enumerate_unrooted_networks(5, 2)) {
    std::string text = serialize_unrooted(u);
    UnrootedNetwork back = parse_unrooted(text);
    CHECK(are_isomorphic(u, back));
    CHECK(serialize_unrooted(back) == text);
  }
}

TEST_CASE("sequence format") {
  CherryPickingSequence two_ret = parse_sequence("R b a\nC c b\nR b a\nC b a");
  CHECK(to_string(two_ret) == "((b,a),[c,b],(b,a),[b,a])");
  CHECK(serialize_sequence(two_ret) == "R b a\nC c b\nR b a\nC b a\n");
  CHECK(parse_sequence(serialize_sequence(two_ret)) == two_ret);
  CHECK(parse_sequence("").size() == 0);
  CHECK(parse_sequence("\n  \n").size() == 0);

  struct Bad {
    const char* text;
    std::size_t line, column;
  };
  for (const auto& b : std::vector<Bad>{{"X a b", 1, 1},
                                        {"C a", 1, 3},
                                        {"C a b\nR a b c", 2, 7},
                                        {"C a a", 1, 5},
                                        {"C a (b", 1, 5}}) {
    CAPTURE(b.text);
    try {
      (void)parse_sequence(b.text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == b.line);
      CHECK(e.column() == b.column);
    }
  }
}
