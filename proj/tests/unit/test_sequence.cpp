#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "treechild/generate.hpp"
#include "treechild/io.hpp"
#include "treechild/sequence.hpp"

using namespace treechild;

namespace {

Reduction C(const char* x, const char* y) { return Reduction::cherry(x, y); }
Reduction R(const char* x, const char* y) { return Reduction::reticulated(x, y); }

CherryPickingSequence random_sequence(std::mt19937_64& rng) {
  const char* labels[] = {"a", "b", "c", "d", "e"};
  CherryPickingSequence seq;
  std::size_t length = rng() % 9;
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t x = rng() % 5, y = rng() % 4;
    if (y >= x) ++y;
    seq.push_back(rng() % 2 ? Reduction::cherry(labels[x], labels[y]) : Reduction::reticulated(labels[x], labels[y]));
  }
  return seq;
}

}  // namespace

TEST_CASE("successor indices of the two-reticulation example") {
  CherryPickingSequence s{R("b", "a"), C("c", "b"), R("b", "a"), C("b", "a")};
  // 1-based in the text: s(1)=2 and s(3)=4.
  CHECK(successor_index(s, 0) == std::size_t{1});
  CHECK(successor_index(s, 2) == std::size_t{3});
  CHECK_FALSE(successor_index(s, 3).has_value());
  CHECK_THROWS_AS((void)successor_index(s, 4), std::out_of_range);
  CHECK(check_tree_child(s).tree_child);
}

TEST_CASE("two sequences for one four-leaf network") {
  CherryPickingSequence sigma{R("d", "c"), R("b", "c"), C("c", "d"), R("a", "d"), C("a", "d"), C("b", "d")};
  CherryPickingSequence sigma_prime{R("c", "d"), R("b", "c"), C("c", "d"), R("a", "d"), C("a", "d"), C("b", "d")};

  SequenceVerdict v = check_tree_child(sigma);
  CHECK(v.tree_child);
  // 1-based s(1)=3, s(2)=6, s(4)=5.
  CHECK(v.successors[0] == std::size_t{2});
  CHECK(v.successors[1] == std::size_t{5});
  CHECK(v.successors[3] == std::size_t{4});
  CHECK(v.p1_violations.empty());
  CHECK(v.p2_violations.empty());

  SequenceVerdict w = check_tree_child(sigma_prime);
  CHECK_FALSE(w.tree_child);
  // (c,d) is followed by the reticulated (b,c).
  CHECK(w.p1_violations == std::vector<std::size_t>{0});
}

TEST_CASE("(P3) on the four sequences of one tree-child network") {
  CherryPickingSequence s1{R("c", "b"), R("a", "b"), C("b", "c"), C("c", "a")};
  CherryPickingSequence s2{R("c", "b"), R("a", "b"), C("b", "c"), C("a", "c")};
  CherryPickingSequence s3{R("c", "b"), R("a", "b"), C("c", "b"), C("b", "a")};
  CherryPickingSequence s4{R("c", "b"), R("a", "b"), C("c", "b"), C("a", "b")};
  CHECK_FALSE(check_p3(s1));
  CHECK_FALSE(check_p3(s2));
  CHECK_FALSE(check_p3(s3));
  CHECK(check_p3(s4));
  for (const auto& s : {s1, s2, s3, s4}) CHECK(check_tree_child(s).tree_child);
}

TEST_CASE("(P3) without tree-child") {
  CherryPickingSequence s{R("b", "a"), R("b", "a"), C("b", "c"), C("a", "c")};
  CHECK(check_p3(s));
  SequenceVerdict v = check_tree_child(s);
  CHECK_FALSE(v.tree_child);
  CHECK(v.p1_violations == std::vector<std::size_t>{0});
  CHECK_FALSE(is_tree_child_structural(build_rooted(s)));
}

TEST_CASE("(P) is (P3) on cherry-only sequences") {
  CHECK(check_p(CherryPickingSequence{C("a", "b"), C("b", "c")}));
  CHECK_FALSE(check_p(CherryPickingSequence{C("a", "b"), C("c", "a")}));
  CHECK(check_p(CherryPickingSequence{}));
  try {
    (void)check_p(CherryPickingSequence{C("a", "b"), R("b", "c")});
    FAIL("expected NonCherryItem");
  } catch (const NonCherryItem& e) {
    CHECK(e.index() == 1);
  }
  CHECK(check_tree_child(CherryPickingSequence{C("a", "b")}).satisfies_p == true);
  CHECK_FALSE(check_tree_child(CherryPickingSequence{R("a", "b"), C("a", "b")}).satisfies_p.has_value());
}

TEST_CASE("predicates agree with the naive oracle") {
  std::mt19937_64 rng(17);
  int tree_child = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    CherryPickingSequence s = random_sequence(rng);
    SequenceVerdict v = check_tree_child(s);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(v.successors[i] == oracle::successor(s, i));
    CHECK(v.tree_child == oracle::tree_child_sequence(s));
    CHECK(v.tree_child == (v.p1_violations.empty() && v.p2_violations.empty()));
    CHECK(v.p1_violations.empty() == oracle::p1(s));
    CHECK(v.p2_violations.empty() == oracle::p2(s));
    CHECK(check_p3(s) == oracle::p3(s));
    tree_child += v.tree_child;
  }
  CHECK(tree_child > 500);
  CHECK(tree_child < 4500);
}

TEST_CASE("replaying sequences") {
  CherryPickingSequence two_ret = parse_sequence("R b a\nC c b\nR b a\nC b a");
  RootedNetwork n = build_rooted(two_ret);
  auto trace = apply_sequence(n, two_ret);
  CHECK(trace.complete);
  CHECK(trace.maximal);
  CHECK(trace.networks.size() == 5);
  CHECK(trace.sequence() == two_ret);
  CHECK(is_complete_for(two_ret, n));

  CherryPickingSequence head{R("b", "a"), C("c", "b")};
  auto partial = apply_sequence(n, head);
  CHECK_FALSE(partial.maximal);
  CHECK_FALSE(partial.complete);
  CHECK_FALSE(is_complete_for(head, n));

  try {
    (void)apply_sequence(n, CherryPickingSequence{R("b", "a"), C("a", "c")});
    FAIL("expected StepInapplicable");
  } catch (const StepInapplicable& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("build_rooted reverses a complete sequence") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GeneratedNetwork g = generate_orchard(2 + seed % 7, seed % 5, seed);
    RootedNetwork n = build_rooted(g.sequence);
    CHECK(n.leaf_count() == 2 + seed % 7);
    CHECK(reticulation_number(n) == seed % 5);
    auto trace = apply_sequence(n, g.sequence);
    CHECK(trace.complete);
    CHECK(g.sequence.size() == n.leaf_count() + reticulation_number(n) - 1);
  }
  CHECK_THROWS_AS((void)build_rooted(CherryPickingSequence{}), MalformedSequence);
  CHECK_THROWS_AS((void)build_rooted(CherryPickingSequence{R("a", "b")}), MalformedSequence);
  // b is introduced twice.
  CHECK_THROWS_AS((void)build_rooted(CherryPickingSequence{C("b", "a"), C("b", "a")}), MalformedSequence);
  // c never appears later, so (c,a) has nothing to attach to.
  CHECK_THROWS_AS((void)build_rooted(CherryPickingSequence{R("c", "a"), C("b", "a")}), MalformedSequence);
  try {
    (void)build_rooted(CherryPickingSequence{R("c", "a"), C("b", "a")});
  } catch (const MalformedSequence& e) {
    CHECK(e.index() == 0);
  }
}

TEST_CASE("sequence container basics") {
  CherryPickingSequence s;
  CHECK(s.empty());
  s.push_back(R("a", "b"));
  s.push_back(C("a", "b"));
  CHECK(s.reticulated_count() == 1);
  CHECK(to_string(s) == "((a,b),[a,b])");
  s.pop_back();
  CHECK(s.size() == 1);
  CHECK_THROWS_AS((void)s.at(3), std::out_of_range);
}
