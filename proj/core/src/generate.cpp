#include "treechild/generate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "editor.hpp"
#include "treechild/cherries.hpp"
#include "treechild/isomorphism.hpp"

namespace treechild {

namespace {

// Modulo keeps the stream identical across standard libraries; the bias is
// irrelevant at these sizes.
std::size_t pick(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

template <class T>
const T& pick_from(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[pick(rng, items.size())];
}

void check_parameters(std::size_t leaves, std::size_t reticulations) {
  if (leaves == 0) throw InfeasibleParameters("at least one leaf is required");
  if (reticulations > leaves - 1)
    throw InfeasibleParameters("a tree-child network on " + std::to_string(leaves) + " leaves has at most " +
                               std::to_string(leaves - 1) + " reticulations");
}

// Back-to-front sampler shared by both generators. Items are collected in
// reverse and flipped at the end.
class ReverseSampler {
 public:
  ReverseSampler(std::size_t leaves, std::size_t reticulations, std::uint64_t seed, bool tree_child)
      : rng_(seed), tree_child_(tree_child), cherries_left_(leaves - 1), reticulated_left_(reticulations) {
    unused_ = default_leaf_labels(leaves);
    std::shuffle(unused_.begin(), unused_.end(), rng_);
  }

  GeneratedNetwork run() {
    if (unused_.size() == 1) return {RootedNetwork::single_leaf(unused_.front()), {}};
    std::string y = take_label();
    present_.push_back(y);
    prepend_cherry(take_label(), y);

    while (cherries_left_ + reticulated_left_ > 0) {
      std::vector<std::string> claimable;
      if (tree_child_)
        for (const auto& label : present_)
          if (!claimed_[head_[label]] && rev_[head_[label]].is_cherry()) claimable.push_back(label);

      const bool cherry_ok = cherries_left_ > 0 && (!tree_child_ || reticulated_left_ <= cherries_left_);
      const bool reticulated_ok =
          reticulated_left_ > 0 &&
          (!tree_child_ || (!claimable.empty() && reticulated_left_ - 1 <= cherries_left_));
      if (!cherry_ok && !reticulated_ok) throw std::logic_error("generator reached a dead end");

      bool cherry = cherry_ok;
      if (cherry_ok && reticulated_ok) cherry = pick(rng_, cherries_left_ + reticulated_left_) < cherries_left_;

      if (cherry) {
        prepend_cherry(take_label(), pick_from(rng_, present_));
      } else {
        std::string x = tree_child_ ? pick_from(rng_, claimable) : pick_from(rng_, present_);
        std::vector<std::string> others;
        for (const auto& label : present_)
          if (label != x) others.push_back(label);
        std::string partner = pick_from(rng_, others);
        if (tree_child_) claimed_[head_[x]] = true;
        push(Reduction::reticulated(x, partner));
        --reticulated_left_;
      }
    }

    std::reverse(rev_.begin(), rev_.end());
    CherryPickingSequence seq(std::move(rev_));
    return {build_rooted(seq), seq};
  }

 private:
  std::string take_label() {
    std::string label = unused_.back();
    unused_.pop_back();
    return label;
  }

  void prepend_cherry(std::string x, std::string y) {
    present_.push_back(x);
    push(Reduction::cherry(std::move(x), std::move(y)));
    --cherries_left_;
  }

  void push(Reduction r) {
    head_[r.x] = rev_.size();
    head_[r.y] = rev_.size();
    rev_.push_back(std::move(r));
    claimed_.push_back(false);
  }

  std::mt19937_64 rng_;
  bool tree_child_;
  std::size_t cherries_left_;
  std::size_t reticulated_left_;
  std::vector<std::string> unused_;
  std::vector<std::string> present_;
  std::vector<Reduction> rev_;
  std::vector<bool> claimed_;
  std::map<std::string, std::size_t> head_;  // earliest item containing the label
};

}  // namespace

std::vector<std::string> default_leaf_labels(std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i)) : "t" + std::to_string(i + 1));
  return out;
}

GeneratedNetwork generate_tree_child(std::size_t leaves, std::size_t reticulations, std::uint64_t seed) {
  check_parameters(leaves, reticulations);
  GeneratedNetwork g = ReverseSampler(leaves, reticulations, seed, true).run();
  if (!is_tree_child_structural(g.network) || !check_tree_child(g.sequence).tree_child)
    throw std::logic_error("generated network is not tree-child");
  return g;
}

GeneratedNetwork generate_unrootable_tree_child(std::size_t leaves, std::size_t reticulations,
                                                std::uint64_t seed) {
  check_parameters(leaves, reticulations);
  std::mt19937_64 reseed(seed);
  for (std::size_t attempt = 0; attempt < kUnrootableAttempts; ++attempt) {
    // The first attempt uses the seed itself so that both generators agree when possible.
    GeneratedNetwork g = generate_tree_child(leaves, reticulations, attempt == 0 ? seed : reseed());
    if (g.network.is_single_vertex()) return g;
    const VertexId root = g.network.root();
    const VertexId u = g.network.children(root)[0];
    const VertexId v = g.network.children(root)[1];
    if (!g.network.children(u).contains(v) && !g.network.children(v).contains(u)) return g;
  }
  throw InfeasibleParameters("no draw produced a network whose unrooted form is simple");
}

GeneratedNetwork generate_orchard(std::size_t leaves, std::size_t reticulations, std::uint64_t seed) {
  if (leaves == 0) throw InfeasibleParameters("at least one leaf is required");
  if (leaves == 1 && reticulations > 0) throw InfeasibleParameters("a single leaf admits no reticulation");
  return ReverseSampler(leaves, reticulations, seed, false).run();
}

RootedNetwork add_random_reticulation(const RootedNetwork& network, std::mt19937_64& rng) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId u : network.vertex_ids())
    for (VertexId v : network.children(u)) arcs.emplace_back(u, v);
  if (arcs.size() < 2) throw std::invalid_argument("network needs at least two arcs");

  auto reaches = [&](VertexId from, VertexId target) {
    std::vector<bool> seen(network.id_bound(), false);
    std::vector<VertexId> stack{from};
    while (!stack.empty()) {
      VertexId a = stack.back();
      stack.pop_back();
      if (a == target) return true;
      if (seen[a]) continue;
      seen[a] = true;
      for (VertexId b : network.children(a)) stack.push_back(b);
    }
    return false;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = 0; j < arcs.size(); ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);

  for (auto [i, j] : pairs) {
    auto [a, b] = arcs[i];
    auto [c, d] = arcs[j];
    // The new arc runs from the first subdivision to the second; d reaching a closes a cycle.
    if (reaches(d, a)) continue;
    RootedEditor ed(network);
    VertexId u = ed.subdivide(a, b);
    VertexId v = ed.subdivide(c, d);
    ed.add_arc(u, v);
    return std::move(ed).finish();
  }
  throw std::invalid_argument("no arc pair admits a new reticulation");
}

// ------------------------------------------------------------ enumeration

namespace {

RawGraph with_leaf_on(const RawGraph& g, std::size_t edge, const std::string& label) {
  RawGraph out = g;
  auto [u, v] = g.edges[edge];
  VertexId s = static_cast<VertexId>(out.vertex_count++);
  VertexId leaf = static_cast<VertexId>(out.vertex_count++);
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(edge));
  out.edges.emplace_back(u, s);
  out.edges.emplace_back(s, v);
  out.edges.emplace_back(s, leaf);
  out.labels[leaf] = label;
  return out;
}

// Joins subdivision points of e1 and e2. With e1 == e2 both points sit on
// the same edge and the result has a parallel pair.
RawGraph with_edge_between(const RawGraph& g, std::size_t e1, std::size_t e2) {
  RawGraph out = g;
  VertexId s = static_cast<VertexId>(out.vertex_count++);
  VertexId t = static_cast<VertexId>(out.vertex_count++);
  if (e1 == e2) {
    auto [a, b] = g.edges[e1];
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(e1));
    out.edges.emplace_back(a, s);
    out.edges.emplace_back(s, t);
    out.edges.emplace_back(t, b);
    out.edges.emplace_back(s, t);
    return out;
  }
  auto [a, b] = g.edges[e1];
  auto [c, d] = g.edges[e2];
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(std::max(e1, e2)));
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(std::min(e1, e2)));
  out.edges.emplace_back(a, s);
  out.edges.emplace_back(s, b);
  out.edges.emplace_back(c, t);
  out.edges.emplace_back(t, d);
  out.edges.emplace_back(s, t);
  return out;
}

// Hangs a vertex carrying a loop off a subdivision point of edge.
RawGraph with_pendant_loop(const RawGraph& g, std::size_t edge) {
  RawGraph out = g;
  auto [u, v] = g.edges[edge];
  VertexId s = static_cast<VertexId>(out.vertex_count++);
  VertexId t = static_cast<VertexId>(out.vertex_count++);
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(edge));
  out.edges.emplace_back(u, s);
  out.edges.emplace_back(s, v);
  out.edges.emplace_back(s, t);
  out.edges.emplace_back(t, t);
  return out;
}

}  // namespace

std::vector<UnrootedNetwork> enumerate_unrooted_networks(std::size_t max_leaves, std::size_t max_reticulations,
                                                         CorpusMode mode) {
  std::vector<UnrootedNetwork> found;
  if (max_leaves == 0) return found;
  const auto labels = default_leaf_labels(max_leaves);

  // Growth runs over multigraphs with loops. Deleting a cycle edge or a
  // pendant loop and suppressing always stays inside that class, so every
  // simple network is reached; restricting states to simple graphs is not
  // enough.
  std::unordered_set<std::string> seen;
  std::vector<RawGraph> frontier;
  auto admit = [&](RawGraph g) {
    if (!seen.insert(multigraph_key(g, false)).second) return;
    if (validate_unrooted(g).ok()) found.push_back(UnrootedNetwork::from_raw(g));
    frontier.push_back(std::move(g));
  };
  admit(RawGraph{1, {}, {{0, labels[0]}}});
  if (max_leaves >= 2) admit(RawGraph{2, {{0, 1}}, {{0, labels[0]}, {1, labels[1]}}});

  while (!frontier.empty()) {
    const RawGraph g = std::move(frontier.back());
    frontier.pop_back();
    if (g.edges.empty()) continue;
    const std::size_t n = g.labels.size();
    const std::size_t r = g.edges.size() + 1 - g.vertex_count;
    if (n < max_leaves)
      for (std::size_t e = 0; e < g.edges.size(); ++e) admit(with_leaf_on(g, e, labels[n]));
    if (r < max_reticulations)
      for (std::size_t e1 = 0; e1 < g.edges.size(); ++e1)
        for (std::size_t e2 = e1; e2 < g.edges.size(); ++e2) admit(with_edge_between(g, e1, e2));
    if (r < max_reticulations)
      for (std::size_t e = 0; e < g.edges.size(); ++e) admit(with_pendant_loop(g, e));
  }

  if (mode == CorpusMode::Shapes) return found;

  // Close under permutations of the leaf labels.
  std::unordered_set<std::string> keys;
  for (const auto& net : found) keys.insert(canonical_key(net));
  const std::size_t grown = found.size();
  for (std::size_t i = 0; i < grown; ++i) {
    const RawGraph g = found[i].to_raw();
    std::vector<VertexId> leaves;
    std::vector<std::string> names;
    for (const auto& [v, label] : g.labels) {
      leaves.push_back(v);
      names.push_back(label);
    }
    std::sort(names.begin(), names.end());
    while (std::next_permutation(names.begin(), names.end())) {
      RawGraph h = g;
      for (std::size_t k = 0; k < leaves.size(); ++k) h.labels[leaves[k]] = names[k];
      UnrootedNetwork relabelled = UnrootedNetwork::from_raw(h);
      if (keys.insert(canonical_key(relabelled)).second) found.push_back(std::move(relabelled));
    }
  }
  return found;
}

std::vector<RootedNetwork> enumerate_orchard_networks(std::size_t max_leaves, std::size_t max_reticulations) {
  std::vector<RootedNetwork> found;
  if (max_leaves == 0) return found;
  const auto labels = default_leaf_labels(max_leaves);

  std::unordered_set<std::string> seen;
  std::vector<RootedNetwork> frontier;
  auto admit = [&](RootedNetwork net) {
    if (seen.insert(canonical_key(net)).second) {
      frontier.push_back(net);
      found.push_back(std::move(net));
    }
  };
  admit(RootedNetwork::single_leaf(labels[0]));

  while (!frontier.empty()) {
    RootedNetwork net = std::move(frontier.back());
    frontier.pop_back();
    const std::size_t n = net.leaf_count();
    const auto present = net.labels();
    if (n < max_leaves)
      for (const auto& y : present) admit(expand(net, Reduction::cherry(labels[n], y)));
    if (reticulation_number(net) < max_reticulations)
      for (const auto& x : present)
        for (const auto& y : present)
          if (x != y) admit(expand(net, Reduction::reticulated(x, y)));
  }
  return found;
}

}  // namespace treechild
