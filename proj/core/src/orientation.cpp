#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "treechild/classify.hpp"
#include "treechild/isomorphism.hpp"

namespace treechild {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::None:
      return "none";
    case SearchStatus::BudgetExceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

// ---------------------------------------------------- pending constraints

bool PendingConstraints::claimed(std::string_view label) const {
  return std::binary_search(claims_.begin(), claims_.end(), label);
}

bool PendingConstraints::admits(const Reduction& r) const {
  const bool cx = claimed(r.x);
  const bool cy = claimed(r.y);
  // A reticulated successor breaks (P1); a cherry discharging two claims breaks (P2).
  if (r.is_reticulated()) return !cx && !cy;
  return !(cx && cy);
}

bool PendingConstraints::admit(const Reduction& r) {
  if (!admits(r)) return false;
  auto drop = [this](const std::string& label) {
    auto it = std::lower_bound(claims_.begin(), claims_.end(), label);
    if (it != claims_.end() && *it == label) claims_.erase(it);
  };
  drop(r.x);
  drop(r.y);
  if (r.is_reticulated()) claims_.insert(std::lower_bound(claims_.begin(), claims_.end(), r.x), r.x);
  return true;
}

std::string PendingConstraints::digest() const {
  std::string out;
  for (const auto& c : claims_) {
    out += c;
    out += '\x1e';
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExhausted {};

class SequenceSearch {
 public:
  SequenceSearch(std::uint64_t budget, bool tree_child) : budget_(budget), tree_child_(tree_child) {}

  bool run(const UnrootedNetwork& net, const PendingConstraints& pending) {
    if (stats.nodes_expanded >= budget_) throw BudgetExhausted{};
    ++stats.nodes_expanded;
    if (net.is_single_vertex()) return true;

    std::string key = canonical_key(net);
    if (tree_child_) {
      key += '\x1d';
      key += pending.digest();
    }
    if (failed_.count(key)) {
      ++stats.memo_hits;
      return false;
    }
    for (const auto& r : applicable_reductions(net)) {
      PendingConstraints next = pending;
      if (tree_child_ && !next.admit(r)) continue;
      path.push_back(r);
      if (run(reduce(net, r), next)) return true;
      path.pop_back();
    }
    failed_.insert(std::move(key));
    return false;
  }

  CherryPickingSequence path;
  SearchStats stats;

 private:
  std::uint64_t budget_;
  bool tree_child_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

OrientationResult find_tree_child_orientation(const UnrootedNetwork& network, std::uint64_t budget) {
  const auto start = Clock::now();
  OrientationResult result;
  SequenceSearch search(budget, true);
  try {
    if (network.is_single_vertex()) {
      ++search.stats.nodes_expanded;
      result.status = SearchStatus::Found;
      result.orientation = RootedNetwork::single_leaf(network.leaves().entries()[0].first);
      result.sequence = CherryPickingSequence{};
    } else if (search.run(network, PendingConstraints{})) {
      result.status = SearchStatus::Found;
      result.sequence = search.path;
      result.orientation = build_rooted(search.path);
      if (!are_isomorphic(unroot(*result.orientation), network))
        throw std::logic_error("reconstructed orientation does not unroot to the input");
    } else {
      result.status = SearchStatus::None;
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::BudgetExceeded;
  }
  result.stats = search.stats;
  result.stats.elapsed = Clock::now() - start;
  return result;
}

OrchardResult is_orchard_unrooted(const UnrootedNetwork& network, std::uint64_t budget) {
  const auto start = Clock::now();
  OrchardResult result;
  SequenceSearch search(budget, false);
  try {
    if (search.run(network, PendingConstraints{})) {
      result.status = SearchStatus::Found;
      result.sequence = search.path;
    } else {
      result.status = SearchStatus::None;
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::BudgetExceeded;
  }
  result.stats = search.stats;
  result.stats.elapsed = Clock::now() - start;
  return result;
}

// ---------------------------------------------------------- brute force

namespace {

struct Orienter {
  // Vertices 0..n-1 come from the network; n is the added root.
  std::vector<int> in, out;
  std::vector<bool> leaf;

  bool place(VertexId from, VertexId to) {
    ++out[from];
    ++in[to];
    return out[from] <= 2 && in[to] <= 2 && !leaf[from];
  }
  void unplace(VertexId from, VertexId to) {
    --out[from];
    --in[to];
  }
};

bool acyclic(std::size_t count, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  std::vector<std::vector<VertexId>> succ(count);
  std::vector<std::size_t> indeg(count, 0);
  for (auto [u, v] : arcs) {
    succ[u].push_back(v);
    ++indeg[v];
  }
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < count; ++v)
    if (!indeg[v]) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    VertexId u = ready.back();
    ready.pop_back();
    ++seen;
    for (VertexId w : succ[u])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == count;
}

// Reachability from `from` to `target` with edge `skip` removed.
bool reaches_without(const std::vector<std::vector<VertexId>>& adj, VertexId from, VertexId target,
                     std::pair<VertexId, VertexId> skip) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<VertexId> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    VertexId a = stack.back();
    stack.pop_back();
    if (a == target) return true;
    for (VertexId b : adj[a]) {
      if ((a == skip.first && b == skip.second) || (a == skip.second && b == skip.first)) continue;
      if (!seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  return false;
}

}  // namespace

OrientationResult brute_force_tree_child_orientation(const UnrootedNetwork& network, std::size_t edge_cap) {
  const auto start = Clock::now();
  OrientationResult result;
  if (network.edge_count() > edge_cap)
    throw SizeCapExceeded("network has " + std::to_string(network.edge_count()) + " edges; cap is " +
                          std::to_string(edge_cap));
  if (network.is_single_vertex()) {
    result.status = SearchStatus::Found;
    result.orientation = RootedNetwork::single_leaf(network.leaves().entries()[0].first);
    result.stats.nodes_expanded = 1;
    result.stats.elapsed = Clock::now() - start;
    return result;
  }

  const RawGraph raw = network.to_raw();
  const std::size_t n = raw.vertex_count;
  const VertexId root = static_cast<VertexId>(n);

  std::set<std::pair<VertexId, VertexId>> bridge_set;
  {
    std::vector<std::vector<VertexId>> adj(n);
    for (auto [u, v] : raw.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto [u, v] : raw.edges)
      if (!reaches_without(adj, u, v, {u, v})) bridge_set.emplace(u, v);
  }

  for (std::size_t root_edge = 0; root_edge < raw.edges.size() && result.status != SearchStatus::Found;
       ++root_edge) {
    const auto [p, q] = raw.edges[root_edge];
    std::vector<std::vector<VertexId>> adj(n + 1);
    std::vector<std::pair<VertexId, VertexId>> subdivided;
    for (std::size_t i = 0; i < raw.edges.size(); ++i) {
      if (i == root_edge) continue;
      subdivided.push_back(raw.edges[i]);
    }
    subdivided.emplace_back(root, p);
    subdivided.emplace_back(root, q);
    for (auto [u, v] : subdivided) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }

    Orienter o;
    o.in.assign(n + 1, 0);
    o.out.assign(n + 1, 0);
    o.leaf.assign(n + 1, false);
    for (const auto& [v, label] : raw.labels) o.leaf[v] = true;

    // Forced arcs: the two root arcs, and every bridge directed away from the root.
    std::vector<std::pair<VertexId, VertexId>> forced, free;
    bool consistent = true;
    for (auto [u, v] : subdivided) {
      if (u == root) {
        forced.emplace_back(u, v);
      } else if (bridge_set.count({std::min(u, v), std::max(u, v)})) {
        bool root_on_u_side = reaches_without(adj, u, root, {u, v});
        forced.push_back(root_on_u_side ? std::pair{u, v} : std::pair{v, u});
      } else {
        free.emplace_back(u, v);
      }
    }
    for (auto [u, v] : forced) consistent = o.place(u, v) && consistent;
    if (!consistent) continue;

    std::vector<std::pair<VertexId, VertexId>> arcs = forced;
    // Depth-first over free edge directions with degree pruning.
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
      if (i == free.size()) {
        ++result.stats.nodes_expanded;
        for (VertexId v = 0; v < n; ++v)
          if (!o.leaf[v] && !((o.in[v] == 1 && o.out[v] == 2) || (o.in[v] == 2 && o.out[v] == 1))) return false;
        if (!acyclic(n + 1, arcs)) return false;
        RawDigraph digraph;
        digraph.vertex_count = n + 1;
        digraph.arcs = arcs;
        digraph.labels = raw.labels;
        if (!validate_rooted(digraph).ok()) return false;
        RootedNetwork candidate = RootedNetwork::from_raw(digraph);
        if (!is_tree_child_structural(candidate)) return false;
        result.orientation = std::move(candidate);
        return true;
      }
      for (int flip = 0; flip < 2; ++flip) {
        auto [u, v] = free[i];
        if (flip) std::swap(u, v);
        if (o.place(u, v)) {
          arcs.emplace_back(u, v);
          if (assign(i + 1)) return true;
          arcs.pop_back();
        }
        o.unplace(u, v);
      }
      return false;
    };
    if (assign(0)) result.status = SearchStatus::Found;
  }
  result.stats.elapsed = Clock::now() - start;
  return result;
}

}  // namespace treechild
