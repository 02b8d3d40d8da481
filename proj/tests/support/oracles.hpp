#pragma once

// Naive reference implementations used only by tests. Each one works from
// the textbook definition on raw vertex/arc lists and shares no code with
// the library beyond the public network accessors.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "treechild/isomorphism.hpp"
#include "treechild/network.hpp"
#include "treechild/sequence.hpp"

namespace oracle {

using treechild::CherryPickingSequence;
using treechild::RawDigraph;
using treechild::RawGraph;
using treechild::VertexId;

// s(i) straight from the definition, 0-based, nullopt for infinity.
inline std::optional<std::size_t> successor(const CherryPickingSequence& seq, std::size_t i) {
  for (std::size_t j = i + 1; j < seq.size(); ++j)
    if (seq[j].x == seq[i].x || seq[j].y == seq[i].x) return j;
  return std::nullopt;
}

inline bool p1(const CherryPickingSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq[i].is_reticulated()) continue;
    auto s = successor(seq, i);
    if (s && !seq[*s].is_cherry()) return false;
  }
  return true;
}

inline bool p2(const CherryPickingSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (!seq[i].is_reticulated() || !seq[j].is_reticulated()) continue;
      auto si = successor(seq, i);
      auto sj = successor(seq, j);
      if (si && sj && *si == *sj) return false;
    }
  return true;
}

inline bool tree_child_sequence(const CherryPickingSequence& seq) { return p1(seq) && p2(seq); }

inline bool p3(const CherryPickingSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i].x == seq[j].y) return false;
  return true;
}

struct Degrees {
  std::vector<int> in, out;
};

inline Degrees degrees(const RawDigraph& g) {
  Degrees d{std::vector<int>(g.vertex_count, 0), std::vector<int>(g.vertex_count, 0)};
  for (auto [u, v] : g.arcs) {
    ++d.out[u];
    ++d.in[v];
  }
  return d;
}

inline bool has_stack(const RawDigraph& g) {
  Degrees d = degrees(g);
  for (auto [u, v] : g.arcs)
    if (d.in[u] == 2 && d.in[v] == 2) return true;
  return false;
}

inline bool has_sibling_reticulations(const RawDigraph& g) {
  Degrees d = degrees(g);
  std::map<VertexId, int> reticulate_children;
  for (auto [u, v] : g.arcs)
    if (d.in[v] == 2 && ++reticulate_children[u] == 2) return true;
  return false;
}

inline bool tree_child(const RawDigraph& g) { return !has_stack(g) && !has_sibling_reticulations(g); }

inline std::size_t reticulations(const RawDigraph& g) {
  Degrees d = degrees(g);
  return static_cast<std::size_t>(std::count(d.in.begin(), d.in.end(), 2));
}

inline bool connected_without(const RawGraph& g, std::size_t skip) {
  if (g.vertex_count == 0) return true;
  std::vector<std::vector<VertexId>> adj(g.vertex_count);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i == skip) continue;
    adj[g.edges[i].first].push_back(g.edges[i].second);
    adj[g.edges[i].second].push_back(g.edges[i].first);
  }
  std::vector<bool> seen(g.vertex_count, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId a = stack.back();
    stack.pop_back();
    for (VertexId b : adj[a])
      if (!seen[b]) {
        seen[b] = true;
        ++count;
        stack.push_back(b);
      }
  }
  return count == g.vertex_count;
}

// Bridges by deleting each edge in turn, as sorted (min, max) pairs.
inline std::set<std::pair<VertexId, VertexId>> bridges(const RawGraph& g) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (!connected_without(g, i))
      out.emplace(std::min(g.edges[i].first, g.edges[i].second), std::max(g.edges[i].first, g.edges[i].second));
  return out;
}

// Label-fixing isomorphism by trying every bijection of internal vertices.
// Only for tiny networks (at most about nine internal vertices).
template <class Raw, class Links>
bool brute_isomorphic(const Raw& a, const Raw& b, Links links, bool directed) {
  if (a.vertex_count != b.vertex_count) return false;
  std::map<std::string, VertexId> leaf_b;
  for (const auto& [v, label] : b.labels) leaf_b[label] = v;
  std::vector<VertexId> map(a.vertex_count, treechild::kNoVertex);
  std::vector<VertexId> internal_a, internal_b;
  for (VertexId v = 0; v < a.vertex_count; ++v) {
    auto it = a.labels.find(v);
    if (it == a.labels.end()) {
      internal_a.push_back(v);
    } else {
      auto jt = leaf_b.find(it->second);
      if (jt == leaf_b.end()) return false;
      map[v] = jt->second;
    }
  }
  for (VertexId v = 0; v < b.vertex_count; ++v)
    if (!b.labels.count(v)) internal_b.push_back(v);
  if (internal_a.size() != internal_b.size()) return false;

  auto norm = [directed](std::pair<VertexId, VertexId> e) {
    if (!directed && e.first > e.second) std::swap(e.first, e.second);
    return e;
  };
  std::set<std::pair<VertexId, VertexId>> target;
  for (auto e : links(b)) target.insert(norm(e));
  std::sort(internal_b.begin(), internal_b.end());
  do {
    for (std::size_t i = 0; i < internal_a.size(); ++i) map[internal_a[i]] = internal_b[i];
    std::set<std::pair<VertexId, VertexId>> image;
    for (auto [u, v] : links(a)) image.insert(norm({map[u], map[v]}));
    if (image == target) return true;
  } while (std::next_permutation(internal_b.begin(), internal_b.end()));
  return false;
}

inline bool brute_isomorphic(const treechild::RootedNetwork& a, const treechild::RootedNetwork& b) {
  return brute_isomorphic(a.to_raw(), b.to_raw(), [](const RawDigraph& g) { return g.arcs; }, true);
}

inline bool brute_isomorphic(const treechild::UnrootedNetwork& a, const treechild::UnrootedNetwork& b) {
  return brute_isomorphic(a.to_raw(), b.to_raw(), [](const RawGraph& g) { return g.edges; }, false);
}

// Every unrooted network shape with exactly `leaves` leaves and
// `reticulations` reticulations, built directly: attach leaves to
// 3-regular stubs, then enumerate simple graphs on the internal vertices
// with the remaining degree sequence. Deduplicated by shape key.
inline std::map<std::string, RawGraph> direct_unrooted_shapes(std::size_t leaves, std::size_t reticulations) {
  std::map<std::string, RawGraph> out;
  auto keep = [&](const RawGraph& g) {
    if (!treechild::validate_unrooted(g).ok()) return;
    out.emplace(treechild::shape_key(treechild::UnrootedNetwork::from_raw(g)), g);
  };
  if (leaves == 0) return out;
  if (leaves == 1) {
    if (reticulations == 0) keep(RawGraph{1, {}, {{0, "a"}}});
    return out;
  }
  const std::size_t m = leaves + 2 * reticulations - 2;
  if (m == 0) {
    if (reticulations == 0) keep(RawGraph{2, {{0, 1}}, {{0, "a"}, {1, "b"}}});
    return out;
  }

  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId i = 0; i < m; ++i)
    for (VertexId j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

  std::vector<std::size_t> attach(leaves, 0);  // non-decreasing: leaves are interchangeable
  std::function<void(std::size_t)> place_leaf = [&](std::size_t k) {
    if (k == leaves) {
      std::vector<int> need(m, 3);
      for (std::size_t l = 0; l < leaves; ++l)
        if (--need[attach[l]] < 0) return;
      std::vector<std::pair<VertexId, VertexId>> chosen;
      std::function<void(std::size_t)> pick = [&](std::size_t p) {
        if (p == pairs.size()) {
          if (std::any_of(need.begin(), need.end(), [](int x) { return x != 0; })) return;
          RawGraph g;
          g.vertex_count = m + leaves;
          g.edges = chosen;
          for (std::size_t l = 0; l < leaves; ++l) {
            VertexId leaf = static_cast<VertexId>(m + l);
            g.edges.emplace_back(static_cast<VertexId>(attach[l]), leaf);
            g.labels[leaf] = std::string(1, static_cast<char>('a' + l));
          }
          keep(g);
          return;
        }
        auto [i, j] = pairs[p];
        // Vertex i must be saturated once its last pair has been decided.
        if (need[i] > 0 && need[j] > 0) {
          --need[i];
          --need[j];
          chosen.push_back(pairs[p]);
          pick(p + 1);
          chosen.pop_back();
          ++need[i];
          ++need[j];
        }
        bool last_for_i = (j == m - 1);
        if (!(last_for_i && need[i] > 0)) pick(p + 1);
      };
      pick(0);
      return;
    }
    for (std::size_t v = k == 0 ? 0 : attach[k - 1]; v < m; ++v) {
      attach[k] = v;
      place_leaf(k + 1);
    }
  };
  place_leaf(0);
  return out;
}

}  // namespace oracle
