#include "treechild/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

namespace treechild {

namespace {

// Compact view used by refinement. Undirected graphs store each edge in
// both `out` and `in`, so one code path serves both kinds.
struct ColouredGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> out, in;
  std::vector<std::string> seed;
  std::vector<VertexId> ids;
};

ColouredGraph view_of(const RootedNetwork& net, bool labelled = true) {
  ColouredGraph g;
  g.ids = net.vertex_ids();
  g.n = g.ids.size();
  std::vector<std::uint32_t> index(net.id_bound(), 0);
  for (std::uint32_t i = 0; i < g.n; ++i) index[g.ids[i]] = i;
  g.out.resize(g.n);
  g.in.resize(g.n);
  g.seed.resize(g.n);
  for (std::uint32_t i = 0; i < g.n; ++i) {
    VertexId v = g.ids[i];
    for (VertexId c : net.children(v)) {
      g.out[i].push_back(index[c]);
      g.in[index[c]].push_back(i);
    }
    const std::string* label = net.label_of(v);
    g.seed[i] = label ? (labelled ? "L" + *label : "L") : "I";
  }
  return g;
}

ColouredGraph view_of(const UnrootedNetwork& net, bool labelled = true) {
  ColouredGraph g;
  g.ids = net.vertex_ids();
  g.n = g.ids.size();
  std::vector<std::uint32_t> index(net.id_bound(), 0);
  for (std::uint32_t i = 0; i < g.n; ++i) index[g.ids[i]] = i;
  g.out.resize(g.n);
  g.in.resize(g.n);
  g.seed.resize(g.n);
  for (std::uint32_t i = 0; i < g.n; ++i) {
    VertexId v = g.ids[i];
    for (VertexId w : net.neighbours(v)) {
      g.out[i].push_back(index[w]);
      g.in[i].push_back(index[w]);
    }
    const std::string* label = net.label_of(v);
    g.seed[i] = label ? (labelled ? "L" + *label : "L") : "I";
  }
  return g;
}

ColouredGraph disjoint_union(const ColouredGraph& a, const ColouredGraph& b) {
  ColouredGraph g = a;
  const auto shift = static_cast<std::uint32_t>(a.n);
  g.n = a.n + b.n;
  for (std::size_t i = 0; i < b.n; ++i) {
    auto shifted = [shift](std::vector<std::uint32_t> xs) {
      for (auto& x : xs) x += shift;
      return xs;
    };
    g.out.push_back(shifted(b.out[i]));
    g.in.push_back(shifted(b.in[i]));
    g.seed.push_back(b.seed[i]);
    g.ids.push_back(b.ids[i]);
  }
  return g;
}

using Colouring = std::vector<std::uint32_t>;

Colouring initial_colouring(const ColouredGraph& g) {
  std::vector<std::string> distinct = g.seed;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Colouring colour(g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    colour[i] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), g.seed[i]) -
                                           distinct.begin());
  return colour;
}

// Colour refinement to the coarsest stable partition. Colours are ranks of
// sorted signatures, so they depend only on the structure, never on ids.
void refine(const ColouredGraph& g, Colouring& colour) {
  std::size_t classes = 0;
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> sigs(g.n);
  while (true) {
    for (std::uint32_t v = 0; v < g.n; ++v) {
      auto& sig = sigs[v].first;
      sig.clear();
      sig.push_back(colour[v]);
      sig.push_back(static_cast<std::uint32_t>(g.out[v].size()));
      std::size_t mark = sig.size();
      for (auto w : g.out[v]) sig.push_back(colour[w]);
      std::sort(sig.begin() + static_cast<std::ptrdiff_t>(mark), sig.end());
      mark = sig.size();
      for (auto w : g.in[v]) sig.push_back(colour[w]);
      std::sort(sig.begin() + static_cast<std::ptrdiff_t>(mark), sig.end());
      sigs[v].second = v;
    }
    auto by_sig = sigs;
    std::sort(by_sig.begin(), by_sig.end());
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < by_sig.size(); ++i) {
      if (i > 0 && by_sig[i].first != by_sig[i - 1].first) ++rank;
      colour[by_sig[i].second] = rank;
    }
    std::size_t now = g.n == 0 ? 0 : rank + 1;
    if (now == classes) return;
    classes = now;
  }
}

Colouring individualise(const Colouring& colour, std::uint32_t target, std::initializer_list<std::uint32_t> chosen) {
  Colouring next(colour.size());
  for (std::uint32_t v = 0; v < colour.size(); ++v) {
    bool picked = std::find(chosen.begin(), chosen.end(), v) != chosen.end();
    next[v] = 2 * colour[v] + ((colour[v] == target && !picked) ? 1 : 0);
  }
  return next;
}

std::optional<std::uint32_t> first_split_cell(const Colouring& colour) {
  std::map<std::uint32_t, std::size_t> sizes;
  for (auto c : colour) ++sizes[c];
  for (const auto& [c, size] : sizes)
    if (size > 1) return c;
  return std::nullopt;
}

std::string certificate(const ColouredGraph& g, const Colouring& pos, bool directed) {
  std::vector<std::uint32_t> at(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) at[pos[v]] = v;
  std::string cert = std::to_string(g.n);
  cert += '|';
  for (std::uint32_t i = 0; i < g.n; ++i) {
    cert += g.seed[at[i]];
    cert += '\x1f';
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  for (std::uint32_t v = 0; v < g.n; ++v)
    for (auto w : g.out[v]) {
      if (directed)
        arcs.emplace_back(pos[v], pos[w]);
      else if (pos[v] < pos[w])
        arcs.emplace_back(pos[v], pos[w]);
    }
  std::sort(arcs.begin(), arcs.end());
  cert += '|';
  for (auto [a, b] : arcs) {
    cert += std::to_string(a);
    cert += '>';
    cert += std::to_string(b);
    cert += ';';
  }
  return cert;
}

struct Best {
  std::optional<std::string> cert;
  Colouring pos;
};

void canonical_search(const ColouredGraph& g, Colouring colour, bool directed, Best& best) {
  refine(g, colour);
  auto cell = first_split_cell(colour);
  if (!cell) {
    std::string cert = certificate(g, colour, directed);
    if (!best.cert || cert < *best.cert) {
      best.cert = std::move(cert);
      best.pos = colour;
    }
    return;
  }
  for (std::uint32_t v = 0; v < g.n; ++v)
    if (colour[v] == *cell) canonical_search(g, individualise(colour, *cell, {v}), directed, best);
}

CanonicalForm canonical_form_of(const ColouredGraph& g, bool directed, char kind) {
  Best best;
  canonical_search(g, initial_colouring(g), directed, best);
  CanonicalForm form;
  form.key = std::string(1, kind) + *best.cert;
  form.order.resize(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) form.order[best.pos[v]] = g.ids[v];
  return form;
}

// Every colour class must hold equally many vertices from each side.
bool balanced(const Colouring& colour, std::size_t left) {
  std::map<std::uint32_t, long> diff;
  for (std::size_t v = 0; v < colour.size(); ++v) diff[colour[v]] += v < left ? 1 : -1;
  return std::all_of(diff.begin(), diff.end(), [](const auto& e) { return e.second == 0; });
}

bool match(const ColouredGraph& u, std::size_t left, Colouring colour) {
  refine(u, colour);
  if (!balanced(colour, left)) return false;
  std::optional<std::uint32_t> cell;
  {
    std::map<std::uint32_t, std::size_t> sizes;
    for (std::size_t v = 0; v < left; ++v) ++sizes[colour[v]];
    for (const auto& [c, size] : sizes)
      if (size > 1) {
        cell = c;
        break;
      }
  }
  if (!cell) {
    // Discrete: the colouring is a bijection; verify it preserves adjacency.
    std::map<std::uint32_t, std::uint32_t> right_of;
    for (std::size_t v = left; v < u.n; ++v) right_of[colour[v]] = static_cast<std::uint32_t>(v);
    for (std::uint32_t v = 0; v < left; ++v) {
      std::vector<std::uint32_t> mapped;
      for (auto w : u.out[v]) mapped.push_back(right_of[colour[w]]);
      std::vector<std::uint32_t> actual = u.out[right_of[colour[v]]];
      std::sort(mapped.begin(), mapped.end());
      std::sort(actual.begin(), actual.end());
      if (mapped != actual) return false;
      if (u.seed[v] != u.seed[right_of[colour[v]]]) return false;
    }
    return true;
  }
  std::uint32_t pick = 0;
  while (colour[pick] != *cell) ++pick;
  for (auto w = static_cast<std::uint32_t>(left); w < u.n; ++w)
    if (colour[w] == *cell && match(u, left, individualise(colour, *cell, {pick, w}))) return true;
  return false;
}

bool isomorphic(const ColouredGraph& a, const ColouredGraph& b) {
  if (a.n != b.n) return false;
  std::size_t arcs_a = 0, arcs_b = 0;
  for (const auto& o : a.out) arcs_a += o.size();
  for (const auto& o : b.out) arcs_b += o.size();
  if (arcs_a != arcs_b) return false;
  ColouredGraph u = disjoint_union(a, b);
  return match(u, a.n, initial_colouring(u));
}

}  // namespace

CanonicalForm canonical_form(const RootedNetwork& network) {
  return canonical_form_of(view_of(network), true, 'R');
}

CanonicalForm canonical_form(const UnrootedNetwork& network) {
  return canonical_form_of(view_of(network), false, 'U');
}

std::string canonical_key(const RootedNetwork& network) { return canonical_form(network).key; }
std::string canonical_key(const UnrootedNetwork& network) { return canonical_form(network).key; }

std::string shape_key(const RootedNetwork& network) {
  return canonical_form_of(view_of(network, false), true, 'r').key;
}
std::string shape_key(const UnrootedNetwork& network) {
  return canonical_form_of(view_of(network, false), false, 'u').key;
}

std::string multigraph_key(const RawGraph& graph, bool labelled) {
  // Each edge becomes a vertex of its own, which keeps multiplicities.
  ColouredGraph g;
  g.n = graph.vertex_count + graph.edges.size();
  g.out.resize(g.n);
  g.in.resize(g.n);
  g.seed.assign(g.n, "I");
  g.ids.resize(g.n);
  for (std::uint32_t i = 0; i < g.n; ++i) g.ids[i] = i;
  for (const auto& [v, label] : graph.labels) g.seed[v] = labelled ? "L" + label : "L";
  for (std::size_t k = 0; k < graph.edges.size(); ++k) {
    auto e = static_cast<std::uint32_t>(graph.vertex_count + k);
    g.seed[e] = "E";
    for (VertexId v : {graph.edges[k].first, graph.edges[k].second}) {
      g.out[e].push_back(v);
      g.in[e].push_back(v);
      g.out[v].push_back(e);
      g.in[v].push_back(e);
    }
  }
  return canonical_form_of(g, false, 'm').key;
}

std::string canonical_key(const AnyNetwork& network) {
  return std::visit([](const auto& n) { return canonical_key(n); }, network);
}

bool are_isomorphic(const RootedNetwork& a, const RootedNetwork& b) {
  return isomorphic(view_of(a), view_of(b));
}

bool are_isomorphic(const UnrootedNetwork& a, const UnrootedNetwork& b) {
  return isomorphic(view_of(a), view_of(b));
}

bool are_isomorphic(const AnyNetwork& a, const AnyNetwork& b) {
  if (a.index() != b.index()) throw KindMismatch();
  if (const auto* ra = std::get_if<RootedNetwork>(&a)) return are_isomorphic(*ra, std::get<RootedNetwork>(b));
  return are_isomorphic(std::get<UnrootedNetwork>(a), std::get<UnrootedNetwork>(b));
}

}  // namespace treechild
