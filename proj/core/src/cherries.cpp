#include "treechild/cherries.hpp"

#include <algorithm>

#include "editor.hpp"

namespace treechild {

namespace {

std::string reason_text(ReductionError::Reason reason, const Reduction& r) {
  switch (reason) {
    case ReductionError::Reason::WrongOrientation:
      return "reduction " + to_string(r) + " has the wrong orientation: " + r.y +
             " is the reticulation leaf";
    case ReductionError::Reason::NotApplicable:
      break;
  }
  return "reduction " + to_string(r) + " is not applicable";
}

[[noreturn]] void not_applicable(const Reduction& r) {
  throw ReductionError(ReductionError::Reason::NotApplicable, r);
}

// True if {u,v} lies on a cycle, i.e. v is still reachable from u without it.
bool on_cycle(const UnrootedNetwork& net, VertexId u, VertexId v) {
  std::vector<bool> seen(net.id_bound(), false);
  std::vector<VertexId> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    VertexId a = stack.back();
    stack.pop_back();
    for (VertexId b : net.neighbours(a)) {
      if (a == u && b == v) continue;
      if (b == v) return true;
      if (!seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  return false;
}

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

ReductionError::ReductionError(Reason reason, const Reduction& r)
    : std::invalid_argument(reason_text(reason, r)), reason_(reason) {}

std::string to_string(const Reduction& r) {
  return r.is_cherry() ? "[" + r.x + "," + r.y + "]" : "(" + r.x + "," + r.y + ")";
}

std::vector<std::pair<VertexId, VertexId>> bridges(const UnrootedNetwork& net) {
  // Iterative lowpoint DFS.
  const std::size_t bound = net.id_bound();
  std::vector<std::uint32_t> disc(bound, 0), low(bound, 0);
  std::vector<VertexId> parent(bound, kNoVertex);
  std::vector<std::pair<VertexId, VertexId>> found;
  std::uint32_t timer = 0;

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (VertexId start : net.vertex_ids()) {
    if (disc[start]) continue;
    std::vector<Frame> stack{{start, 0}};
    disc[start] = low[start] = ++timer;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = net.neighbours(f.v);
      if (f.next < nbrs.size()) {
        VertexId w = nbrs[f.next++];
        if (!disc[w]) {
          parent[w] = f.v;
          disc[w] = low[w] = ++timer;
          stack.push_back({w, 0});
        } else if (w != parent[f.v]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      VertexId v = f.v;
      stack.pop_back();
      if (!stack.empty()) {
        VertexId p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) found.emplace_back(std::min(p, v), std::max(p, v));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

// ---------------------------------------------------------------- listing

std::vector<std::pair<std::string, std::string>> list_cherries(const RootedNetwork& net) {
  std::vector<std::pair<std::string, std::string>> out;
  for (VertexId v : net.vertex_ids()) {
    const auto& kids = net.children(v);
    if (kids.size() != 2) continue;
    const std::string* a = net.label_of(kids[0]);
    const std::string* b = net.label_of(kids[1]);
    if (a && b) out.push_back(ordered(*a, *b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::string, std::string>> list_cherries(const UnrootedNetwork& net) {
  std::vector<std::pair<std::string, std::string>> out;
  if (net.is_single_edge()) {
    const auto& e = net.leaves().entries();
    out.emplace_back(e[0].first, e[1].first);
    return out;
  }
  for (VertexId v : net.vertex_ids()) {
    if (net.is_leaf(v)) continue;
    std::vector<const std::string*> leaves;
    for (VertexId w : net.neighbours(v))
      if (const std::string* l = net.label_of(w)) leaves.push_back(l);
    for (std::size_t i = 0; i < leaves.size(); ++i)
      for (std::size_t j = i + 1; j < leaves.size(); ++j) out.push_back(ordered(*leaves[i], *leaves[j]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ReductionSite> list_reticulated_cherries(const RootedNetwork& net) {
  std::vector<ReductionSite> out;
  for (const auto& [a, leaf] : net.leaves().entries()) {
    if (net.parents(leaf).empty()) continue;
    VertexId pa = net.parents(leaf)[0];
    if (!net.is_reticulation(pa)) continue;
    for (VertexId q : net.parents(pa)) {
      for (VertexId c : net.children(q)) {
        if (c == pa) continue;
        if (const std::string* b = net.label_of(c)) out.push_back({Reduction::reticulated(a, *b), {q, pa}});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& s, const auto& t) { return s.reduction < t.reduction; });
  return out;
}

std::vector<ReductionSite> list_reticulated_cherries(const UnrootedNetwork& net) {
  std::vector<ReductionSite> out;
  if (net.vertex_count() <= 2) return out;
  for (auto [u, v] : net.edges()) {
    if (net.is_leaf(u) || net.is_leaf(v)) continue;
    const std::string* a = nullptr;
    const std::string* b = nullptr;
    for (VertexId w : net.neighbours(u))
      if (const std::string* l = net.label_of(w)) a = l;
    for (VertexId w : net.neighbours(v))
      if (const std::string* l = net.label_of(w)) b = l;
    if (!a || !b) continue;
    if (!on_cycle(net, u, v)) continue;
    if (*a < *b)
      out.push_back({Reduction::reticulated(*a, *b), {u, v}});
    else
      out.push_back({Reduction::reticulated(*b, *a), {v, u}});
  }
  std::sort(out.begin(), out.end(), [](const auto& s, const auto& t) { return s.reduction < t.reduction; });
  return out;
}

std::vector<Reduction> applicable_reductions(const RootedNetwork& net) {
  std::vector<Reduction> out;
  for (const auto& [a, b] : list_cherries(net)) {
    out.push_back(Reduction::cherry(a, b));
    out.push_back(Reduction::cherry(b, a));
  }
  for (auto& site : list_reticulated_cherries(net)) out.push_back(std::move(site.reduction));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Reduction> applicable_reductions(const UnrootedNetwork& net) {
  std::vector<Reduction> out;
  for (const auto& [a, b] : list_cherries(net)) {
    out.push_back(Reduction::cherry(a, b));
    out.push_back(Reduction::cherry(b, a));
  }
  for (const auto& site : list_reticulated_cherries(net)) {
    out.push_back(Reduction::reticulated(site.reduction.x, site.reduction.y));
    out.push_back(Reduction::reticulated(site.reduction.y, site.reduction.x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------------- locating

ReductionSite locate(const RootedNetwork& net, const Reduction& r) {
  if (r.x == r.y) not_applicable(r);
  auto px = net.parent_of_leaf(r.x);
  auto py = net.parent_of_leaf(r.y);
  if (!px || !py) not_applicable(r);
  if (r.is_cherry()) {
    if (*px != *py) not_applicable(r);
    return {r, {*px}};
  }
  if (net.is_reticulation(*px) && net.children(*py).contains(*px)) return {r, {*py, *px}};
  if (net.is_reticulation(*py) && net.children(*px).contains(*py))
    throw ReductionError(ReductionError::Reason::WrongOrientation, r);
  not_applicable(r);
}

ReductionSite locate(const UnrootedNetwork& net, const Reduction& r) {
  if (r.x == r.y) not_applicable(r);
  auto vx = net.find_leaf(r.x);
  auto vy = net.find_leaf(r.y);
  if (!vx || !vy) not_applicable(r);
  if (net.is_single_edge()) {
    if (r.is_cherry()) return {r, {}};
    not_applicable(r);
  }
  auto px = net.parent_of_leaf(r.x);
  auto py = net.parent_of_leaf(r.y);
  if (r.is_cherry()) {
    if (*px != *py) not_applicable(r);
    return {r, {*px}};
  }
  if (*px == *py || !net.neighbours(*px).contains(*py) || !on_cycle(net, *px, *py)) not_applicable(r);
  return {r, {*px, *py}};
}

// --------------------------------------------------------------- reducing

RootedNetwork reduce(const RootedNetwork& net, const Reduction& r, ReductionRecord* record) {
  ReductionSite site = locate(net, r);
  RootedEditor ed(net);
  ReductionRecord rec;
  if (r.is_cherry()) {
    VertexId p = site.witness[0];
    VertexId x = *net.find_leaf(r.x);
    VertexId y = *net.find_leaf(r.y);
    ed.remove_arc(p, x);
    ed.remove_vertex(x);
    rec.removed_links.emplace_back(p, x);
    rec.deleted.push_back(x);
    if (p == net.root()) {
      ed.remove_arc(p, y);
      ed.remove_vertex(p);
      ed.set_root(y);
      rec.removed_links.emplace_back(p, y);
      rec.deleted.push_back(p);
    } else {
      ed.suppress(p);
      rec.suppressed.push_back(p);
    }
  } else {
    VertexId q = site.witness[0];
    VertexId ret = site.witness[1];
    ed.remove_arc(q, ret);
    rec.removed_links.emplace_back(q, ret);
    ed.suppress(ret);
    // p_y is never the root: the root cannot be a parent of a reticulation and a leaf.
    ed.suppress(q);
    rec.suppressed = {ret, q};
  }
  if (record) *record = std::move(rec);
  return std::move(ed).finish();
}

UnrootedNetwork reduce(const UnrootedNetwork& net, const Reduction& r, ReductionRecord* record) {
  ReductionSite site = locate(net, r);
  UnrootedEditor ed(net);
  ReductionRecord rec;
  VertexId x = *net.find_leaf(r.x);
  if (r.is_cherry()) {
    if (site.witness.empty()) {
      VertexId y = *net.find_leaf(r.y);
      ed.remove_edge(x, y);
      rec.removed_links.emplace_back(x, y);
    } else {
      VertexId p = site.witness[0];
      ed.remove_edge(p, x);
      rec.removed_links.emplace_back(p, x);
      ed.suppress(p);
      rec.suppressed.push_back(p);
    }
    ed.remove_vertex(x);
    rec.deleted.push_back(x);
  } else {
    VertexId u = site.witness[0];
    VertexId v = site.witness[1];
    ed.remove_edge(u, v);
    rec.removed_links.emplace_back(u, v);
    ed.suppress(u);
    ed.suppress(v);
    rec.suppressed = {u, v};
  }
  if (record) *record = std::move(rec);
  return std::move(ed).finish();
}

// -------------------------------------------------------------- expanding

RootedNetwork expand(const RootedNetwork& net, const Reduction& r) {
  if (r.x == r.y) throw ExpansionError("expansion " + to_string(r) + " repeats a label");
  auto vy = net.find_leaf(r.y);
  if (!vy) throw ExpansionError("expansion " + to_string(r) + " needs existing leaf " + r.y);
  RootedEditor ed(net);
  if (r.is_cherry()) {
    if (net.find_leaf(r.x)) throw ExpansionError("expansion " + to_string(r) + " reintroduces leaf " + r.x);
    if (!is_valid_label(r.x)) throw ExpansionError("invalid leaf label '" + r.x + "'");
    VertexId leaf = ed.add_vertex();
    ed.set_label(leaf, r.x);
    if (net.is_single_vertex()) {
      VertexId root = ed.add_vertex();
      ed.add_arc(root, leaf);
      ed.add_arc(root, *vy);
      ed.set_root(root);
    } else {
      VertexId u = ed.subdivide(net.parents(*vy)[0], *vy);
      ed.add_arc(u, leaf);
    }
    return std::move(ed).finish();
  }
  auto vx = net.find_leaf(r.x);
  if (!vx) throw ExpansionError("expansion " + to_string(r) + " needs existing leaf " + r.x);
  VertexId v = ed.subdivide(net.parents(*vx)[0], *vx);
  VertexId u = ed.subdivide(net.parents(*vy)[0], *vy);
  ed.add_arc(u, v);
  return std::move(ed).finish();
}

}  // namespace treechild
