#include "treechild/network.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "editor.hpp"

namespace treechild {

namespace {

std::string id_list(const std::vector<VertexId>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
  return out.str();
}

void add_violation(ValidationReport& report, std::string rule, std::string detail,
                   std::vector<VertexId> vertices = {}) {
  report.violations.push_back({std::move(rule), std::move(detail), std::move(vertices)});
}

// Label checks common to both kinds. Returns false if any label key is out of range.
void check_labels(const std::map<VertexId, std::string>& labels, std::size_t vertex_count,
                  ValidationReport& report) {
  std::map<std::string, VertexId> seen;
  for (const auto& [v, label] : labels) {
    if (v >= vertex_count) {
      add_violation(report, "vertex-range", "label '" + label + "' attached to unknown vertex", {v});
      continue;
    }
    if (!is_valid_label(label))
      add_violation(report, "label-syntax", "label '" + label + "' is empty or contains a reserved character", {v});
    auto [it, inserted] = seen.emplace(label, v);
    if (!inserted)
      add_violation(report, "label-duplicate", "label '" + label + "' used more than once", {it->second, v});
  }
}

}  // namespace

bool ValidationReport::has(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    out << (i ? "; " : "") << v.rule << ": " << v.detail;
    if (!v.vertices.empty()) out << " [" << id_list(v.vertices) << "]";
  }
  return out.str();
}

InvalidNetwork::InvalidNetwork(ValidationReport report)
    : std::runtime_error("invalid network: " + report.summary()), report_(std::move(report)) {}

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    auto uc = static_cast<unsigned char>(c);
    if (uc <= 0x20 || uc == 0x7f) return false;
    switch (c) {
      case '(': case ')': case ',': case ';': case ':':
      case '[': case ']': case '\'': case '#':
        return false;
      default:
        break;
    }
  }
  return true;
}

ValidationReport validate_rooted(const RawDigraph& g) {
  ValidationReport report;
  const std::size_t n = g.vertex_count;
  if (n == 0) {
    add_violation(report, "empty", "network has no vertices");
    return report;
  }
  check_labels(g.labels, n, report);

  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  std::set<std::pair<VertexId, VertexId>> seen_arcs;
  std::vector<std::vector<VertexId>> out(n);
  for (const auto& [u, v] : g.arcs) {
    if (u >= n || v >= n) {
      add_violation(report, "vertex-range", "arc refers to an unknown vertex", {u, v});
      continue;
    }
    if (u == v) {
      add_violation(report, "self-loop", "arc from a vertex to itself", {u});
      continue;
    }
    if (!seen_arcs.emplace(u, v).second) {
      add_violation(report, "parallel-arc", "arc appears more than once", {u, v});
      continue;
    }
    ++outdeg[u];
    ++indeg[v];
    out[u].push_back(v);
  }

  if (n == 1) {
    if (!g.labels.count(0)) add_violation(report, "leaf-label", "single-vertex network must be labelled", {0});
    return report;
  }

  std::vector<VertexId> sources;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) sources.push_back(v);
  if (sources.size() != 1)
    add_violation(report, "root-count", "expected exactly one vertex of in-degree 0, found " +
                                            std::to_string(sources.size()), sources);
  for (VertexId s : sources)
    if (outdeg[s] != 2)
      add_violation(report, "root-degree", "root must have out-degree 2", {s});

  for (VertexId v = 0; v < n; ++v) {
    const bool labelled = g.labels.count(v) > 0;
    if (indeg[v] == 0) {
      if (labelled) add_violation(report, "labelled-internal", "root carries a leaf label", {v});
      continue;
    }
    if (outdeg[v] == 0) {
      if (indeg[v] != 1) add_violation(report, "degree-profile", "leaf must have in-degree 1", {v});
      if (!labelled) add_violation(report, "leaf-label", "out-degree-0 vertex has no label", {v});
      continue;
    }
    if (labelled) add_violation(report, "labelled-internal", "labelled vertex has children", {v});
    const bool tree_vertex = indeg[v] == 1 && outdeg[v] == 2;
    const bool reticulation = indeg[v] == 2 && outdeg[v] == 1;
    if (!tree_vertex && !reticulation)
      add_violation(report, "degree-profile",
                    "internal vertex has in-degree " + std::to_string(indeg[v]) + " and out-degree " +
                        std::to_string(outdeg[v]),
                    {v});
  }

  // Kahn's algorithm; leftovers lie on or below a directed cycle.
  std::vector<std::size_t> remaining = indeg;
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v)
    if (remaining[v] == 0) ready.push_back(v);
  std::size_t processed = 0;
  while (!ready.empty()) {
    VertexId u = ready.back();
    ready.pop_back();
    ++processed;
    for (VertexId w : out[u])
      if (--remaining[w] == 0) ready.push_back(w);
  }
  if (processed != n) {
    std::vector<VertexId> stuck;
    for (VertexId v = 0; v < n; ++v)
      if (remaining[v] > 0) stuck.push_back(v);
    add_violation(report, "cycle", "graph contains a directed cycle", stuck);
  }
  return report;
}

ValidationReport validate_unrooted(const RawGraph& g) {
  ValidationReport report;
  const std::size_t n = g.vertex_count;
  if (n == 0) {
    add_violation(report, "empty", "network has no vertices");
    return report;
  }
  check_labels(g.labels, n, report);

  std::vector<std::size_t> deg(n, 0);
  std::set<std::pair<VertexId, VertexId>> seen_edges;
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [u, v] : g.edges) {
    if (u >= n || v >= n) {
      add_violation(report, "vertex-range", "edge refers to an unknown vertex", {u, v});
      continue;
    }
    if (u == v) {
      add_violation(report, "self-loop", "edge from a vertex to itself", {u});
      continue;
    }
    if (!seen_edges.emplace(std::min(u, v), std::max(u, v)).second) {
      add_violation(report, "parallel-edge", "edge appears more than once", {u, v});
      continue;
    }
    ++deg[u];
    ++deg[v];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  if (n == 1) {
    if (!g.labels.count(0)) add_violation(report, "leaf-label", "single-vertex network must be labelled", {0});
    return report;
  }

  for (VertexId v = 0; v < n; ++v) {
    const bool labelled = g.labels.count(v) > 0;
    if (deg[v] == 1) {
      if (!labelled) add_violation(report, "leaf-label", "degree-1 vertex has no label", {v});
    } else if (deg[v] == 3) {
      if (labelled) add_violation(report, "labelled-internal", "labelled vertex has degree 3", {v});
    } else {
      add_violation(report, "degree-profile", "vertex has degree " + std::to_string(deg[v]), {v});
    }
  }

  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) {
    std::vector<VertexId> unreached;
    for (VertexId v = 0; v < n; ++v)
      if (!seen[v]) unreached.push_back(v);
    add_violation(report, "disconnected", "graph is not connected", unreached);
  }
  return report;
}

std::optional<VertexId> LeafIndex::find(std::string_view label) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), label,
                             [](const auto& e, std::string_view l) { return e.first < l; });
  if (it != entries_.end() && it->first == label) return it->second;
  return std::nullopt;
}

const std::string* LeafIndex::label_of(VertexId v) const {
  for (const auto& e : entries_)
    if (e.second == v) return &e.first;
  return nullptr;
}

void LeafIndex::insert(std::string label, VertexId v) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), label,
                             [](const auto& e, const std::string& l) { return e.first < l; });
  entries_.emplace(it, std::move(label), v);
}

void LeafIndex::erase(std::string_view label) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), label,
                             [](const auto& e, std::string_view l) { return e.first < l; });
  if (it != entries_.end() && it->first == label) entries_.erase(it);
}

// ---------------------------------------------------------------- rooted

RootedNetwork RootedNetwork::from_raw(const RawDigraph& raw) {
  ValidationReport report = validate_rooted(raw);
  if (!report.ok()) throw InvalidNetwork(std::move(report));

  RootedNetwork net;
  net.vertices_.resize(raw.vertex_count);
  for (auto& v : net.vertices_) v.alive = true;
  net.vertex_count_ = raw.vertex_count;
  for (auto [u, v] : raw.arcs) {
    net.vertices_[u].children.push(v);
    net.vertices_[v].parents.push(u);
  }
  net.arc_count_ = raw.arcs.size();
  for (const auto& [v, label] : raw.labels) net.leaves_.insert(label, v);
  for (VertexId v = 0; v < raw.vertex_count; ++v)
    if (net.vertices_[v].parents.empty()) net.root_ = v;
  return net;
}

RootedNetwork RootedNetwork::single_leaf(std::string label) {
  RawDigraph raw;
  raw.vertex_count = 1;
  raw.labels[0] = std::move(label);
  return from_raw(raw);
}

std::vector<VertexId> RootedNetwork::vertex_ids() const {
  std::vector<VertexId> ids;
  ids.reserve(vertex_count_);
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].alive) ids.push_back(v);
  return ids;
}

std::vector<std::string> RootedNetwork::labels() const {
  std::vector<std::string> out;
  for (const auto& e : leaves_.entries()) out.push_back(e.first);
  return out;
}

std::optional<VertexId> RootedNetwork::parent_of_leaf(std::string_view label) const {
  auto leaf = leaves_.find(label);
  if (!leaf || vertices_[*leaf].parents.empty()) return std::nullopt;
  return vertices_[*leaf].parents[0];
}

RawDigraph RootedNetwork::to_raw() const {
  std::vector<VertexId> compact(vertices_.size(), kNoVertex);
  RawDigraph raw;
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].alive) compact[v] = static_cast<VertexId>(raw.vertex_count++);
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (!vertices_[v].alive) continue;
    for (VertexId c : vertices_[v].children) raw.arcs.emplace_back(compact[v], compact[c]);
  }
  for (const auto& [label, v] : leaves_.entries()) raw.labels[compact[v]] = label;
  return raw;
}

// -------------------------------------------------------------- unrooted

UnrootedNetwork UnrootedNetwork::from_raw(const RawGraph& raw) {
  ValidationReport report = validate_unrooted(raw);
  if (!report.ok()) throw InvalidNetwork(std::move(report));

  UnrootedNetwork net;
  net.vertices_.resize(raw.vertex_count);
  for (auto& v : net.vertices_) v.alive = true;
  net.vertex_count_ = raw.vertex_count;
  for (auto [u, v] : raw.edges) {
    net.vertices_[u].neighbours.push(v);
    net.vertices_[v].neighbours.push(u);
  }
  net.edge_count_ = raw.edges.size();
  for (const auto& [v, label] : raw.labels) net.leaves_.insert(label, v);
  return net;
}

UnrootedNetwork UnrootedNetwork::single_leaf(std::string label) {
  RawGraph raw;
  raw.vertex_count = 1;
  raw.labels[0] = std::move(label);
  return from_raw(raw);
}

std::vector<VertexId> UnrootedNetwork::vertex_ids() const {
  std::vector<VertexId> ids;
  ids.reserve(vertex_count_);
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].alive) ids.push_back(v);
  return ids;
}

std::vector<std::pair<VertexId, VertexId>> UnrootedNetwork::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (!vertices_[v].alive) continue;
    for (VertexId w : vertices_[v].neighbours)
      if (v < w) out.emplace_back(v, w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> UnrootedNetwork::labels() const {
  std::vector<std::string> out;
  for (const auto& e : leaves_.entries()) out.push_back(e.first);
  return out;
}

std::optional<VertexId> UnrootedNetwork::parent_of_leaf(std::string_view label) const {
  auto leaf = leaves_.find(label);
  if (!leaf || vertices_[*leaf].neighbours.empty()) return std::nullopt;
  return vertices_[*leaf].neighbours[0];
}

RawGraph UnrootedNetwork::to_raw() const {
  std::vector<VertexId> compact(vertices_.size(), kNoVertex);
  RawGraph raw;
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].alive) compact[v] = static_cast<VertexId>(raw.vertex_count++);
  for (auto [u, v] : edges()) raw.edges.emplace_back(compact[u], compact[v]);
  for (const auto& [label, v] : leaves_.entries()) raw.labels[compact[v]] = label;
  return raw;
}

// ------------------------------------------------------------ structure

std::size_t reticulation_number(const RootedNetwork& network) {
  std::size_t count = 0;
  for (VertexId v : network.vertex_ids())
    if (network.parents(v).size() == 2) ++count;
  return count;
}

std::size_t reticulation_number(const UnrootedNetwork& network) {
  return network.edge_count() + 1 - network.vertex_count();
}

bool is_stack_free(const RootedNetwork& network) {
  for (VertexId v : network.vertex_ids()) {
    if (!network.is_reticulation(v)) continue;
    for (VertexId p : network.parents(v))
      if (network.is_reticulation(p)) return false;
  }
  return true;
}

bool has_sibling_reticulations(const RootedNetwork& network) {
  for (VertexId v : network.vertex_ids()) {
    const auto& kids = network.children(v);
    if (kids.size() == 2 && network.is_reticulation(kids[0]) && network.is_reticulation(kids[1])) return true;
  }
  return false;
}

bool is_tree_child_structural(const RootedNetwork& network) {
  return is_stack_free(network) && !has_sibling_reticulations(network);
}

bool is_tree_child_by_children(const RootedNetwork& network) {
  for (VertexId v : network.vertex_ids()) {
    const auto& kids = network.children(v);
    if (kids.empty()) continue;
    bool ok = false;
    for (VertexId c : kids)
      if (network.is_leaf(c) || network.is_tree_vertex(c)) ok = true;
    if (!ok) return false;
  }
  return true;
}

UnrootedNetwork unroot(const RootedNetwork& network) {
  RawDigraph directed = network.to_raw();
  RawGraph raw;
  raw.labels = directed.labels;
  if (directed.vertex_count == 1) {
    raw.vertex_count = 1;
    return UnrootedNetwork::from_raw(raw);
  }

  std::vector<std::size_t> indeg(directed.vertex_count, 0);
  for (auto [u, v] : directed.arcs) ++indeg[v];
  VertexId root = static_cast<VertexId>(std::find(indeg.begin(), indeg.end(), 0) - indeg.begin());

  // Renumber so that the root disappears.
  std::vector<VertexId> compact(directed.vertex_count);
  VertexId next = 0;
  for (VertexId v = 0; v < directed.vertex_count; ++v) compact[v] = v == root ? kNoVertex : next++;
  raw.vertex_count = next;

  std::vector<VertexId> root_children;
  for (auto [u, v] : directed.arcs) {
    if (u == root)
      root_children.push_back(compact[v]);
    else
      raw.edges.emplace_back(compact[u], compact[v]);
  }
  raw.edges.emplace_back(root_children[0], root_children[1]);
  std::map<VertexId, std::string> labels;
  for (const auto& [v, label] : raw.labels) labels[compact[v]] = label;
  raw.labels = std::move(labels);
  return UnrootedNetwork::from_raw(raw);
}

}  // namespace treechild
