#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treechild {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Fixed-capacity neighbour list. Binary networks never exceed three
// neighbours per vertex, so adjacency lives inline in the vertex record.
template <std::size_t Capacity>
class Adjacency {
 public:
  bool push(VertexId v) {
    if (size_ == Capacity) return false;
    items_[size_++] = v;
    return true;
  }
  bool erase(VertexId v) {
    for (std::uint8_t i = 0; i < size_; ++i) {
      if (items_[i] == v) {
        items_[i] = items_[--size_];
        return true;
      }
    }
    return false;
  }
  bool replace(VertexId from, VertexId to) {
    for (std::uint8_t i = 0; i < size_; ++i) {
      if (items_[i] == from) {
        items_[i] = to;
        return true;
      }
    }
    return false;
  }
  bool contains(VertexId v) const {
    for (std::uint8_t i = 0; i < size_; ++i)
      if (items_[i] == v) return true;
    return false;
  }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  VertexId operator[](std::size_t i) const { return items_[i]; }
  const VertexId* begin() const { return items_.data(); }
  const VertexId* end() const { return items_.data() + size_; }

 private:
  std::array<VertexId, Capacity> items_{};
  std::uint8_t size_ = 0;
};

// Unvalidated input graphs. Vertex identifiers are 0..vertex_count-1.
struct RawDigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> arcs;
  std::map<VertexId, std::string> labels;
};

struct RawGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<VertexId, std::string> labels;
};

struct Violation {
  std::string rule;
  std::string detail;
  std::vector<VertexId> vertices;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view rule) const;
  std::string summary() const;
};

class InvalidNetwork : public std::runtime_error {
 public:
  explicit InvalidNetwork(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Label tokens may not contain whitespace or extended-Newick punctuation.
bool is_valid_label(std::string_view label);

ValidationReport validate_rooted(const RawDigraph& candidate);
ValidationReport validate_unrooted(const RawGraph& candidate);

// Sorted label -> vertex map shared by both network kinds.
class LeafIndex {
 public:
  std::optional<VertexId> find(std::string_view label) const;
  const std::string* label_of(VertexId v) const;
  void insert(std::string label, VertexId v);
  void erase(std::string_view label);
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<std::string, VertexId>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, VertexId>> entries_;
};

class RootedNetwork {
 public:
  struct Vertex {
    Adjacency<2> parents;
    Adjacency<2> children;
    bool alive = false;
  };

  // Throws InvalidNetwork carrying the full report.
  static RootedNetwork from_raw(const RawDigraph& raw);
  static RootedNetwork single_leaf(std::string label);

  VertexId root() const { return root_; }
  bool is_single_vertex() const { return vertex_count_ == 1; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arc_count() const { return arc_count_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  // One past the largest identifier ever issued; ids of dead vertices are not reused.
  std::size_t id_bound() const { return vertices_.size(); }

  bool contains(VertexId v) const { return v < vertices_.size() && vertices_[v].alive; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Adjacency<2>& parents(VertexId v) const { return vertices_.at(v).parents; }
  const Adjacency<2>& children(VertexId v) const { return vertices_.at(v).children; }
  std::vector<VertexId> vertex_ids() const;

  bool is_leaf(VertexId v) const { return contains(v) && leaves_.label_of(v) != nullptr; }
  bool is_reticulation(VertexId v) const { return contains(v) && vertices_[v].parents.size() == 2; }
  bool is_tree_vertex(VertexId v) const {
    return contains(v) && vertices_[v].parents.size() == 1 && vertices_[v].children.size() == 2;
  }

  std::optional<VertexId> find_leaf(std::string_view label) const { return leaves_.find(label); }
  const std::string* label_of(VertexId v) const { return leaves_.label_of(v); }
  const LeafIndex& leaves() const { return leaves_; }
  std::vector<std::string> labels() const;
  // p_a: the unique parent of a leaf, or nullopt for the single-vertex network.
  std::optional<VertexId> parent_of_leaf(std::string_view label) const;

  RawDigraph to_raw() const;

 private:
  friend class RootedEditor;
  std::vector<Vertex> vertices_;
  LeafIndex leaves_;
  VertexId root_ = kNoVertex;
  std::size_t vertex_count_ = 0;
  std::size_t arc_count_ = 0;
};

class UnrootedNetwork {
 public:
  struct Vertex {
    Adjacency<3> neighbours;
    bool alive = false;
  };

  static UnrootedNetwork from_raw(const RawGraph& raw);
  static UnrootedNetwork single_leaf(std::string label);

  bool is_single_vertex() const { return vertex_count_ == 1; }
  bool is_single_edge() const { return vertex_count_ == 2; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  std::size_t id_bound() const { return vertices_.size(); }

  bool contains(VertexId v) const { return v < vertices_.size() && vertices_[v].alive; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Adjacency<3>& neighbours(VertexId v) const { return vertices_.at(v).neighbours; }
  std::vector<VertexId> vertex_ids() const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  bool is_leaf(VertexId v) const { return contains(v) && leaves_.label_of(v) != nullptr; }
  std::optional<VertexId> find_leaf(std::string_view label) const { return leaves_.find(label); }
  const std::string* label_of(VertexId v) const { return leaves_.label_of(v); }
  const LeafIndex& leaves() const { return leaves_; }
  std::vector<std::string> labels() const;
  std::optional<VertexId> parent_of_leaf(std::string_view label) const;

  RawGraph to_raw() const;

 private:
  friend class UnrootedEditor;
  std::vector<Vertex> vertices_;
  LeafIndex leaves_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

// Rooted: number of reticulations. Unrooted: |E| - (|V| - 1).
std::size_t reticulation_number(const RootedNetwork& network);
std::size_t reticulation_number(const UnrootedNetwork& network);

bool is_stack_free(const RootedNetwork& network);
bool has_sibling_reticulations(const RootedNetwork& network);
// No stack and no sibling reticulations.
bool is_tree_child_structural(const RootedNetwork& network);
// Every non-leaf vertex has a child that is a tree vertex or a leaf.
bool is_tree_child_by_children(const RootedNetwork& network);

// Drops arc directions and suppresses the root. Throws InvalidNetwork when
// suppressing the root would create a parallel edge.
UnrootedNetwork unroot(const RootedNetwork& network);

}  // namespace treechild
