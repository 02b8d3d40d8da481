#pragma once

// Internal mutation API. Public network values are immutable; every
// operation that derives a new network copies it into an editor first.

#include <cassert>
#include <string>
#include <utility>

#include "treechild/network.hpp"

namespace treechild {

class RootedEditor {
 public:
  explicit RootedEditor(RootedNetwork base) : net_(std::move(base)) {}

  VertexId add_vertex() {
    net_.vertices_.push_back({});
    net_.vertices_.back().alive = true;
    ++net_.vertex_count_;
    return static_cast<VertexId>(net_.vertices_.size() - 1);
  }

  void add_arc(VertexId u, VertexId v) {
    [[maybe_unused]] bool ok = net_.vertices_[u].children.push(v);
    assert(ok);
    ok = net_.vertices_[v].parents.push(u);
    assert(ok);
    ++net_.arc_count_;
  }

  void remove_arc(VertexId u, VertexId v) {
    [[maybe_unused]] bool ok = net_.vertices_[u].children.erase(v);
    assert(ok);
    ok = net_.vertices_[v].parents.erase(u);
    assert(ok);
    --net_.arc_count_;
  }

  // Removes an isolated vertex together with its label.
  void remove_vertex(VertexId v) {
    auto& rec = net_.vertices_[v];
    assert(rec.parents.empty() && rec.children.empty());
    rec.alive = false;
    --net_.vertex_count_;
    if (const std::string* label = net_.leaves_.label_of(v)) net_.leaves_.erase(std::string(*label));
  }

  // Replaces u -> v -> w by u -> w.
  void suppress(VertexId v) {
    auto& rec = net_.vertices_[v];
    assert(rec.parents.size() == 1 && rec.children.size() == 1);
    VertexId u = rec.parents[0];
    VertexId w = rec.children[0];
    remove_arc(u, v);
    remove_arc(v, w);
    remove_vertex(v);
    add_arc(u, w);
  }

  // Splits u -> v with a fresh vertex and returns it.
  VertexId subdivide(VertexId u, VertexId v) {
    VertexId s = add_vertex();
    remove_arc(u, v);
    add_arc(u, s);
    add_arc(s, v);
    return s;
  }

  void set_label(VertexId v, std::string label) { net_.leaves_.insert(std::move(label), v); }
  void set_root(VertexId v) { net_.root_ = v; }

  const RootedNetwork& view() const { return net_; }
  RootedNetwork finish() && { return std::move(net_); }

 private:
  RootedNetwork net_;
};

class UnrootedEditor {
 public:
  explicit UnrootedEditor(UnrootedNetwork base) : net_(std::move(base)) {}

  VertexId add_vertex() {
    net_.vertices_.push_back({});
    net_.vertices_.back().alive = true;
    ++net_.vertex_count_;
    return static_cast<VertexId>(net_.vertices_.size() - 1);
  }

  void add_edge(VertexId u, VertexId v) {
    [[maybe_unused]] bool ok = net_.vertices_[u].neighbours.push(v);
    assert(ok);
    ok = net_.vertices_[v].neighbours.push(u);
    assert(ok);
    ++net_.edge_count_;
  }

  void remove_edge(VertexId u, VertexId v) {
    [[maybe_unused]] bool ok = net_.vertices_[u].neighbours.erase(v);
    assert(ok);
    ok = net_.vertices_[v].neighbours.erase(u);
    assert(ok);
    --net_.edge_count_;
  }

  void remove_vertex(VertexId v) {
    auto& rec = net_.vertices_[v];
    assert(rec.neighbours.empty());
    rec.alive = false;
    --net_.vertex_count_;
    if (const std::string* label = net_.leaves_.label_of(v)) net_.leaves_.erase(std::string(*label));
  }

  // Replaces u - v - w by u - w for a degree-2 vertex v.
  void suppress(VertexId v) {
    auto& rec = net_.vertices_[v];
    assert(rec.neighbours.size() == 2);
    VertexId u = rec.neighbours[0];
    VertexId w = rec.neighbours[1];
    remove_edge(u, v);
    remove_edge(v, w);
    remove_vertex(v);
    assert(!net_.vertices_[u].neighbours.contains(w));
    add_edge(u, w);
  }

  VertexId subdivide(VertexId u, VertexId v) {
    VertexId s = add_vertex();
    remove_edge(u, v);
    add_edge(u, s);
    add_edge(s, v);
    return s;
  }

  void set_label(VertexId v, std::string label) { net_.leaves_.insert(std::move(label), v); }

  const UnrootedNetwork& view() const { return net_; }
  UnrootedNetwork finish() && { return std::move(net_); }

 private:
  UnrootedNetwork net_;
};

}  // namespace treechild
