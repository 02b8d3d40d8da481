#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treechild/network.hpp"

namespace treechild {

enum class ReductionKind { Cherry, ReticulatedCherry };

// One cherry-picking step: cherry [x,y] removes leaf x; reticulated cherry
// (x,y) removes the reticulation arc/edge between p_x and p_y. In rooted
// networks x is always the reticulation leaf.
struct Reduction {
  ReductionKind kind = ReductionKind::Cherry;
  std::string x;
  std::string y;

  static Reduction cherry(std::string x, std::string y) {
    return {ReductionKind::Cherry, std::move(x), std::move(y)};
  }
  static Reduction reticulated(std::string x, std::string y) {
    return {ReductionKind::ReticulatedCherry, std::move(x), std::move(y)};
  }

  bool is_cherry() const { return kind == ReductionKind::Cherry; }
  bool is_reticulated() const { return kind == ReductionKind::ReticulatedCherry; }
  bool contains(std::string_view label) const { return x == label || y == label; }

  // Orders cherries before reticulated cherries, then by (x, y).
  auto operator<=>(const Reduction&) const = default;
};

// "[x,y]" or "(x,y)".
std::string to_string(const Reduction& r);

// A reduction located in a concrete network.
// witness: cherry -> {p_x} (empty for the single-edge unrooted network);
// reticulated cherry -> the reticulation arc {p_y, p_x} (rooted) or the
// reticulation edge {p_x, p_y} (unrooted).
struct ReductionSite {
  Reduction reduction;
  std::vector<VertexId> witness;
};

// Identifiers deleted and suppressed by one reduction, for audit trails.
struct ReductionRecord {
  std::vector<VertexId> deleted;
  std::vector<VertexId> suppressed;
  std::vector<std::pair<VertexId, VertexId>> removed_links;
};

class ReductionError : public std::invalid_argument {
 public:
  enum class Reason { NotApplicable, WrongOrientation };
  ReductionError(Reason reason, const Reduction& r);
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

class ExpansionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unordered label pairs {a,b} with a < b.
std::vector<std::pair<std::string, std::string>> list_cherries(const RootedNetwork& network);
std::vector<std::pair<std::string, std::string>> list_cherries(const UnrootedNetwork& network);

// Rooted: ordered pairs with the reticulation leaf first. Unrooted: one
// site per unordered pair, reported with x < y.
std::vector<ReductionSite> list_reticulated_cherries(const RootedNetwork& network);
std::vector<ReductionSite> list_reticulated_cherries(const UnrootedNetwork& network);

// Every reduction currently applicable, sorted ascending. Cherries appear
// in both orientations; unrooted reticulated cherries too.
std::vector<Reduction> applicable_reductions(const RootedNetwork& network);
std::vector<Reduction> applicable_reductions(const UnrootedNetwork& network);

// Edges {u,v} (u < v) whose removal disconnects the network.
std::vector<std::pair<VertexId, VertexId>> bridges(const UnrootedNetwork& network);

// Locates `r` in the network. Throws ReductionError if it is not applicable.
ReductionSite locate(const RootedNetwork& network, const Reduction& r);
ReductionSite locate(const UnrootedNetwork& network, const Reduction& r);

RootedNetwork reduce(const RootedNetwork& network, const Reduction& r, ReductionRecord* record = nullptr);
UnrootedNetwork reduce(const UnrootedNetwork& network, const Reduction& r, ReductionRecord* record = nullptr);

// Inverse of reduce on rooted networks. Cherry [x,y]: y must be a leaf and
// x a fresh label; reticulated (x,y): both must be leaves.
RootedNetwork expand(const RootedNetwork& network, const Reduction& r);

}  // namespace treechild
