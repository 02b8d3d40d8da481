#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treechild/network.hpp"
#include "treechild/sequence.hpp"

namespace treechild {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;
inline constexpr std::size_t kDefaultEdgeCap = 20;

// ------------------------------------------------------------ rooted

// Repeatedly applies the smallest applicable reduction (cherries before
// reticulated cherries, then by labels) until none is left.
ReductionTrace<RootedNetwork> greedy_maximal_trace(const RootedNetwork& network);

struct RootedClassification {
  bool orchard = false;
  bool tree_child_structural = false;
  bool tree_child_by_sequence = false;
  bool stack_free = false;
  bool sibling_reticulations = false;
  std::size_t reticulations = 0;
  // The greedy maximal trace and its cherry-picking sequence. Complete
  // exactly when the network is orchard.
  ReductionTrace<RootedNetwork> trace;
  CherryPickingSequence sequence;
  SequenceVerdict verdict;
};

RootedClassification classify_rooted(const RootedNetwork& network);

// -------------------------------------------------------- enumeration

class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MaximalSequence {
  CherryPickingSequence sequence;
  bool complete = false;
};

// Depth-first enumeration of every maximal reduction sequence. Throws
// SizeCapExceeded once more than `cap` sequences have been produced.
std::vector<MaximalSequence> enumerate_maximal_sequences(const RootedNetwork& network, std::size_t cap);
std::vector<MaximalSequence> enumerate_maximal_sequences(const UnrootedNetwork& network, std::size_t cap);

// The complete ones only; `cap` bounds the number of complete sequences.
std::vector<CherryPickingSequence> enumerate_complete_sequences(const RootedNetwork& network, std::size_t cap);
std::vector<CherryPickingSequence> enumerate_complete_sequences(const UnrootedNetwork& network, std::size_t cap);

// ------------------------------------------------------------ search

enum class SearchStatus { Found, None, BudgetExceeded };
std::string_view to_string(SearchStatus status);

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Incremental form of the tree-child sequence conditions. Appending a
// reticulated item (x,y) claims x: the next item containing x must be a
// cherry, and no other claim may be discharged by that same item.
class PendingConstraints {
 public:
  bool admits(const Reduction& r) const;
  // Appends r. Returns false (leaving the state untouched) if r violates a claim.
  bool admit(const Reduction& r);
  bool claimed(std::string_view label) const;
  const std::vector<std::string>& claims() const { return claims_; }
  std::string digest() const;

 private:
  std::vector<std::string> claims_;  // sorted
};

struct OrientationResult {
  SearchStatus status = SearchStatus::None;
  std::optional<RootedNetwork> orientation;
  std::optional<CherryPickingSequence> sequence;
  SearchStats stats;
};

// Backtracking search for a complete tree-child cherry-picking sequence,
// pruned by PendingConstraints and memoised on (canonical key, claims).
// `budget` bounds node expansions.
OrientationResult find_tree_child_orientation(const UnrootedNetwork& network,
                                              std::uint64_t budget = kDefaultBudget);

// Oracle: tries every root edge and every direction assignment of the cycle
// edges; bridges are forced away from the root. Throws SizeCapExceeded if
// the network has more than `edge_cap` edges.
OrientationResult brute_force_tree_child_orientation(const UnrootedNetwork& network,
                                                     std::size_t edge_cap = kDefaultEdgeCap);

struct OrchardResult {
  SearchStatus status = SearchStatus::None;
  std::optional<CherryPickingSequence> sequence;
  SearchStats stats;
};

// Backtracking search for any complete reduction sequence.
OrchardResult is_orchard_unrooted(const UnrootedNetwork& network, std::uint64_t budget = kDefaultBudget);

}  // namespace treechild
