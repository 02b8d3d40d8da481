#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "treechild/cherries.hpp"
#include "treechild/network.hpp"

namespace treechild {

// Ordered list of reductions r_1..r_k (stored 0-based).
class CherryPickingSequence {
 public:
  CherryPickingSequence() = default;
  CherryPickingSequence(std::initializer_list<Reduction> items) : items_(items) {}
  explicit CherryPickingSequence(std::vector<Reduction> items) : items_(std::move(items)) {}

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Reduction& operator[](std::size_t i) const { return items_[i]; }
  const Reduction& at(std::size_t i) const { return items_.at(i); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Reduction>& items() const { return items_; }

  void push_back(Reduction r) { items_.push_back(std::move(r)); }
  void pop_back() { items_.pop_back(); }
  std::size_t reticulated_count() const;

  bool operator==(const CherryPickingSequence&) const = default;

 private:
  std::vector<Reduction> items_;
};

// "((b,a),[c,b])"
std::string to_string(const CherryPickingSequence& seq);

// Index of the successor pair, or nullopt for "infinity" (no later item
// contains x_i). Indices are 0-based throughout the library.
using Successor = std::optional<std::size_t>;

// Smallest j > i such that item j contains x_i. Throws std::out_of_range.
Successor successor_index(const CherryPickingSequence& seq, std::size_t i);

struct SequenceVerdict {
  bool tree_child = true;
  // Reticulated items whose successor pair is itself reticulated.
  std::vector<std::size_t> p1_violations;
  // Pairs (i, j), i < j, of reticulated items sharing a finite successor.
  std::vector<std::pair<std::size_t, std::size_t>> p2_violations;
  bool satisfies_p3 = true;
  // Only defined for all-cherry sequences.
  std::optional<bool> satisfies_p;
  std::vector<Successor> successors;
};

SequenceVerdict check_tree_child(const CherryPickingSequence& seq);

// No first coordinate reappears later as a second coordinate.
bool check_p3(const CherryPickingSequence& seq);

class NonCherryItem : public std::invalid_argument {
 public:
  explicit NonCherryItem(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// The all-cherry variant of check_p3. Throws NonCherryItem otherwise.
bool check_p(const CherryPickingSequence& seq);

template <class Network>
struct ReductionTrace {
  std::vector<Network> networks;
  std::vector<ReductionSite> steps;
  bool maximal = false;
  bool complete = false;

  const Network& final_network() const { return networks.back(); }
  CherryPickingSequence sequence() const {
    CherryPickingSequence seq;
    for (const auto& s : steps) seq.push_back(s.reduction);
    return seq;
  }
};

class StepInapplicable : public std::runtime_error {
 public:
  StepInapplicable(std::size_t index, const Reduction& r, const std::string& why);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Has no cherry and no reticulated cherry.
bool is_irreducible(const RootedNetwork& network);
bool is_irreducible(const UnrootedNetwork& network);

// Replays seq step by step. Throws StepInapplicable at the first failure.
ReductionTrace<RootedNetwork> apply_sequence(const RootedNetwork& network, const CherryPickingSequence& seq);
ReductionTrace<UnrootedNetwork> apply_sequence(const UnrootedNetwork& network, const CherryPickingSequence& seq);

bool is_complete_for(const CherryPickingSequence& seq, const RootedNetwork& network);
bool is_complete_for(const CherryPickingSequence& seq, const UnrootedNetwork& network);

class MalformedSequence : public std::invalid_argument {
 public:
  MalformedSequence(std::size_t index, const std::string& why);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Reverse construction: starts from the single vertex y_k and expands the
// items from last to first. The result reduces completely under seq.
RootedNetwork build_rooted(const CherryPickingSequence& seq);

}  // namespace treechild
