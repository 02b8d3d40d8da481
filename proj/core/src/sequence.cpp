#include "treechild/sequence.hpp"

#include <algorithm>
#include <map>

namespace treechild {

std::size_t CherryPickingSequence::reticulated_count() const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [](const Reduction& r) { return r.is_reticulated(); }));
}

std::string to_string(const CherryPickingSequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += to_string(seq[i]);
  }
  return out + ")";
}

Successor successor_index(const CherryPickingSequence& seq, std::size_t i) {
  if (i >= seq.size()) throw std::out_of_range("sequence index " + std::to_string(i) + " out of range");
  const std::string& x = seq[i].x;
  for (std::size_t j = i + 1; j < seq.size(); ++j)
    if (seq[j].contains(x)) return j;
  return std::nullopt;
}

SequenceVerdict check_tree_child(const CherryPickingSequence& seq) {
  SequenceVerdict verdict;
  verdict.successors.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) verdict.successors.push_back(successor_index(seq, i));

  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Successor& s = verdict.successors[i];
    if (seq[i].is_reticulated() && s && seq[*s].is_reticulated()) verdict.p1_violations.push_back(i);
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq[i].is_reticulated() || !verdict.successors[i]) continue;
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[j].is_reticulated() && verdict.successors[j] == verdict.successors[i])
        verdict.p2_violations.emplace_back(i, j);
  }
  verdict.tree_child = verdict.p1_violations.empty() && verdict.p2_violations.empty();
  verdict.satisfies_p3 = check_p3(seq);
  if (seq.reticulated_count() == 0) verdict.satisfies_p = verdict.satisfies_p3;
  return verdict;
}

bool check_p3(const CherryPickingSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[j].y == seq[i].x) return false;
  return true;
}

NonCherryItem::NonCherryItem(std::size_t index)
    : std::invalid_argument("item " + std::to_string(index + 1) + " is not a cherry"), index_(index) {}

bool check_p(const CherryPickingSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!seq[i].is_cherry()) throw NonCherryItem(i);
  return check_p3(seq);
}

StepInapplicable::StepInapplicable(std::size_t index, const Reduction& r, const std::string& why)
    : std::runtime_error("step " + std::to_string(index + 1) + " " + to_string(r) + ": " + why), index_(index) {}

MalformedSequence::MalformedSequence(std::size_t index, const std::string& why)
    : std::invalid_argument("item " + std::to_string(index + 1) + ": " + why), index_(index) {}

bool is_irreducible(const RootedNetwork& network) { return applicable_reductions(network).empty(); }
bool is_irreducible(const UnrootedNetwork& network) { return applicable_reductions(network).empty(); }

namespace {

template <class Network>
ReductionTrace<Network> replay(const Network& network, const CherryPickingSequence& seq) {
  ReductionTrace<Network> trace;
  trace.networks.push_back(network);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Network& current = trace.networks.back();
    try {
      ReductionSite site = locate(current, seq[i]);
      trace.networks.push_back(reduce(current, seq[i]));
      trace.steps.push_back(std::move(site));
    } catch (const ReductionError& e) {
      throw StepInapplicable(i, seq[i], e.what());
    }
  }
  trace.complete = trace.final_network().is_single_vertex();
  trace.maximal = is_irreducible(trace.final_network());
  return trace;
}

template <class Network>
bool complete_for(const CherryPickingSequence& seq, const Network& network) {
  try {
    auto trace = replay(network, seq);
    if (!trace.complete) return false;
    if (seq.size() + 1 != network.leaf_count() + reticulation_number(network))
      throw std::logic_error("complete sequence length differs from |X| + r - 1");
    return true;
  } catch (const StepInapplicable&) {
    return false;
  }
}

}  // namespace

ReductionTrace<RootedNetwork> apply_sequence(const RootedNetwork& network, const CherryPickingSequence& seq) {
  return replay(network, seq);
}

ReductionTrace<UnrootedNetwork> apply_sequence(const UnrootedNetwork& network, const CherryPickingSequence& seq) {
  return replay(network, seq);
}

bool is_complete_for(const CherryPickingSequence& seq, const RootedNetwork& network) {
  return complete_for(seq, network);
}

bool is_complete_for(const CherryPickingSequence& seq, const UnrootedNetwork& network) {
  return complete_for(seq, network);
}

RootedNetwork build_rooted(const CherryPickingSequence& seq) {
  if (seq.empty()) throw MalformedSequence(0, "cannot build a network from an empty sequence");
  const std::size_t last = seq.size() - 1;
  if (!seq[last].is_cherry()) throw MalformedSequence(last, "the last item must be a cherry");
  if (!is_valid_label(seq[last].y)) throw MalformedSequence(last, "invalid leaf label '" + seq[last].y + "'");

  RootedNetwork net = RootedNetwork::single_leaf(seq[last].y);
  for (std::size_t i = seq.size(); i-- > 0;) {
    try {
      net = expand(net, seq[i]);
    } catch (const ExpansionError& e) {
      throw MalformedSequence(i, e.what());
    }
  }
  return net;
}

}  // namespace treechild
