#include "treechild/classify.hpp"

namespace treechild {

ReductionTrace<RootedNetwork> greedy_maximal_trace(const RootedNetwork& network) {
  ReductionTrace<RootedNetwork> trace;
  trace.networks.push_back(network);
  while (true) {
    const RootedNetwork& current = trace.networks.back();
    auto options = applicable_reductions(current);
    if (options.empty()) break;
    ReductionSite site = locate(current, options.front());
    trace.networks.push_back(reduce(current, options.front()));
    trace.steps.push_back(std::move(site));
  }
  trace.maximal = true;
  trace.complete = trace.final_network().is_single_vertex();
  return trace;
}

RootedClassification classify_rooted(const RootedNetwork& network) {
  RootedClassification c;
  c.trace = greedy_maximal_trace(network);
  c.sequence = c.trace.sequence();
  c.verdict = check_tree_child(c.sequence);
  c.orchard = c.trace.complete;
  c.tree_child_by_sequence = c.orchard && c.verdict.tree_child;
  c.stack_free = is_stack_free(network);
  c.sibling_reticulations = has_sibling_reticulations(network);
  c.tree_child_structural = c.stack_free && !c.sibling_reticulations;
  c.reticulations = reticulation_number(network);
  return c;
}

namespace {

template <class Network>
void enumerate(const Network& net, CherryPickingSequence& prefix, std::vector<MaximalSequence>& out,
               std::size_t cap, bool complete_only) {
  auto options = applicable_reductions(net);
  if (options.empty()) {
    bool complete = net.is_single_vertex();
    if (complete_only && !complete) return;
    if (out.size() >= cap)
      throw SizeCapExceeded("more than " + std::to_string(cap) + " sequences");
    out.push_back({prefix, complete});
    return;
  }
  for (const auto& r : options) {
    prefix.push_back(r);
    enumerate(reduce(net, r), prefix, out, cap, complete_only);
    prefix.pop_back();
  }
}

template <class Network>
std::vector<CherryPickingSequence> complete_only(const Network& net, std::size_t cap) {
  std::vector<MaximalSequence> found;
  CherryPickingSequence prefix;
  enumerate(net, prefix, found, cap, true);
  std::vector<CherryPickingSequence> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(std::move(m.sequence));
  return out;
}

}  // namespace

std::vector<MaximalSequence> enumerate_maximal_sequences(const RootedNetwork& network, std::size_t cap) {
  std::vector<MaximalSequence> out;
  CherryPickingSequence prefix;
  enumerate(network, prefix, out, cap, false);
  return out;
}

std::vector<MaximalSequence> enumerate_maximal_sequences(const UnrootedNetwork& network, std::size_t cap) {
  std::vector<MaximalSequence> out;
  CherryPickingSequence prefix;
  enumerate(network, prefix, out, cap, false);
  return out;
}

std::vector<CherryPickingSequence> enumerate_complete_sequences(const RootedNetwork& network, std::size_t cap) {
  return complete_only(network, cap);
}

std::vector<CherryPickingSequence> enumerate_complete_sequences(const UnrootedNetwork& network, std::size_t cap) {
  return complete_only(network, cap);
}

}  // namespace treechild
