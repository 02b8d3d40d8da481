#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "treechild/network.hpp"

namespace treechild {

using AnyNetwork = std::variant<RootedNetwork, UnrootedNetwork>;

class KindMismatch : public std::invalid_argument {
 public:
  KindMismatch() : std::invalid_argument("cannot compare a rooted network with an unrooted one") {}
};

// Canonical labelling under isomorphisms that fix leaf labels (and arc
// direction for rooted networks). `order[i]` is the vertex placed at
// canonical position i; `key` is equal for two networks iff they are
// isomorphic.
struct CanonicalForm {
  std::string key;
  std::vector<VertexId> order;
};

CanonicalForm canonical_form(const RootedNetwork& network);
CanonicalForm canonical_form(const UnrootedNetwork& network);

std::string canonical_key(const RootedNetwork& network);
std::string canonical_key(const UnrootedNetwork& network);
std::string canonical_key(const AnyNetwork& network);

// Key of the unlabelled shape: every leaf gets the same colour, so networks
// differing only by a permutation of leaf labels share it.
std::string shape_key(const RootedNetwork& network);
std::string shape_key(const UnrootedNetwork& network);

// Key of a raw undirected graph that may have parallel edges and loops.
// Used for intermediate states of enumeration; not comparable with the keys above.
std::string multigraph_key(const RawGraph& graph, bool labelled);

// Direct backtracking matcher; independent of canonical_key.
bool are_isomorphic(const RootedNetwork& a, const RootedNetwork& b);
bool are_isomorphic(const UnrootedNetwork& a, const UnrootedNetwork& b);
// Throws KindMismatch when one argument is rooted and the other is not.
bool are_isomorphic(const AnyNetwork& a, const AnyNetwork& b);

}  // namespace treechild
