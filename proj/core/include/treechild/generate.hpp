#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "treechild/network.hpp"
#include "treechild/sequence.hpp"

namespace treechild {

class InfeasibleParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratedNetwork {
  RootedNetwork network;
  CherryPickingSequence sequence;
};

// "a".."z" for up to 26 leaves, "t1".."tn" beyond that.
std::vector<std::string> default_leaf_labels(std::size_t count);

// Random tree-child network with exactly `leaves` leaves and
// `reticulations` reticulations, built from a complete tree-child sequence
// sampled back to front. Requires leaves >= 1 and reticulations <= leaves - 1.
GeneratedNetwork generate_tree_child(std::size_t leaves, std::size_t reticulations, std::uint64_t seed);

// As generate_tree_child, but redraws (deterministically, from seeds
// derived from `seed`) until unroot() succeeds, i.e. until the two children
// of the root are not adjacent. Throws InfeasibleParameters after
// kUnrootableAttempts draws, which covers the sizes where no such network
// exists (two leaves with one reticulation).
inline constexpr std::size_t kUnrootableAttempts = 256;
GeneratedNetwork generate_unrootable_tree_child(std::size_t leaves, std::size_t reticulations, std::uint64_t seed);

// Random orchard network: same construction without the tree-child
// constraints, so stacks and sibling reticulations may appear.
GeneratedNetwork generate_orchard(std::size_t leaves, std::size_t reticulations, std::uint64_t seed);

// Subdivides two arcs and joins the new vertices, keeping the graph
// acyclic. The result need not be orchard. Requires at least two arcs.
RootedNetwork add_random_reticulation(const RootedNetwork& network, std::mt19937_64& rng);

enum class CorpusMode {
  Labelled,  // one network per canonical key, closed under leaf relabelling
  Shapes,    // one representative per unlabelled shape
};

// All unrooted networks on leaves {a, b, ...} with 1..max_leaves leaves and
// at most max_reticulations reticulations. Grown from the single vertex by
// leaf and edge insertions.
std::vector<UnrootedNetwork> enumerate_unrooted_networks(std::size_t max_leaves, std::size_t max_reticulations,
                                                         CorpusMode mode = CorpusMode::Labelled);

// All rooted orchard networks with the given bounds, one per canonical key,
// grown from the single vertex by cherry and reticulated-cherry expansions.
// New leaves are labelled in order of introduction.
std::vector<RootedNetwork> enumerate_orchard_networks(std::size_t max_leaves, std::size_t max_reticulations);

}  // namespace treechild
