#pragma once

#include <optional>
#include <vector>

#include "oddgraph/graph.hpp"

namespace oddgraph {

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// All shortest cycles, each as a vertex sequence normalized to start at its
// least vertex and run toward the smaller of the two possible second
// vertices.  The list is lexicographically sorted.  Throws if g is a forest.
std::vector<std::vector<int>> shortest_cycles(const Graph& g);

// A k-cycle together with one private spike (pendant neighbor outside the
// cycle) per cycle vertex: the subgraph pattern that every shortest cycle of
// a girth-k irreducibly odd graph extends to.
struct MorningstarWitness {
    std::vector<int> cycle;   // as given
    std::vector<int> spikes;  // spikes[i] is matched to cycle[i]; all distinct
};

// Given a shortest cycle of g, find distinct off-cycle neighbors, one per
// cycle vertex (a system of distinct representatives, found by bipartite
// matching).  Empty result means no such assignment exists.  Throws if
// `cycle` is not a shortest cycle of g.
std::optional<MorningstarWitness> find_morningstar(const Graph& g,
                                                   const std::vector<int>& cycle);

// Checks a witness from scratch: cycle edges present, cycle length equals the
// girth, spikes distinct, off-cycle, and spikes[i] adjacent to cycle[i].
bool verify_morningstar(const Graph& g, const MorningstarWitness& w);

// Branch decomposition showing `pattern` is a minor of g: one connected,
// pairwise-disjoint vertex set per pattern vertex, with a cross edge for
// every pattern edge.
struct MinorWitness {
    std::vector<std::uint64_t> branch_sets;  // indexed by pattern vertex
};

// Minor containment by backtracking over branch sets.  Sized for small
// patterns: pattern.n <= 10 and g.n <= 16 (beyond that the search space is
// impractical and the call is refused).  pattern.n > g.n returns nullopt.
std::optional<MinorWitness> has_minor(const Graph& g, const Graph& pattern);

// Independent check of a minor witness (used by tests and audits; shares no
// code with the search).
bool verify_minor_witness(const Graph& g, const Graph& pattern, const MinorWitness& w);

}  // namespace oddgraph
