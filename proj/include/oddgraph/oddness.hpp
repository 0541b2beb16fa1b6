#pragma once

#include <optional>
#include <vector>

#include "oddgraph/graph.hpp"

namespace oddgraph {

// Verdict for one vertex pair {u, v}: either some third vertex w is adjacent
// to exactly one of them (w is the least such "distinguisher"), or none is
// and the pair is reducible.
struct PairVerdict {
    int u = 0;
    int v = 0;
    bool reducible = false;
    std::optional<int> distinguisher;
};

// Every vertex has odd degree.  Vacuously true for the empty graph.
bool is_odd(const Graph& g);

// Every vertex has even degree.
bool is_even(const Graph& g);

PairVerdict check_pair(const Graph& g, int u, int v);

// Odd, and every vertex pair has a distinguisher.  The empty graph qualifies
// vacuously; the smallest nonempty example has six vertices.
bool is_irreducibly_odd(const Graph& g);

// Even counterpart: every degree even and every pair distinguished.
bool is_irreducibly_even(const Graph& g);

// deg(v) is odd and every pair {v, u} has a distinguisher.  A graph is
// irreducibly odd exactly when this holds at every vertex.
bool locally_irreducibly_odd(const Graph& g, int v);

// All reducible pairs, lexicographically ordered (u < v).
std::vector<PairVerdict> reducible_pairs(const Graph& g);

}  // namespace oddgraph
