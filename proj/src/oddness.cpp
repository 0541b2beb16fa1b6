#include "oddgraph/oddness.hpp"

#include <bit>

namespace oddgraph {
namespace {

// Vertices adjacent to exactly one of u, v, not counting u and v themselves.
// {u, v} is reducible exactly when this is empty, i.e. u and v have the same
// neighbors outside the pair.
inline std::uint64_t distinguishers(const Graph& g, int u, int v) {
    return (g.adj[u] ^ g.adj[v]) & ~(bit(u) | bit(v));
}

}  // namespace

bool is_odd(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (std::popcount(g.adj[v]) % 2 == 0) return false;
    return true;
}

bool is_even(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (std::popcount(g.adj[v]) % 2 == 1) return false;
    return true;
}

PairVerdict check_pair(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v)
        throw std::invalid_argument("check_pair needs two distinct vertices in range");
    PairVerdict out{u, v, false, std::nullopt};
    std::uint64_t d = distinguishers(g, u, v);
    if (d)
        out.distinguisher = std::countr_zero(d);
    else
        out.reducible = true;
    return out;
}

bool is_irreducibly_odd(const Graph& g) {
    if (!is_odd(g)) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!distinguishers(g, u, v)) return false;
    return true;
}

bool is_irreducibly_even(const Graph& g) {
    if (!is_even(g)) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!distinguishers(g, u, v)) return false;
    return true;
}

bool locally_irreducibly_odd(const Graph& g, int v) {
    if (v < 0 || v >= g.n)
        throw std::invalid_argument("vertex out of range");
    if (std::popcount(g.adj[v]) % 2 == 0) return false;
    for (int u = 0; u < g.n; ++u)
        if (u != v && !distinguishers(g, u, v)) return false;
    return true;
}

std::vector<PairVerdict> reducible_pairs(const Graph& g) {
    std::vector<PairVerdict> out;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!distinguishers(g, u, v)) out.push_back({u, v, true, std::nullopt});
    return out;
}

}  // namespace oddgraph
