#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddgraph/errors.hpp"

namespace oddgraph {

inline constexpr int kMaxVertices = 64;

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Simple undirected graph on vertices 0..n-1.  One 64-bit adjacency row per
// vertex, so n is capped at 64.  Rows at index >= n are kept zero, which
// makes operator== a plain field comparison.
//
// Graphs are cheap to copy (520 bytes); all operations that "modify" a graph
// either mutate a locally owned value (add_edge/remove_edge) or return a new
// value.  Shared graphs are never mutated, so values can be read from many
// threads at once.
struct Graph {
    int n = 0;
    std::array<std::uint64_t, kMaxVertices> adj{};

    Graph() = default;
    explicit Graph(int vertices);

    bool operator==(const Graph&) const = default;

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v);     // no-op if already present
    void remove_edge(int u, int v);  // no-op if absent

    int degree(int v) const;
    std::uint64_t neighbors(int v) const { return adj[v]; }
    std::uint64_t vertex_mask() const;

    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
    std::vector<int> degree_sequence() const;        // sorted ascending

    Graph complement() const;
    Graph add_vertex() const;  // one new isolated vertex, index n
    Graph delete_vertex(int v) const;
    Graph contract_edge(int u, int v) const;  // simple contraction into min(u,v)
    Graph induced_subgraph(std::uint64_t keep) const;

    std::vector<std::uint64_t> connected_components() const;  // by least vertex
    bool is_connected() const;  // true for the empty graph
    bool is_tree() const;       // connected and m == n-1

    static Graph disjoint_union(const Graph& a, const Graph& b);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

private:
    void check_vertex(int v) const;
    void check_pair_distinct(int u, int v) const;
};

// --- text formats -----------------------------------------------------------
//
// graph6: standard ASCII encoding of the upper triangle, columns j=1..n-1,
// rows i=0..j-1 within each column, six bits per printable character
// (value + 63).  n <= 62 is one header byte; 63 and 64 use the '~' form.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge list: first line "n m", then m lines "u v".  Blank lines ignored.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Graphviz "graph { ... }" output (emit only).
std::string emit_dot(const Graph& g);

// Accepts either format: a first non-space character of '0'..'9' means edge
// list, anything else graph6.  (graph6 headers are never digits: n=0..62
// encode as '?'..'~' and larger n starts with '~'.)
Graph parse_graph_auto(std::string_view text);

// --- isomorphism ------------------------------------------------------------
//
// Canonical form: the graph6 string of a canonically relabeled copy.  Two
// graphs are isomorphic if and only if their canonical forms are byte-equal.
struct CanonicalForm {
    std::string g6;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);  // the relabeled copy itself
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace oddgraph
