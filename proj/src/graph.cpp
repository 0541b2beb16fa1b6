#include "oddgraph/graph.hpp"

#include <bit>
#include <sstream>

namespace oddgraph {

Graph::Graph(int vertices) {
    if (vertices < 0 || vertices > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [0, 64], got " +
                                    std::to_string(vertices));
    n = vertices;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
}

void Graph::check_pair_distinct(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u) +
                                    " not allowed in a simple graph");
}

void Graph::add_edge(int u, int v) {
    check_pair_distinct(u, v);
    adj[u] |= bit(v);
    adj[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_pair_distinct(u, v);
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj[v]);
}

std::uint64_t Graph::vertex_mask() const {
    return n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += std::popcount(adj[v]);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u) {
        std::uint64_t higher = adj[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(adj[v]);
    std::sort(deg.begin(), deg.end());
    return deg;
}

Graph Graph::complement() const {
    Graph out(n);
    const std::uint64_t all = vertex_mask();
    for (int v = 0; v < n; ++v) out.adj[v] = ~adj[v] & all & ~bit(v);
    return out;
}

Graph Graph::add_vertex() const {
    if (n == kMaxVertices)
        throw std::invalid_argument("cannot grow past 64 vertices");
    Graph out = *this;
    out.n = n + 1;
    return out;
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    const std::uint64_t low = bit(v) - 1;
    Graph out(n - 1);
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        std::uint64_t row = adj[u];
        row = (row & low) | ((row >> (v + 1)) << v);
        out.adj[u < v ? u : u - 1] = row;
    }
    return out;
}

Graph Graph::contract_edge(int u, int v) const {
    check_pair_distinct(u, v);
    if (!has_edge(u, v))
        throw std::invalid_argument("contract_edge requires an edge, and (" +
                                    std::to_string(u) + ", " + std::to_string(v) +
                                    ") is not one");
    int keep = std::min(u, v), drop = std::max(u, v);
    Graph merged = *this;
    merged.adj[keep] |= merged.adj[drop];
    merged.adj[keep] &= ~(bit(keep) | bit(drop));
    for (int w = 0; w < n; ++w)
        if (merged.adj[drop] & bit(w)) merged.adj[w] |= bit(keep);
    return merged.delete_vertex(drop);
}

Graph Graph::induced_subgraph(std::uint64_t keep) const {
    if (keep & ~vertex_mask())
        throw std::invalid_argument("induced_subgraph mask selects vertices >= n");
    std::array<int, kMaxVertices> old_ids{};
    int m = 0;
    for (std::uint64_t s = keep; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        old_ids[m++] = v;
    }
    Graph out(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (has_edge(old_ids[i], old_ids[j])) out.add_edge(i, j);
    return out;
}

std::vector<std::uint64_t> Graph::connected_components() const {
    std::vector<std::uint64_t> out;
    std::uint64_t seen = 0;
    for (int v = 0; v < n; ++v) {
        if (seen & bit(v)) continue;
        std::uint64_t comp = bit(v), frontier = bit(v);
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj[u];
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        out.push_back(comp);
        seen |= comp;
    }
    return out;
}

bool Graph::is_connected() const { return connected_components().size() <= 1; }

bool Graph::is_tree() const { return n > 0 && is_connected() && edge_count() == n - 1; }

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    if (a.n + b.n > kMaxVertices)
        throw std::invalid_argument("disjoint union would exceed 64 vertices");
    Graph out(a.n + b.n);
    for (int v = 0; v < a.n; ++v) out.adj[v] = a.adj[v];
    for (int v = 0; v < b.n; ++v) out.adj[a.n + v] = b.adj[v] << a.n;
    return out;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph out(n);
    for (auto [u, v] : edges) out.add_edge(u, v);
    return out;
}

// --- graph6 -----------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (text.size() < pos + k)
            throw parse_error("graph6 input truncated", text.size());
    };
    auto sixbits = [&]() -> int {
        need(1);
        unsigned char c = text[pos];
        if (c < 63 || c > 126)
            throw parse_error("graph6 character out of range 63..126", pos);
        ++pos;
        return c - 63;
    };

    long n;
    need(1);
    if (static_cast<unsigned char>(text[0]) == 126) {  // '~': multi-byte order
        ++pos;
        need(1);
        if (static_cast<unsigned char>(text[1]) == 126)
            throw parse_error("graph6 order beyond 64 vertices is not supported", 0);
        long a = sixbits(), b = sixbits(), c = sixbits();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sixbits();
    }
    if (n > kMaxVertices)
        throw parse_error("graph6 order " + std::to_string(n) +
                          " exceeds the 64-vertex limit", 0);

    Graph g(static_cast<int>(n));
    int have = 0, buffer = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                buffer = sixbits();
                have = 6;
            }
            --have;
            if ((buffer >> have) & 1) g.add_edge(i, j);
        }
    }
    if (pos != text.size())
        throw parse_error("trailing bytes after graph6 data", pos);
    return g;
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(63 + g.n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((g.n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((g.n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (g.n & 63)));
    }
    int have = 0, buffer = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            buffer = (buffer << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(63 + buffer));
                have = buffer = 0;
            }
        }
    }
    if (have) out.push_back(static_cast<char>(63 + (buffer << (6 - have))));
    return out;
}

// --- edge list --------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    auto offset_of = [&]() -> std::size_t {
        auto p = in.tellg();
        return p < 0 ? text.size() : static_cast<std::size_t>(p);
    };
    long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw parse_error("edge list must start with \"n m\"", offset_of());
    if (n > kMaxVertices)
        throw parse_error("edge list order " + std::to_string(n) +
                          " exceeds the 64-vertex limit", 0);
    Graph g(static_cast<int>(n));
    for (long e = 0; e < m; ++e) {
        long u, v;
        if (!(in >> u >> v))
            throw parse_error("expected " + std::to_string(m) + " edges, got " +
                              std::to_string(e), text.size());
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge endpoint out of range [0, " + std::to_string(n) + ")",
                              offset_of());
        if (u == v)
            throw parse_error("self-loop at vertex " + std::to_string(u), offset_of());
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    long extra;
    if (in >> extra) throw parse_error("trailing data after edge list", offset_of());
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string emit_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph parse_graph_auto(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c >= '0' && c <= '9') return parse_edge_list(text);
        break;
    }
    // graph6 is a single token; ignore surrounding whitespace.
    std::size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) throw parse_error("empty graph input", 0);
    std::size_t e = text.find_last_not_of(" \t\r\n");
    return parse_graph6(text.substr(b, e - b + 1));
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace oddgraph
