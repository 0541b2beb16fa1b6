// Canonical labeling by equitable partition refinement plus individualization
// with backtracking.  The certificate of a labeling is the upper-triangle bit
// string of the relabeled graph (graph6 bit order); the canonical labeling is
// the one maximizing that certificate.  Automorphisms discovered at leaves
// with equal certificates prune sibling branches (orbit pruning) and cut the
// search back to the deepest node shared with the best leaf (backjumping).

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "oddgraph/graph.hpp"

namespace oddgraph {
namespace {

// Ordered partition of the vertices: `order` lists them, `cells` are [begin,
// end) ranges into `order`.  Refinement and individualization keep the cell
// sequence deterministic, so the partition reached by a given sequence of
// individualized vertices is always the same.
struct Partition {
    std::array<int, kMaxVertices> order{};
    std::vector<std::pair<int, int>> cells;
};

void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < p.cells.size() && !changed; ++s) {
            std::uint64_t splitter = 0;
            for (int k = p.cells[s].first; k < p.cells[s].second; ++k)
                splitter |= bit(p.order[k]);
            for (std::size_t c = 0; c < p.cells.size(); ++c) {
                auto [b, e] = p.cells[c];
                if (e - b <= 1) continue;
                std::array<int, kMaxVertices> cnt{};
                bool uniform = true;
                for (int k = b; k < e; ++k) {
                    cnt[p.order[k]] = std::popcount(g.adj[p.order[k]] & splitter);
                    if (cnt[p.order[k]] != cnt[p.order[b]]) uniform = false;
                }
                if (uniform) continue;
                std::stable_sort(p.order.begin() + b, p.order.begin() + e,
                                 [&](int x, int y) { return cnt[x] > cnt[y]; });
                std::vector<std::pair<int, int>> split;
                int rb = b;
                for (int k = b + 1; k <= e; ++k) {
                    if (k == e || cnt[p.order[k]] != cnt[p.order[rb]]) {
                        split.emplace_back(rb, k);
                        rb = k;
                    }
                }
                p.cells.erase(p.cells.begin() + c);
                p.cells.insert(p.cells.begin() + c, split.begin(), split.end());
                changed = true;
                break;
            }
        }
    }
}

// Split vertex v out of cell c as a singleton placed in front of the rest.
void individualize(Partition& p, std::size_t c, int v) {
    auto [b, e] = p.cells[c];
    auto it = std::find(p.order.begin() + b, p.order.begin() + e, v);
    std::rotate(p.order.begin() + b, it, it + 1);
    p.cells[c] = {b, b + 1};
    p.cells.insert(p.cells.begin() + c + 1, {b + 1, e});
}

std::vector<std::uint64_t> certificate(const Graph& g, const std::array<int, kMaxVertices>& lab) {
    std::vector<std::uint64_t> out;
    std::uint64_t acc = 0;
    int filled = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(lab[i], lab[j]) ? 1 : 0);
            if (++filled == 64) {
                out.push_back(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(acc << (64 - filled));
    return out;
}

struct SearchState {
    explicit SearchState(const Graph& graph) : g(graph) {}

    const Graph& g;
    std::vector<std::uint64_t> best_cert;
    std::array<int, kMaxVertices> best_lab{};
    std::vector<int> best_path;                       // individualized vertices
    std::vector<std::array<int, kMaxVertices>> gens;  // automorphisms found
    std::vector<int> path;
    int unwind_to = -1;  // depth a discovered automorphism cuts back to
};

// Orbit closure of `tried` under the automorphisms that fix every vertex in
// path[0..depth).  Only those may map an explored branch onto a pending one.
std::uint64_t tried_orbit(const SearchState& st, std::uint64_t tried, int depth) {
    std::array<int, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& sigma : st.gens) {
        bool fixes_prefix = true;
        for (int d = 0; d < depth && fixes_prefix; ++d)
            fixes_prefix = sigma[st.path[d]] == st.path[d];
        if (!fixes_prefix) continue;
        for (int v = 0; v < st.g.n; ++v) {
            int a = find(v), b = find(sigma[v]);
            if (a != b) parent[a] = b;
        }
    }
    std::uint64_t roots = 0;
    for (std::uint64_t s = tried; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        roots |= bit(find(v));
    }
    std::uint64_t closure = 0;
    for (int v = 0; v < st.g.n; ++v)
        if (roots & bit(find(v))) closure |= bit(v);
    return closure;
}

void leaf(SearchState& st, const Partition& p) {
    auto cert = certificate(st.g, p.order);
    if (st.best_cert.empty() || cert > st.best_cert) {
        st.best_cert = std::move(cert);
        st.best_lab = p.order;
        st.best_path = st.path;
        return;
    }
    if (cert != st.best_cert) return;
    std::array<int, kMaxVertices> sigma{};
    bool identity = true;
    for (int i = 0; i < st.g.n; ++i) {
        sigma[st.best_lab[i]] = p.order[i];
        if (st.best_lab[i] != p.order[i]) identity = false;
    }
    if (identity) return;
    st.gens.push_back(sigma);
    int k = 0;
    while (k < static_cast<int>(std::min(st.path.size(), st.best_path.size())) &&
           st.path[k] == st.best_path[k])
        ++k;
    st.unwind_to = k;
}

void search(SearchState& st, Partition p) {
    refine(st.g, p);
    std::size_t target = p.cells.size();
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
        if (p.cells[c].second - p.cells[c].first > 1) {
            target = c;
            break;
        }
    }
    if (target == p.cells.size()) {
        leaf(st, p);
        return;
    }
    const int depth = static_cast<int>(st.path.size());
    std::vector<int> cand(p.order.begin() + p.cells[target].first,
                          p.order.begin() + p.cells[target].second);
    std::sort(cand.begin(), cand.end());
    std::uint64_t tried = 0;
    for (int v : cand) {
        if (tried && (tried_orbit(st, tried, depth) & bit(v))) continue;
        tried |= bit(v);
        Partition child = p;
        individualize(child, target, v);
        st.path.push_back(v);
        search(st, std::move(child));
        st.path.pop_back();
        if (st.unwind_to >= 0) {
            if (st.unwind_to < depth) return;  // not our node: keep unwinding
            st.unwind_to = -1;                 // resume this node's loop
        }
    }
}

}  // namespace

Graph canonical_graph(const Graph& g) {
    if (g.n == 0) return g;
    SearchState st(g);
    Partition p;
    std::iota(p.order.begin(), p.order.end(), 0);
    p.cells = {{0, g.n}};
    search(st, std::move(p));
    Graph out(g.n);
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(st.best_lab[i], st.best_lab[j])) out.add_edge(i, j);
    return out;
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{emit_graph6(canonical_graph(g))};
}

}  // namespace oddgraph
