#include "oddgraph/structure.hpp"

#include <algorithm>
#include <bit>

namespace oddgraph {
namespace {

// BFS distance from s to t, or -1 if unreachable.
int bfs_dist(const Graph& g, int s, int t) {
    std::uint64_t seen = bit(s), frontier = bit(s);
    int d = 0;
    while (frontier) {
        if (frontier & bit(t)) return d;
        std::uint64_t next = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adj[u];
        }
        frontier = next & ~seen;
        seen |= frontier;
        ++d;
    }
    return -1;
}

std::array<int, kMaxVertices> bfs_all(const Graph& g, int s) {
    std::array<int, kMaxVertices> dist;
    dist.fill(-1);
    std::uint64_t seen = bit(s), frontier = bit(s);
    int d = 0;
    while (frontier) {
        for (std::uint64_t f = frontier; f;) {
            int u = std::countr_zero(f);
            f &= f - 1;
            dist[u] = d;
        }
        std::uint64_t next = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adj[u];
        }
        frontier = next & ~seen;
        seen |= frontier;
        ++d;
    }
    return dist;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
    // Shortest cycle through edge (u, v) = that edge plus a shortest u-v path
    // avoiding it; minimize over all edges.
    int best = -1;
    for (auto [u, v] : g.edges()) {
        Graph cut = g;
        cut.remove_edge(u, v);
        int d = bfs_dist(cut, u, v);
        if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<std::vector<int>> shortest_cycles(const Graph& g) {
    auto k = girth(g);
    if (!k) throw std::invalid_argument("graph is a forest: no cycles to list");
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    // Each cycle is produced exactly once, anchored at its least vertex with
    // the smaller of its two neighbors on the cycle in second position.
    for (int a = 0; a < g.n; ++a) {
        auto dist = bfs_all(g, a);
        path.assign(1, a);
        std::uint64_t used = bit(a);
        auto extend = [&](auto&& self) -> void {
            int len = static_cast<int>(path.size());
            int last = path.back();
            if (len == *k) {
                if (g.has_edge(last, a) && path[1] < last) out.push_back(path);
                return;
            }
            std::uint64_t cand = g.adj[last] & ~used & ~(bit(a + 1) - 1);
            while (cand) {
                int w = std::countr_zero(cand);
                cand &= cand - 1;
                if (dist[w] > *k - len) continue;  // cannot close in time
                path.push_back(w);
                used |= bit(w);
                self(self);
                path.pop_back();
                used &= ~bit(w);
            }
        };
        extend(extend);
    }
    return out;
}

std::optional<MorningstarWitness> find_morningstar(const Graph& g,
                                                   const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    std::uint64_t on_cycle = 0;
    for (int v : cycle) {
        if (v < 0 || v >= g.n || (on_cycle & bit(v)))
            throw std::invalid_argument("cycle must list distinct vertices of g");
        on_cycle |= bit(v);
    }
    for (int i = 0; i < k; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % k]))
            throw std::invalid_argument("vertex list is not a cycle of g");
    if (girth(g) != k)
        throw std::invalid_argument("cycle length " + std::to_string(k) +
                                    " is not the girth");

    // Match each cycle position to a distinct off-cycle neighbor (Kuhn's
    // augmenting-path algorithm; vertices tried in ascending order, so the
    // witness is deterministic).
    std::array<int, kMaxVertices> matched_pos;  // vertex -> position or -1
    matched_pos.fill(-1);
    std::vector<std::uint64_t> cand(k);
    for (int i = 0; i < k; ++i) cand[i] = g.adj[cycle[i]] & ~on_cycle;

    auto augment = [&](auto&& self, int pos, std::uint64_t& visited) -> bool {
        for (std::uint64_t c = cand[pos] & ~visited; c;) {
            int w = std::countr_zero(c);
            c &= c - 1;
            visited |= bit(w);
            if (matched_pos[w] < 0 || self(self, matched_pos[w], visited)) {
                matched_pos[w] = pos;
                return true;
            }
        }
        return false;
    };
    for (int pos = 0; pos < k; ++pos) {
        std::uint64_t visited = 0;
        if (!augment(augment, pos, visited)) return std::nullopt;
    }

    MorningstarWitness w;
    w.cycle = cycle;
    w.spikes.assign(k, -1);
    for (int v = 0; v < g.n; ++v)
        if (matched_pos[v] >= 0) w.spikes[matched_pos[v]] = v;
    return w;
}

bool verify_morningstar(const Graph& g, const MorningstarWitness& w) {
    const int k = static_cast<int>(w.cycle.size());
    if (k < 3 || static_cast<int>(w.spikes.size()) != k) return false;
    std::uint64_t on_cycle = 0, spike_set = 0;
    for (int v : w.cycle) {
        if (v < 0 || v >= g.n || (on_cycle & bit(v))) return false;
        on_cycle |= bit(v);
    }
    for (int i = 0; i < k; ++i)
        if (!g.has_edge(w.cycle[i], w.cycle[(i + 1) % k])) return false;
    if (girth(g) != k) return false;
    for (int i = 0; i < k; ++i) {
        int s = w.spikes[i];
        if (s < 0 || s >= g.n) return false;
        if ((on_cycle | spike_set) & bit(s)) return false;
        spike_set |= bit(s);
        if (!g.has_edge(w.cycle[i], s)) return false;
    }
    return true;
}

namespace {

bool mask_connected(const Graph& g, std::uint64_t mask) {
    if (!mask) return false;
    std::uint64_t comp = mask & (~mask + 1), frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adj[u];
        }
        frontier = next & mask & ~comp;
        comp |= frontier;
    }
    return comp == mask;
}

struct MinorSearch {
    MinorSearch(const Graph& host, const Graph& pat) : g(host), pattern(pat) {}

    const Graph& g;
    const Graph& pattern;
    std::vector<int> porder;                // pattern vertices, high degree first
    std::vector<int> horder;                // host vertices, low degree first
    std::vector<std::uint64_t> branch;      // by porder position
    std::vector<std::uint64_t> reach;       // N(branch[i]) in g
    std::vector<std::uint64_t> candidates;  // scratch for one depth

    // All connected subsets of `free` up to `cap` vertices, singletons first,
    // then larger sets in a fixed growth order.
    void connected_subsets(std::uint64_t free, int cap, std::vector<std::uint64_t>& out) {
        out.clear();
        auto grow = [&](auto&& self, std::uint64_t set, std::uint64_t allowed) -> void {
            out.push_back(set);
            if (std::popcount(set) == cap) return;
            std::uint64_t neigh = 0;
            for (std::uint64_t s = set; s;) {
                int u = std::countr_zero(s);
                s &= s - 1;
                neigh |= g.adj[u];
            }
            std::uint64_t frontier = neigh & allowed;
            while (frontier) {
                int w = std::countr_zero(frontier);
                frontier &= frontier - 1;
                allowed &= ~bit(w);  // later branches must avoid w: no duplicates
                self(self, set | bit(w), allowed);
            }
        };
        for (std::size_t i = 0; i < horder.size(); ++i) {
            int seed = horder[i];
            if (!(free & bit(seed))) continue;
            std::uint64_t allowed = free;
            for (std::size_t j = 0; j <= i; ++j) allowed &= ~bit(horder[j]);
            grow(grow, bit(seed), allowed);
        }
        std::stable_sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
            return std::popcount(a) < std::popcount(b);
        });
    }

    bool place(std::size_t i, std::uint64_t used) {
        if (i == porder.size()) return true;
        const int p = porder[i];
        const int remaining = static_cast<int>(porder.size() - i - 1);
        const std::uint64_t free = g.vertex_mask() & ~used;
        const int cap = std::popcount(free) - remaining;
        if (cap < 1) return false;

        // Earlier-placed pattern neighbors each demand a cross edge, i.e. the
        // new branch set must intersect that branch set's neighborhood.
        std::vector<std::uint64_t> demands;
        for (std::size_t j = 0; j < i; ++j)
            if (pattern.has_edge(p, porder[j])) demands.push_back(reach[j] & free);
        for (std::uint64_t d : demands)
            if (!d) return false;

        std::vector<std::uint64_t> cands;
        connected_subsets(free, cap, cands);
        for (std::uint64_t set : cands) {
            bool ok = true;
            for (std::uint64_t d : demands)
                if (!(set & d)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            branch[i] = set;
            std::uint64_t nb = 0;
            for (std::uint64_t s = set; s;) {
                int u = std::countr_zero(s);
                s &= s - 1;
                nb |= g.adj[u];
            }
            reach[i] = nb & ~set;
            if (place(i + 1, used | set)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<MinorWitness> has_minor(const Graph& g, const Graph& pattern) {
    if (pattern.n > 10)
        throw unsupported_size_error(
            "minor search is limited to patterns on at most 10 vertices; larger "
            "patterns make the branch-set search space impractical");
    if (g.n > 16)
        throw unsupported_size_error(
            "minor search is limited to host graphs on at most 16 vertices");
    if (pattern.n > g.n || pattern.edge_count() > g.edge_count()) return std::nullopt;

    MinorSearch s(g, pattern);
    s.porder.resize(pattern.n);
    for (int v = 0; v < pattern.n; ++v) s.porder[v] = v;
    std::stable_sort(s.porder.begin(), s.porder.end(), [&](int a, int b) {
        return pattern.degree(a) > pattern.degree(b);
    });
    s.horder.resize(g.n);
    for (int v = 0; v < g.n; ++v) s.horder[v] = v;
    std::stable_sort(s.horder.begin(), s.horder.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    s.branch.assign(pattern.n, 0);
    s.reach.assign(pattern.n, 0);
    if (!s.place(0, 0)) return std::nullopt;

    MinorWitness w;
    w.branch_sets.assign(pattern.n, 0);
    for (int i = 0; i < pattern.n; ++i) w.branch_sets[s.porder[i]] = s.branch[i];
    return w;
}

bool verify_minor_witness(const Graph& g, const Graph& pattern, const MinorWitness& w) {
    if (static_cast<int>(w.branch_sets.size()) != pattern.n) return false;
    std::uint64_t used = 0;
    for (std::uint64_t set : w.branch_sets) {
        if (!set || (set & ~g.vertex_mask()) || (set & used)) return false;
        if (!mask_connected(g, set)) return false;
        used |= set;
    }
    for (auto [a, b] : pattern.edges()) {
        bool cross = false;
        for (std::uint64_t s = w.branch_sets[a]; s && !cross;) {
            int u = std::countr_zero(s);
            s &= s - 1;
            cross = (g.adj[u] & w.branch_sets[b]) != 0;
        }
        if (!cross) return false;
    }
    return true;
}

}  // namespace oddgraph
