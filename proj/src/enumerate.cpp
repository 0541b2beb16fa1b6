#include "oddgraph/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "oddgraph/construct.hpp"
#include "oddgraph/oddness.hpp"
#include "oddgraph/structure.hpp"
#include "parallel.hpp"

namespace oddgraph {
namespace {

using ordered_json = nlohmann::ordered_json;

// Append one vertex adjacent to exactly the set X of parent vertices.
Graph extend(const Graph& parent, std::uint64_t x) {
    Graph child = parent.add_vertex();
    child.adj[parent.n] = x;
    for (std::uint64_t s = x; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        child.adj[v] |= bit(parent.n);
    }
    return child;
}

// One level of isomorph-free growth: every class on k+1 vertices arises from
// some class on k vertices by attaching one vertex (delete any vertex of the
// target to see a parent), so expanding every parent by every attachment set
// and deduplicating canonical forms is exhaustive.  `keep(parent, x)` may
// reject an attachment before the child is built.
template <class Keep>
std::vector<std::string> next_level(const std::vector<std::string>& level, Keep keep,
                                    int jobs) {
    std::vector<std::vector<std::string>> found(resolve_jobs(jobs));
    parallel_chunks(level.size(), jobs, [&](std::size_t b, std::size_t e, int w) {
        for (std::size_t i = b; i < e; ++i) {
            Graph parent = parse_graph6(level[i]);
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << parent.n); ++x) {
                if (!keep(parent, x)) continue;
                found[w].push_back(canonical_form(extend(parent, x)).g6);
            }
        }
    });
    std::vector<std::string> out;
    for (auto& part : found)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> all_classes(int n, int jobs) {
    std::vector<std::string> level{canonical_form(Graph(1)).g6};
    for (int k = 1; k < n; ++k)
        level = next_level(level, [](const Graph&, std::uint64_t) { return true; }, jobs);
    return level;
}

// Final two vertices at once.  After placing vertex v with attachment set x,
// the last vertex w is forced: to make every degree odd it must be adjacent
// to exactly the even-degree vertices (for the even census, the odd-degree
// ones).  Deleting w and then v from any target graph shows every class is
// reached this way.
std::vector<std::string> stream_final(int n, bool odd_kind, int jobs) {
    auto parents = all_classes(n - 2, jobs);
    std::vector<std::vector<std::string>> found(resolve_jobs(jobs));
    parallel_chunks(parents.size(), jobs, [&](std::size_t b, std::size_t e, int w) {
        for (std::size_t i = b; i < e; ++i) {
            Graph parent = parse_graph6(parents[i]);
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << parent.n); ++x) {
                Graph h = extend(parent, x);
                std::uint64_t target = 0;
                for (int v = 0; v < h.n; ++v) {
                    bool even = std::popcount(h.adj[v]) % 2 == 0;
                    if (even == odd_kind) target |= bit(v);
                }
                Graph g = extend(h, target);
                bool hit = odd_kind ? is_irreducibly_odd(g) : is_irreducibly_even(g);
                if (hit) found[w].push_back(canonical_form(g).g6);
            }
        }
    });
    std::vector<std::string> out;
    for (auto& part : found)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// For n small enough, scanning every labeled graph is simplest.
std::vector<std::string> brute_classes(int n, bool odd_kind) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<std::string> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
        bool hit = odd_kind ? is_irreducibly_odd(g) : is_irreducibly_even(g);
        if (hit) out.push_back(canonical_form(g).g6);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CensusReport enumerate_kind(CensusKind kind, int n, int jobs) {
    const bool odd_kind = kind == CensusKind::irr_odd;
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (n > 10)
        throw unsupported_size_error(
            "census enumeration is limited to n <= 10: the level before last "
            "already holds every graph class on n-2 vertices, which passes ten "
            "million around n = 12");
    CensusReport report;
    report.kind = kind;
    report.n = n;
    if (odd_kind && n % 2 == 1) {
        report.note =
            "empty by parity: a graph with all degrees odd has an even number "
            "of vertices (handshake identity)";
        return report;
    }
    if (n <= 4)
        report.canon_list = brute_classes(n, odd_kind);
    else
        report.canon_list = stream_final(n, odd_kind, jobs);
    return report;
}

}  // namespace

CensusReport enumerate_irreducibly_odd(int n, int jobs) {
    return enumerate_kind(CensusKind::irr_odd, n, jobs);
}

CensusReport enumerate_irreducibly_even(int n, int jobs) {
    return enumerate_kind(CensusKind::irr_even, n, jobs);
}

void run_audits(CensusReport& report, int jobs) {
    if (report.kind != CensusKind::irr_odd)
        throw std::invalid_argument("audits are defined for the irreducibly odd census");
    report.audits.assign(report.count(), CensusAudit{});
    const Graph tri = triskelion();
    auto [lo, hi] = report.n >= 6 && report.n % 2 == 0 ? edge_bounds(report.n / 2)
                                                       : std::pair<int, int>{0, 0};
    parallel_chunks(report.count(), jobs, [&](std::size_t b, std::size_t e, int) {
        for (std::size_t i = b; i < e; ++i) {
            Graph g = parse_graph6(report.canon_list[i]);
            CensusAudit& a = report.audits[i];
            int m = g.edge_count();
            a.edge_bounds_ok = g.n >= 6 && m >= lo && m <= hi;
            if (auto w = has_minor(g, tri))
                a.triskelion_minor = verify_minor_witness(g, tri, *w);
            a.morningstar_extension = true;
            for (const auto& cyc : shortest_cycles(g)) {
                auto w = find_morningstar(g, cyc);
                if (!w || !verify_morningstar(g, *w)) {
                    a.morningstar_extension = false;
                    break;
                }
            }
            a.complement_irreducibly_even = is_irreducibly_even(g.complement());
        }
    });
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("trees need at least one vertex");
    // Every tree on k+1 vertices is a tree on k vertices plus one leaf.
    std::vector<std::string> level{canonical_form(Graph(1)).g6};
    for (int k = 1; k < n; ++k)
        level = next_level(
            level, [](const Graph&, std::uint64_t x) { return std::popcount(x) == 1; },
            1);
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& s : level) out.push_back(parse_graph6(s));
    return out;
}

std::pair<int, int> edge_bounds(int k) {
    if (k < 3)
        throw std::invalid_argument(
            "edge bounds apply to nonempty irreducibly odd graphs, which have "
            "2k >= 6 vertices");
    return {2 * k, k * (2 * k - 1) - 2 * k + 1};
}

Graph extremal_max(int k) {
    if (k < 3) throw std::invalid_argument("extremal_max needs k >= 3");
    if (2 * k > kMaxVertices)
        throw std::invalid_argument("extremal_max(" + std::to_string(k) +
                                    ") would exceed 64 vertices");
    Graph base = Graph::disjoint_union(cycle(2 * k - 1), Graph(1));
    return base.complement();
}

Girth5Report check_girth5_sufficiency(int n_max, int jobs) {
    if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
    Girth5Report report;
    report.n_max = n_max;
    const std::string petersen_canon =
        n_max >= 10 ? canonical_form(petersen()).g6 : std::string{};

    // Adding a vertex adjacent to X keeps girth >= 5 exactly when no two
    // members of X are adjacent (triangle) or share a neighbor (4-cycle).
    auto keep = [](const Graph& parent, std::uint64_t x) {
        std::uint64_t reach = 0;
        for (std::uint64_t s = x; s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            if (parent.adj[v] & x) return false;
            if (parent.adj[v] & reach) return false;
            reach |= parent.adj[v];
        }
        return true;
    };

    std::vector<std::string> level{canonical_form(Graph(1)).g6};
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) level = next_level(level, keep, jobs);
        report.classes_girth5 += static_cast<long long>(level.size());
        std::vector<std::uint8_t> in_domain(level.size(), 0), failed(level.size(), 0);
        parallel_chunks(level.size(), jobs, [&](std::size_t b, std::size_t e, int) {
            for (std::size_t i = b; i < e; ++i) {
                Graph g = parse_graph6(level[i]);
                if (!is_odd(g) || !girth(g) || !g.is_connected()) continue;
                bool double_spike = false;
                for (int v = 0; v < g.n && !double_spike; ++v) {
                    int pendants = 0;
                    for (std::uint64_t s = g.adj[v]; s;) {
                        int u = std::countr_zero(s);
                        s &= s - 1;
                        if (g.degree(u) == 1) ++pendants;
                    }
                    double_spike = pendants >= 2;
                }
                if (double_spike) continue;
                in_domain[i] = 1;
                if (!is_irreducibly_odd(g)) failed[i] = 1;
            }
        });
        for (std::size_t i = 0; i < level.size(); ++i) {
            report.classes_in_domain += in_domain[i];
            if (failed[i]) report.counterexamples.push_back(level[i]);
            if (!petersen_canon.empty() && level[i] == petersen_canon)
                report.petersen_seen = true;
        }
    }
    return report;
}

// --- persistence --------------------------------------------------------------

std::string census_basename(CensusKind kind, int n) {
    return (kind == CensusKind::irr_odd ? std::string("irr_odd_") : "irr_even_") +
           std::to_string(n);
}

void write_census(const CensusReport& report, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const std::string base = census_basename(report.kind, report.n);
    {
        std::ofstream out(fs::path(dir) / (base + ".g6"), std::ios::binary);
        if (!out) throw std::runtime_error("cannot write census to " + dir);
        for (const auto& s : report.canon_list) out << s << '\n';
    }
    if (report.audits.empty()) return;
    ordered_json j;
    j["kind"] = report.kind == CensusKind::irr_odd ? "irr_odd" : "irr_even";
    j["n"] = report.n;
    j["count"] = report.count();
    j["graphs"] = ordered_json::array();
    for (std::size_t i = 0; i < report.count(); ++i) {
        const CensusAudit& a = report.audits[i];
        ordered_json g;
        g["g6"] = report.canon_list[i];
        g["edge_bounds_ok"] = a.edge_bounds_ok;
        g["triskelion_minor"] = a.triskelion_minor;
        g["morningstar_extension"] = a.morningstar_extension;
        g["complement_irreducibly_even"] = a.complement_irreducibly_even;
        if (a.is_circle_graph)
            g["circle_graph"] = *a.is_circle_graph;
        else
            g["circle_graph"] = nullptr;
        j["graphs"].push_back(std::move(g));
    }
    std::ofstream out(fs::path(dir) / (base + ".audits.json"), std::ios::binary);
    out << j.dump(1) << '\n';
}

std::optional<CensusReport> read_census(CensusKind kind, int n, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::path file = fs::path(dir) / (census_basename(kind, n) + ".g6");
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    CensusReport report;
    report.kind = kind;
    report.n = n;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Graph g = parse_graph6(line);  // validate before trusting cached data
        if (g.n != n)
            throw std::runtime_error("census file " + file.string() +
                                     " holds a graph on " + std::to_string(g.n) +
                                     " vertices, expected " + std::to_string(n));
        report.canon_list.push_back(line);
    }
    return report;
}

}  // namespace oddgraph
