#include "oddgraph/chord.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "oddgraph/oddness.hpp"
#include "parallel.hpp"

namespace oddgraph {
namespace {

ChordDiagram normalize(const std::vector<int>& raw) {
    ChordDiagram d;
    d.word.reserve(raw.size());
    std::map<int, int> rename;
    for (int s : raw) {
        auto [it, fresh] = rename.emplace(s, static_cast<int>(rename.size()) + 1);
        d.word.push_back(it->second);
        (void)fresh;
    }
    return d;
}

}  // namespace

ChordDiagram parse_gauss_code(std::string_view text) {
    std::vector<int> symbols;
    std::vector<std::size_t> offsets;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
            ++i;
            continue;
        }
        std::size_t start = i;
        bool digits = false;
        if (text[i] == '+' || text[i] == '-') ++i;
        long value = 0;
        bool negative = start < i && text[start] == '-';
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000) throw parse_error("symbol too large", start);
            digits = true;
            ++i;
        }
        if (!digits) throw parse_error("expected an integer symbol", start);
        symbols.push_back(static_cast<int>(negative ? -value : value));
        offsets.push_back(start);
    }
    if (symbols.size() % 2 != 0)
        throw parse_error("double occurrence word needs an even number of symbols, got " +
                              std::to_string(symbols.size()),
                          text.size());
    std::map<int, std::vector<std::size_t>> seen;
    for (std::size_t k = 0; k < symbols.size(); ++k)
        seen[symbols[k]].push_back(k);
    for (const auto& [label, positions] : seen) {
        if (positions.size() == 2) continue;
        std::size_t at = positions.size() < 2 ? offsets[positions[0]]
                                              : offsets[positions[2]];
        throw parse_error("symbol " + std::to_string(label) + " appears " +
                              std::to_string(positions.size()) +
                              " times; each must appear exactly twice",
                          at);
    }
    if (symbols.size() / 2 > static_cast<std::size_t>(kMaxVertices))
        throw parse_error("more than 64 chords are not supported", 0);
    return normalize(symbols);
}

std::string format_gauss_code(const ChordDiagram& d) {
    std::string out;
    for (std::size_t i = 0; i < d.word.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(d.word[i]);
    }
    return out;
}

Graph interlacement_graph(const ChordDiagram& d) {
    const int k = d.chords();
    std::vector<std::pair<int, int>> span(k, {-1, -1});
    for (std::size_t p = 0; p < d.word.size(); ++p) {
        int label = d.word[p];
        if (label < 1 || label > k)
            throw std::invalid_argument("chord diagram is not normalized");
        auto& s = span[label - 1];
        (s.first < 0 ? s.first : s.second) = static_cast<int>(p);
    }
    Graph g(k);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            int inside = (span[b].first > span[a].first && span[b].first < span[a].second) +
                         (span[b].second > span[a].first && span[b].second < span[a].second);
            if (inside == 1) g.add_edge(a, b);
        }
    }
    return g;
}

namespace {

// Depth-first construction of a double occurrence word realizing g, one
// circle position at a time.  When a chord closes, its interlacement row is
// complete (chords opened inside its span and still open, plus closed chords
// with exactly one endpoint inside; chords opened later never interlace it),
// so the row is compared against g exactly.  Symbols are tried in ascending
// order and vertices in ascending order, fixing the traversal order.
struct RealizeSearch {
    explicit RealizeSearch(const Graph& graph) : g(graph), n(graph.n) {}

    const Graph& g;
    int n;
    int force_first = -1;  // preassigned vertex for chord 1 (parallel split)
    std::vector<int> word;
    std::vector<int> open_pos;      // by label-1; -1 once closed
    std::vector<int> vertex_of;     // by label-1
    std::uint64_t assigned = 0;     // vertices already carrying a chord
    std::uint64_t closed_set = 0;   // ...whose chord is closed
    bool done = false;

    bool try_close(int label) {
        const int s = open_pos[label - 1];
        const int x = vertex_of[label - 1];
        std::uint64_t row = 0;
        for (int other = 1; other <= static_cast<int>(open_pos.size()); ++other) {
            if (other == label) continue;
            int os = open_pos[other - 1];
            if (os >= 0) {  // still open: interlaces iff it opened inside our span
                if (os > s) row |= bit(vertex_of[other - 1]);
            } else {  // closed: interlaces iff exactly one endpoint inside
                int a = -1, b = -1;
                for (std::size_t p = 0; p < word.size(); ++p)
                    if (word[p] == other) (a < 0 ? a : b) = static_cast<int>(p);
                int inside = (a > s) + (b > s);
                if (inside == 1) row |= bit(vertex_of[other - 1]);
            }
        }
        return row == g.adj[x];
    }

    void step() {
        if (done) return;
        const std::size_t pos = word.size();
        if (pos == static_cast<std::size_t>(2 * n)) {
            done = true;
            return;
        }
        const int used = static_cast<int>(open_pos.size());
        // Close candidates, ascending label order (= ascending word symbol).
        for (int label = 1; label <= used && !done; ++label) {
            if (open_pos[label - 1] < 0) continue;
            if (!try_close(label)) continue;
            int saved = open_pos[label - 1];
            word.push_back(label);
            open_pos[label - 1] = -1;
            closed_set |= bit(vertex_of[label - 1]);
            step();
            if (done) return;
            closed_set &= ~bit(vertex_of[label - 1]);
            open_pos[label - 1] = saved;
            word.pop_back();
        }
        if (used == n) return;
        // Open a new chord.  A closed chord can never interlace it, so every
        // neighbor of its vertex must still be open or unassigned.
        const int label = used + 1;
        for (int x = 0; x < n && !done; ++x) {
            if (assigned & bit(x)) continue;
            if (label == 1 && force_first >= 0 && x != force_first) continue;
            if (g.adj[x] & closed_set) continue;
            word.push_back(label);
            open_pos.push_back(static_cast<int>(pos));
            vertex_of.push_back(x);
            assigned |= bit(x);
            step();
            if (done) return;
            assigned &= ~bit(x);
            vertex_of.pop_back();
            open_pos.pop_back();
            word.pop_back();
        }
    }
};

std::optional<ChordDiagram> realize_one(const Graph& g, int force_first) {
    RealizeSearch s(g);
    s.force_first = force_first;
    s.step();
    if (!s.done) return std::nullopt;
    return ChordDiagram{std::move(s.word)};
}

}  // namespace

std::optional<ChordDiagram> realize_as_chord_diagram(const Graph& g, int jobs) {
    if (g.n > 9)
        throw unsupported_size_error(
            "chord realization searches all double occurrence words and is "
            "limited to 9 vertices");
    if (g.n == 0) return ChordDiagram{};
    if (resolve_jobs(jobs) <= 1) return realize_one(g, -1);

    // Partition by the vertex of the first chord.  The sequential search
    // exhausts first-vertex 0 before trying 1, so taking the lowest
    // successful slot reproduces its answer.
    std::vector<std::optional<ChordDiagram>> results(g.n);
    parallel_chunks(g.n, jobs, [&](std::size_t b, std::size_t e, int) {
        for (std::size_t v = b; v < e; ++v)
            results[v] = realize_one(g, static_cast<int>(v));
    });
    for (auto& r : results)
        if (r) return r;
    return std::nullopt;
}

MinimalityCertificate certify_minimal(const ChordDiagram& d) {
    MinimalityCertificate cert;
    cert.diagram = d;
    cert.interlacement = interlacement_graph(d);
    cert.irreducibly_odd = is_irreducibly_odd(cert.interlacement);
    if (cert.irreducibly_odd) cert.crossing_number = d.chords();
    return cert;
}

void census_circle_flags(CensusReport& report, int jobs) {
    if (report.n > 9)
        throw unsupported_size_error(
            "circle-graph flags need chord realization, which is limited to 9 "
            "vertices");
    if (report.audits.size() != report.count())
        report.audits.assign(report.count(), CensusAudit{});
    parallel_chunks(report.count(), jobs, [&](std::size_t b, std::size_t e, int) {
        for (std::size_t i = b; i < e; ++i) {
            Graph g = parse_graph6(report.canon_list[i]);
            report.audits[i].is_circle_graph = realize_as_chord_diagram(g).has_value();
        }
    });
}

}  // namespace oddgraph
