// Acceptance suite: eleven checks, one pass/fail line each, with runtimes.
// Usage: acceptance <cli-binary> <golden-dir>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oddgraph/chord.hpp"
#include "oddgraph/construct.hpp"
#include "oddgraph/enumerate.hpp"
#include "oddgraph/oddness.hpp"
#include "oddgraph/structure.hpp"

using namespace oddgraph;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_golden;

struct Check {
    const char* name;
    std::function<bool(std::string&)> body;
};

bool expect(bool ok, std::string& why, const std::string& message) {
    if (!ok && why.empty()) why = message;
    return ok;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Definition-level reference predicate, independent of the library's bitwise
// implementation.
bool naive_irreducibly_odd(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) % 2 == 0) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            bool distinguished = false;
            for (int w = 0; w < g.n && !distinguished; ++w)
                if (w != u && w != v && g.has_edge(w, u) != g.has_edge(w, v))
                    distinguished = true;
            if (!distinguished) return false;
        }
    return true;
}

// --- criterion bodies ---------------------------------------------------------

bool c1_triskelion(std::string& why) {
    Graph t = triskelion();
    bool ok = expect(is_irreducibly_odd(t), why, "triskelion not irreducibly odd");
    ok &= expect(t.n == 6 && t.edge_count() == 6, why, "triskelion is not 6v/6e");
    ok &= expect(isomorphic(t, morningstar(3)), why, "triskelion != morningstar(3)");
    Graph bs = bull().add_vertex();
    bs.add_edge(0, 5);  // spike at the mouth
    ok &= expect(isomorphic(t, bs), why, "triskelion != bull plus spike");
    return ok;
}

bool c2_morningstars(std::string& why) {
    bool ok = true;
    for (int k = 3; k <= 12; ++k) {
        Graph m = morningstar(k);
        ok &= expect(is_irreducibly_odd(m), why,
                     "morningstar(" + std::to_string(k) + ") not irreducibly odd");
        ok &= expect(girth(m) == k, why,
                     "morningstar(" + std::to_string(k) + ") has wrong girth");
    }
    return ok;
}

bool c3_trees(std::string& why) {
    // Unlabeled tree counts, a cross-check that the generator is exhaustive.
    const std::size_t counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        auto trees = enumerate_trees(n);
        ok &= expect(trees.size() == counts[n], why,
                     "tree count off at n=" + std::to_string(n));
        for (const auto& t : trees) {
            ok &= expect(t.is_tree(), why, "non-tree emitted");
            ok &= expect(!is_irreducibly_odd(t), why,
                         "an irreducibly odd tree appeared at n=" + std::to_string(n));
        }
    }
    return ok;
}

bool c4_census(std::string& why) {
    // n = 6 against a brute-force scan of all 2^15 labeled graphs.
    std::set<std::string> expected;
    for (unsigned code = 0; code < (1u << 15); ++code) {
        Graph g(6);
        int k = 0;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v, ++k)
                if ((code >> k) & 1) g.add_edge(u, v);
        if (naive_irreducibly_odd(g)) expected.insert(canonical_form(g).g6);
    }
    auto six = enumerate_irreducibly_odd(6);
    bool ok = expect(six.count() == 3, why, "six-vertex census is not 3 classes");
    ok &= expect(std::vector<std::string>(expected.begin(), expected.end()) ==
                     six.canon_list,
                 why, "six-vertex census disagrees with the labeled brute force");
    bool has_t = false, has_wheel = false;
    for (const auto& s : six.canon_list) {
        Graph g = parse_graph6(s);
        has_t |= isomorphic(g, triskelion());
        has_wheel |= g.edge_count() == 10 && isomorphic(g, extremal_max(3));
    }
    ok &= expect(has_t && has_wheel, why, "expected members missing from the census");

    // n = 8 byte-reproduces the frozen golden file.
    auto eight = enumerate_irreducibly_odd(8);
    fs::path tmp = fs::temp_directory_path() / "oddgraph_acceptance_census";
    fs::remove_all(tmp);
    write_census(eight, tmp.string());
    ok &= expect(eight.count() == 58, why, "eight-vertex census is not 58 classes");
    ok &= expect(slurp(tmp / "irr_odd_8.g6") == slurp(g_golden / "irr_odd_8.g6"), why,
                 "eight-vertex census differs from the golden file");
    return ok;
}

bool c5_minor(std::string& why) {
    const Graph tri = triskelion();
    bool ok = true;
    for (int n : {6, 8}) {
        for (const auto& s : enumerate_irreducibly_odd(n).canon_list) {
            Graph g = parse_graph6(s);
            auto w = has_minor(g, tri);
            ok &= expect(w.has_value(), why, "no minor witness for " + s);
            if (w)
                ok &= expect(verify_minor_witness(g, tri, *w), why,
                             "witness failed verification for " + s);
        }
    }
    return ok;
}

bool c6_morningstar_theorem(std::string& why) {
    bool ok = true;
    for (int n : {6, 8}) {
        for (const auto& s : enumerate_irreducibly_odd(n).canon_list) {
            Graph g = parse_graph6(s);
            for (const auto& cyc : shortest_cycles(g)) {
                auto w = find_morningstar(g, cyc);
                ok &= expect(w.has_value(), why, "no spike assignment in " + s);
                if (w)
                    ok &= expect(verify_morningstar(g, *w), why,
                                 "bad morningstar witness in " + s);
            }
        }
    }
    return ok;
}

bool c7_size_bounds(std::string& why) {
    bool ok = true;
    for (int n : {6, 8}) {
        auto [lo, hi] = edge_bounds(n / 2);
        for (const auto& s : enumerate_irreducibly_odd(n).canon_list) {
            int m = parse_graph6(s).edge_count();
            ok &= expect(lo <= m && m <= hi, why, "edge count out of bounds in " + s);
        }
    }
    for (int k : {3, 4}) {
        auto [lo, hi] = edge_bounds(k);
        ok &= expect(morningstar(k).edge_count() == lo, why, "minimum not attained");
        Graph mx = extremal_max(k);
        ok &= expect(mx.edge_count() == hi, why, "maximum not attained");
        ok &= expect(is_irreducibly_odd(mx), why, "extremal graph not irreducibly odd");
    }
    return ok;
}

bool c8_duality(std::string& why) {
    bool ok = true;
    for (int n : {6, 8}) {
        for (const auto& s : enumerate_irreducibly_odd(n).canon_list)
            ok &= expect(is_irreducibly_even(parse_graph6(s).complement()), why,
                         "complement of " + s + " is not irreducibly even");
    }
    for (int n = 2; n <= 8; n += 2) {
        for (const auto& s : enumerate_irreducibly_even(n).canon_list)
            ok &= expect(is_irreducibly_odd(parse_graph6(s).complement()), why,
                         "complement of even-order " + s + " is not irreducibly odd");
    }
    return ok;
}

bool c9_girth5(std::string& why) {
    auto report = check_girth5_sufficiency(12);
    bool ok = expect(report.counterexamples.empty(), why,
                     "counterexamples: " +
                         std::to_string(report.counterexamples.size()));
    ok &= expect(report.petersen_seen, why, "the Petersen graph never appeared");
    ok &= expect(report.classes_in_domain > 0, why, "empty domain");
    return ok;
}

bool c10_circle(std::string& why) {
    auto report = enumerate_irreducibly_odd(6);
    census_circle_flags(report);
    int realizable = 0;
    std::optional<ChordDiagram> witness;
    for (std::size_t i = 0; i < report.count(); ++i) {
        if (!*report.audits[i].is_circle_graph) continue;
        ++realizable;
        witness = realize_as_chord_diagram(parse_graph6(report.canon_list[i]));
    }
    bool ok = expect(realizable == 1, why,
                     "expected exactly one realizable six-vertex class, got " +
                         std::to_string(realizable));
    ok &= expect(witness.has_value(), why, "realization lost its witness");
    if (witness) {
        ok &= expect(isomorphic(interlacement_graph(*witness), triskelion()), why,
                     "realized diagram does not interlace to the triskelion");
        auto cert = certify_minimal(*witness);
        ok &= expect(cert.certified() && cert.crossing_number == 6, why,
                     "six-chord code not certified at six crossings");
    }
    return ok;
}

int run_out(const std::string& args, std::string& out) {
    std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    char buf[4096];
    std::size_t got;
    out.clear();
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool c11_determinism(std::string& why) {
    const std::vector<std::string> battery = {
        "check --in triskelion --json",
        "check --in petersen",
        "augment --in bull --json",
        "augment --in cycle:5 --mode girth --json",
        "enumerate --n 6 --audits all --json",
        "enumerate --n 8 --audits basic --json",
        "minor --in petersen --pattern triskelion --json",
        "morningstar-witness --in petersen --json",
        "chord interlace --code '1 2 1 3 4 2 5 3 5 6 4 6' --json",
        "chord realize --in morningstar:4 --json",
        "certify --code '1 2 1 3 4 2 5 3 5 6 4 6' --json",
        "formats --in petersen --emit edgelist",
    };
    bool ok = true;
    for (const auto& args : battery) {
        std::string first;
        int code = run_out(args, first);
        ok &= expect(code >= 0 && code != 2, why, "command failed: " + args);
        for (int rep = 0; rep < 2; ++rep) {
            std::string again;
            int code2 = run_out(args, again);
            ok &= expect(code2 == code && again == first, why,
                         "output varied across runs: " + args);
        }
    }
    const std::vector<std::string> parallel = {
        "enumerate --n 8 --json",
        "enumerate --n 10 --json",
        "chord realize --in triskelion --json",
        "chord realize --in 'E}iW' --json",
    };
    for (const auto& base : parallel) {
        std::string a, b;
        int ca = run_out(base + " --jobs 1", a);
        int cb = run_out(base + " --jobs 4", b);
        ok &= expect(ca == cb && a == b, why, "--jobs changed the answer: " + base);
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: acceptance <cli-binary> <golden-dir>\n");
        return 2;
    }
    g_cli = argv[1];
    g_golden = argv[2];

    const std::vector<Check> checks = {
        {"triskelion facts (irreducibly odd, 6v/6e, bull+spike, morningstar(3))",
         c1_triskelion},
        {"morningstar(k) irreducibly odd with girth k for 3 <= k <= 12", c2_morningstars},
        {"no tree on <= 10 vertices is irreducibly odd", c3_trees},
        {"census: n=6 matches brute force (3 classes); n=8 reproduces golden bytes "
         "(58 classes)",
         c4_census},
        {"every census graph has a verified triskelion minor", c5_minor},
        {"every shortest cycle of every census graph extends to a morningstar",
         c6_morningstar_theorem},
        {"size bounds hold across the census and are sharp for k = 3, 4",
         c7_size_bounds},
        {"complement duality on censuses up to 8 vertices", c8_duality},
        {"girth >= 5 sufficiency sweep to 12 vertices: zero counterexamples",
         c9_girth5},
        {"exactly one six-vertex class realizes as a chord diagram, certified at 6",
         c10_circle},
        {"CLI output byte-identical across runs and across --jobs", c11_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = checks[i].body(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        std::printf("criterion %2zu/%zu: %s  (%.2f s)  %s\n", i + 1, checks.size(),
                    ok ? "PASS" : "FAIL", secs, checks[i].name);
        if (!ok) {
            std::printf("    reason: %s\n", why.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, checks.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", checks.size());
    return 0;
}
