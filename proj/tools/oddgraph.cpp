// oddgraph: command-line front end for the irreducibly odd graph library.
//
// Exit codes: 0 = success, 1 = query answered "not found / absent",
// 2 = usage or input error.
//
// All output is deterministic: repeated runs (and --jobs 1 vs --jobs N)
// produce byte-identical stdout.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddgraph/chord.hpp"
#include "oddgraph/construct.hpp"
#include "oddgraph/enumerate.hpp"
#include "oddgraph/graph.hpp"
#include "oddgraph/oddness.hpp"
#include "oddgraph/structure.hpp"

using nlohmann::ordered_json;
using namespace oddgraph;

namespace {

constexpr const char* kNamedGraphHelp =
    "triskelion, bull, petersen, morningstar:<k>, cycle:<k>";

std::optional<Graph> named_graph(const std::string& name) {
    if (name == "triskelion") return triskelion();
    if (name == "bull") return bull();
    if (name == "petersen") return petersen();
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string head = name.substr(0, colon), tail = name.substr(colon + 1);
        if (head == "morningstar" || head == "cycle") {
            int k = 0;
            try {
                std::size_t used = 0;
                k = std::stoi(tail, &used);
                if (used != tail.size()) throw std::invalid_argument(tail);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad parameter in named graph '" + name +
                                            "': want " + head + ":<integer>");
            }
            return head == "morningstar" ? morningstar(k) : cycle(k);
        }
    }
    return std::nullopt;
}

// A graph argument is a named graph, "-" for stdin, a file path, or an
// inline graph6 / edge-list literal.
Graph load_graph(const std::string& arg) {
    if (auto g = named_graph(arg)) return *g;
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_graph_auto(buf.str());
    }
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_graph_auto(buf.str());
    }
    return parse_graph_auto(arg);
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

void print_json(const ordered_json& j) { std::cout << j.dump() << "\n"; }

std::vector<int> mask_to_list(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
        if ((mask >> v) & 1) out.push_back(v);
    return out;
}

// --- subcommand bodies -------------------------------------------------------

int run_check(const std::string& in, bool json) {
    Graph g = load_graph(in);
    bool odd = is_odd(g), irr = is_irreducibly_odd(g);
    auto pairs = reducible_pairs(g);
    std::vector<int> evens;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) % 2 == 0) evens.push_back(v);
    if (json) {
        ordered_json j;
        j["n"] = g.n;
        j["edges"] = g.edge_count();
        j["odd"] = odd;
        j["irreducibly_odd"] = irr;
        if (g.n == 0) j["vacuous"] = true;
        if (!odd) j["even_vertices"] = evens;
        if (!pairs.empty()) {
            j["reducible_pairs"] = ordered_json::array();
            for (const auto& p : pairs) j["reducible_pairs"].push_back({p.u, p.v});
        }
        print_json(j);
    } else {
        std::cout << "n: " << g.n << "\nedges: " << g.edge_count() << "\nodd: "
                  << bool_word(odd) << "\nirreducibly_odd: " << bool_word(irr)
                  << (g.n == 0 ? " (vacuous)" : "") << "\n";
        if (!evens.empty()) {
            std::cout << "even_vertices:";
            for (int v : evens) std::cout << ' ' << v;
            std::cout << "\n";
        }
        for (const auto& p : pairs)
            std::cout << "reducible_pair: {" << p.u << ", " << p.v << "}\n";
    }
    return 0;
}

const char* step_name(AugmentationStep::Kind k) {
    switch (k) {
        case AugmentationStep::Kind::hub: return "hub";
        case AugmentationStep::Kind::spike: return "spike";
        case AugmentationStep::Kind::bull: return "bull";
        case AugmentationStep::Kind::morningstar: return "morningstar";
    }
    return "?";
}

int run_augment(const std::string& in, const std::string& mode_word, bool json) {
    Graph g = load_graph(in);
    AugmentMode mode;
    if (mode_word == "bull")
        mode = AugmentMode::bull;
    else if (mode_word == "girth")
        mode = AugmentMode::girth_preserving;
    else
        throw CLI::ValidationError("--mode", "must be 'bull' or 'girth'");
    auto out = augment(g, mode);
    if (json) {
        ordered_json j;
        j["input_g6"] = emit_graph6(g);
        j["mode"] = mode_word;
        j["result_g6"] = emit_graph6(out.graph);
        j["n"] = out.graph.n;
        j["edges"] = out.graph.edge_count();
        j["irreducibly_odd"] = is_irreducibly_odd(out.graph);
        j["steps"] = ordered_json::array();
        for (const auto& s : out.trace.steps) {
            ordered_json js;
            js["kind"] = step_name(s.kind);
            if (s.kind != AugmentationStep::Kind::hub) js["at"] = s.at;
            if (s.kind == AugmentationStep::Kind::morningstar)
                js["cycle_len"] = s.cycle_len;
            js["added"] = s.added;
            if (s.kind == AugmentationStep::Kind::hub)
                js["attachments"] = s.attachments;
            j["steps"].push_back(std::move(js));
        }
        print_json(j);
    } else {
        std::cout << "input: " << emit_graph6(g) << " (n=" << g.n
                  << ", m=" << g.edge_count() << ")\nmode: " << mode_word
                  << "\nresult: " << emit_graph6(out.graph) << " (n=" << out.graph.n
                  << ", m=" << out.graph.edge_count() << ")\nsteps: "
                  << out.trace.steps.size() << "\n";
        int i = 0;
        for (const auto& s : out.trace.steps) {
            std::cout << "  " << ++i << ". " << step_name(s.kind);
            if (s.kind == AugmentationStep::Kind::hub) {
                std::cout << " vertex " << s.added.front() << " joined to";
                for (int a : s.attachments) std::cout << ' ' << a;
            } else {
                std::cout << " at " << s.at << " added";
                for (int a : s.added) std::cout << ' ' << a;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_enumerate(int n, const std::string& kind_word, const std::string& audits,
                  int jobs, const std::string& out_dir, bool json) {
    CensusKind kind;
    if (kind_word == "odd")
        kind = CensusKind::irr_odd;
    else if (kind_word == "even")
        kind = CensusKind::irr_even;
    else
        throw CLI::ValidationError("--kind", "must be 'odd' or 'even'");
    if (audits != "none" && kind != CensusKind::irr_odd)
        throw CLI::ValidationError("--audits", "audits apply to the odd census only");

    CensusReport report;
    bool from_cache = false;
    const char* cache = std::getenv("OODGRAPH_CENSUS_DIR");
    if (cache && *cache) {
        if (auto cached = read_census(kind, n, cache)) {
            report = std::move(*cached);
            from_cache = true;
        }
    }
    if (!from_cache) {
        report = kind == CensusKind::irr_odd ? enumerate_irreducibly_odd(n, jobs)
                                             : enumerate_irreducibly_even(n, jobs);
        if (cache && *cache) write_census(report, cache);
    }
    if (audits != "none") {
        run_audits(report, jobs);
        if (audits == "all") census_circle_flags(report, jobs);
    }
    if (!out_dir.empty()) write_census(report, out_dir);

    if (json) {
        ordered_json j;
        j["kind"] = kind == CensusKind::irr_odd ? "irr_odd" : "irr_even";
        j["n"] = n;
        j["count"] = report.count();
        if (!report.note.empty()) j["note"] = report.note;
        j["graphs"] = ordered_json::array();
        for (std::size_t i = 0; i < report.count(); ++i) {
            ordered_json g;
            g["g6"] = report.canon_list[i];
            if (!report.audits.empty()) {
                const auto& a = report.audits[i];
                g["edge_bounds_ok"] = a.edge_bounds_ok;
                g["triskelion_minor"] = a.triskelion_minor;
                g["morningstar_extension"] = a.morningstar_extension;
                g["complement_irreducibly_even"] = a.complement_irreducibly_even;
                if (audits == "all") g["circle_graph"] = *a.is_circle_graph;
            }
            j["graphs"].push_back(std::move(g));
        }
        print_json(j);
    } else {
        std::cout << "kind: " << (kind == CensusKind::irr_odd ? "irr_odd" : "irr_even")
                  << "\nn: " << n << "\ncount: " << report.count() << "\n";
        if (!report.note.empty()) std::cout << "note: " << report.note << "\n";
        for (std::size_t i = 0; i < report.count(); ++i) {
            std::cout << report.canon_list[i];
            if (!report.audits.empty()) {
                const auto& a = report.audits[i];
                std::cout << "  bounds=" << bool_word(a.edge_bounds_ok)
                          << " triskelion=" << bool_word(a.triskelion_minor)
                          << " morningstar=" << bool_word(a.morningstar_extension)
                          << " complement=" << bool_word(a.complement_irreducibly_even);
                if (a.is_circle_graph)
                    std::cout << " circle=" << bool_word(*a.is_circle_graph);
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_minor(const std::string& in, const std::string& pattern_arg, bool json) {
    Graph g = load_graph(in);
    Graph pattern = load_graph(pattern_arg);
    auto w = has_minor(g, pattern);
    if (w && !verify_minor_witness(g, pattern, *w))
        throw std::runtime_error("internal error: witness failed verification");
    if (json) {
        ordered_json j;
        j["found"] = w.has_value();
        if (w) {
            j["branch_sets"] = ordered_json::array();
            for (auto mask : w->branch_sets) j["branch_sets"].push_back(mask_to_list(mask));
        }
        print_json(j);
    } else {
        std::cout << "minor: " << (w ? "found" : "not found") << "\n";
        if (w)
            for (std::size_t i = 0; i < w->branch_sets.size(); ++i) {
                std::cout << "  " << i << ":";
                for (int v : mask_to_list(w->branch_sets[i])) std::cout << ' ' << v;
                std::cout << "\n";
            }
    }
    return w ? 0 : 1;
}

int run_morningstar_witness(const std::string& in, bool json) {
    Graph g = load_graph(in);
    auto k = girth(g);
    if (!k) throw std::invalid_argument("graph is a forest: no cycles, no girth");
    auto cycles = shortest_cycles(g);
    bool all_found = true;
    ordered_json out;
    out["girth"] = *k;
    out["witnesses"] = ordered_json::array();
    std::ostringstream human;
    human << "girth: " << *k << "\n";
    for (const auto& cyc : cycles) {
        auto w = find_morningstar(g, cyc);
        ordered_json jw;
        jw["cycle"] = cyc;
        jw["found"] = w.has_value();
        human << "cycle [";
        for (std::size_t i = 0; i < cyc.size(); ++i) human << (i ? " " : "") << cyc[i];
        human << "]: ";
        if (w) {
            if (!verify_morningstar(g, *w))
                throw std::runtime_error("internal error: witness failed verification");
            jw["spikes"] = w->spikes;
            human << "spikes [";
            for (std::size_t i = 0; i < w->spikes.size(); ++i)
                human << (i ? " " : "") << w->spikes[i];
            human << "]\n";
        } else {
            all_found = false;
            human << "no spike assignment\n";
        }
        out["witnesses"].push_back(std::move(jw));
    }
    out["all_found"] = all_found;
    if (json)
        print_json(out);
    else
        std::cout << human.str();
    return all_found ? 0 : 1;
}

int run_chord_interlace(const std::string& code, bool json) {
    ChordDiagram d = parse_gauss_code(code);
    Graph g = interlacement_graph(d);
    if (json) {
        ordered_json j;
        j["code"] = format_gauss_code(d);
        j["chords"] = d.chords();
        j["interlacement_g6"] = emit_graph6(g);
        j["edges"] = ordered_json::array();
        for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
        print_json(j);
    } else {
        std::cout << "code: " << format_gauss_code(d) << "\nchords: " << d.chords()
                  << "\ninterlacement: " << emit_graph6(g) << "\n";
        for (auto [u, v] : g.edges())
            std::cout << "  " << u + 1 << " -- " << v + 1 << "\n";
    }
    return 0;
}

int run_chord_realize(const std::string& in, int jobs, bool json) {
    Graph g = load_graph(in);
    auto d = realize_as_chord_diagram(g, jobs);
    if (json) {
        ordered_json j;
        j["found"] = d.has_value();
        if (d) j["code"] = format_gauss_code(*d);
        print_json(j);
    } else {
        if (d)
            std::cout << "code: " << format_gauss_code(*d) << "\n";
        else
            std::cout << "not a circle graph\n";
    }
    return d ? 0 : 1;
}

int run_certify(const std::string& code, const std::string& out_path, bool json) {
    ChordDiagram d = parse_gauss_code(code);
    MinimalityCertificate cert = certify_minimal(d);
    ordered_json j;
    j["code"] = format_gauss_code(cert.diagram);
    j["n"] = cert.diagram.chords();
    j["interlacement_g6"] = emit_graph6(cert.interlacement);
    j["irreducibly_odd"] = cert.irreducibly_odd;
    j["verdict"] = cert.certified() ? "certified_minimal" : "inconclusive";
    if (cert.certified()) j["crossing_number"] = *cert.crossing_number;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump(1) << "\n";
    }
    if (json) {
        print_json(j);
    } else {
        std::cout << "code: " << format_gauss_code(cert.diagram) << "\nchords: "
                  << cert.diagram.chords() << "\ninterlacement: "
                  << emit_graph6(cert.interlacement) << "\nirreducibly_odd: "
                  << bool_word(cert.irreducibly_odd) << "\nverdict: ";
        if (cert.certified())
            std::cout << "certified_minimal (crossing number " << *cert.crossing_number
                      << ")\n";
        else
            std::cout << "inconclusive\n";
    }
    return 0;
}

int run_formats(const std::string& in, const std::string& emit, bool json) {
    if (in.empty()) {
        if (json) {
            ordered_json j;
            j["graph_formats"] = {"graph6", "edgelist"};
            j["emit_formats"] = {"g6", "edgelist", "dot"};
            j["named_graphs"] = {"triskelion", "bull", "petersen", "morningstar:<k>",
                                 "cycle:<k>"};
            j["input_rules"] = "named graph, '-' for stdin, a file path, or an inline literal";
            print_json(j);
        } else {
            std::cout
                << "graph input: a named graph (" << kNamedGraphHelp
                << "),\n  '-' for stdin, a file path, or an inline literal.\n"
                   "formats: graph6 (header byte 63+n, upper-triangle bits, "
                   "columns j=1..n-1),\n  edge list (\"n m\" then m lines \"u v\").\n"
                   "emit targets: g6, edgelist, dot.\n";
        }
        return 0;
    }
    Graph g = load_graph(in);
    std::string text;
    if (emit.empty() || emit == "g6")
        text = emit_graph6(g) + "\n";
    else if (emit == "edgelist")
        text = emit_edge_list(g);
    else if (emit == "dot")
        text = emit_dot(g);
    else
        throw CLI::ValidationError("--emit", "must be g6, edgelist, or dot");
    if (json) {
        ordered_json j;
        j["emit"] = emit;
        j["text"] = text;
        print_json(j);
    } else {
        std::cout << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"irreducibly odd graphs: predicates, augmentation, census, "
                 "structure witnesses, chord diagrams"};
    app.require_subcommand(1);
    app.fallthrough();  // --json may follow the subcommand
    bool json = false;
    app.add_flag("--json", json, "emit one JSON object instead of text");

    std::string in, pattern, mode = "bull", code, out_path, kind = "odd";
    std::string audits = "none", emit;
    int n = 0, jobs = 1;

    auto* c_check = app.add_subcommand("check", "odd / irreducibly odd verdict");
    c_check->add_option("--in", in, "graph (named, file, '-', or literal)")->required();

    auto* c_aug = app.add_subcommand("augment",
                                     "grow the graph into an irreducibly odd one");
    c_aug->add_option("--in", in, "graph")->required();
    c_aug->add_option("--mode", mode, "bull | girth (default bull)");

    auto* c_enum = app.add_subcommand("enumerate", "census of all classes on n vertices");
    c_enum->add_option("--n", n, "vertex count")->required();
    c_enum->add_option("--kind", kind, "odd | even (default odd)");
    c_enum->add_option("--audits", audits, "none | basic | all (default none)");
    c_enum->add_option("--jobs", jobs, "worker threads (default 1)");
    c_enum->add_option("--out", out_path, "directory to write census files");

    auto* c_minor = app.add_subcommand("minor", "pattern-minor search with witness");
    c_minor->add_option("--in", in, "host graph")->required();
    c_minor->add_option("--pattern", pattern, "pattern graph")->required();

    auto* c_ms = app.add_subcommand("morningstar-witness",
                                    "spike assignments for every shortest cycle");
    c_ms->add_option("--in", in, "graph")->required();

    auto* c_chord = app.add_subcommand("chord", "chord diagram operations");
    c_chord->require_subcommand(1);
    auto* c_inter = c_chord->add_subcommand("interlace", "interlacement graph of a code");
    c_inter->add_option("--code", code, "double occurrence word, e.g. \"1 2 1 2\"")
        ->required();
    auto* c_real = c_chord->add_subcommand("realize", "find a chord diagram for a graph");
    c_real->add_option("--in", in, "graph")->required();
    c_real->add_option("--jobs", jobs, "worker threads (default 1)");

    auto* c_cert = app.add_subcommand("certify",
                                      "free-knot diagram minimality certificate");
    c_cert->add_option("--code", code, "Gauss code of the diagram")->required();
    c_cert->add_option("--out", out_path, "write the certificate JSON here");

    auto* c_fmt = app.add_subcommand("formats", "list formats or convert a graph");
    c_fmt->add_option("--in", in, "graph to convert");
    c_fmt->add_option("--emit", emit, "g6 | edgelist | dot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_check) return run_check(in, json);
        if (*c_aug) return run_augment(in, mode, json);
        if (*c_enum) return run_enumerate(n, kind, audits, jobs, out_path, json);
        if (*c_minor) return run_minor(in, pattern, json);
        if (*c_ms) return run_morningstar_witness(in, json);
        if (*c_inter) return run_chord_interlace(code, json);
        if (*c_real) return run_chord_realize(in, jobs, json);
        if (*c_cert) return run_certify(code, out_path, json);
        if (*c_fmt) return run_formats(in, emit, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
