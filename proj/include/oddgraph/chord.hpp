#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddgraph/enumerate.hpp"
#include "oddgraph/graph.hpp"

namespace oddgraph {

// A chord diagram (equivalently the Gauss code of a free-knot diagram): 2k
// points on a circle joined in pairs, written as a double occurrence word.
// Normalized form: labels are 1..k in order of first appearance.
struct ChordDiagram {
    std::vector<int> word;

    int chords() const { return static_cast<int>(word.size()) / 2; }
    bool operator==(const ChordDiagram&) const = default;
};

// Whitespace/comma-separated integer symbols, each appearing exactly twice.
// Errors name the byte offset and, for multiplicity faults, the label.
ChordDiagram parse_gauss_code(std::string_view text);

std::string format_gauss_code(const ChordDiagram& d);

// Chords as vertices; edges join interlaced chords (each separates the
// other's endpoints on the circle).  Vertex i is the chord labeled i+1.
Graph interlacement_graph(const ChordDiagram& d);

// Search for a chord diagram whose interlacement graph is g (i.e. decide
// whether g is a circle graph, with a witness).  The diagram returned is the
// first one in a fixed depth-first order, so results are deterministic, and
// with jobs > 1 the search is partitioned by the vertex assigned to the
// first chord, which reproduces the sequential answer exactly.  Limited to
// g.n <= 9; beyond that the position-by-position search is impractical.
std::optional<ChordDiagram> realize_as_chord_diagram(const Graph& g, int jobs = 1);

// Minimality certificate for a free-knot diagram: when the interlacement
// graph of its Gauss code is irreducibly odd, no diagram of the same free
// knot has fewer crossings, so crossing_number equals chords().  Otherwise
// the test is inconclusive (it never certifies non-minimality).
struct MinimalityCertificate {
    ChordDiagram diagram;  // normalized input
    Graph interlacement;
    bool irreducibly_odd = false;
    std::optional<int> crossing_number;  // set exactly when certified minimal

    bool certified() const { return crossing_number.has_value(); }
};

MinimalityCertificate certify_minimal(const ChordDiagram& d);

// Fill the is_circle_graph audit flag for every census entry (report.n <= 9).
void census_circle_flags(CensusReport& report, int jobs = 1);

}  // namespace oddgraph
