#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddgraph/graph.hpp"

namespace oddgraph {

enum class CensusKind { irr_odd, irr_even };

// Per-graph audit flags; all should be true for irreducibly odd census
// entries.  is_circle_graph stays unset until census_circle_flags (chord
// module) fills it.
struct CensusAudit {
    bool edge_bounds_ok = false;
    bool triskelion_minor = false;
    bool morningstar_extension = false;
    bool complement_irreducibly_even = false;
    std::optional<bool> is_circle_graph;
};

// Result of an exhaustive isomorph-free enumeration: sorted canonical graph6
// strings, one per isomorphism class.  audits (when run) align with
// canon_list by index.
struct CensusReport {
    CensusKind kind = CensusKind::irr_odd;
    int n = 0;
    std::vector<std::string> canon_list;
    std::vector<CensusAudit> audits;
    std::string note;  // e.g. why an odd-order census is empty

    std::size_t count() const { return canon_list.size(); }
};

// All irreducibly odd graphs on exactly n vertices, one canonical form per
// isomorphism class.  Odd n short-circuits to an empty census (a graph with
// all degrees odd has even order, by the handshake identity).  n > 10 is
// refused: the level before last already holds all graph classes on n-2
// vertices, which passes 10^7 around n = 12.
CensusReport enumerate_irreducibly_odd(int n, int jobs = 1);

// Even-degree counterpart (any parity of n is possible here).
CensusReport enumerate_irreducibly_even(int n, int jobs = 1);

// Fill every audit flag except is_circle_graph.  Only meaningful for
// irr_odd reports.
void run_audits(CensusReport& report, int jobs = 1);

// All trees on exactly n >= 1 vertices, one canonical representative per
// isomorphism class, sorted by canonical form.
std::vector<Graph> enumerate_trees(int n);

// Sharp bounds on the edge count of a nonempty irreducibly odd graph on
// n = 2k vertices (k >= 3): {2k, C(2k,2) - 2k + 1}.  The minimum is attained
// by morningstar(k), the maximum by extremal_max(k).
std::pair<int, int> edge_bounds(int k);

// complement of (cycle on 2k-1 vertices plus one isolated vertex): the
// maximum-edge irreducibly odd graph on 2k vertices.
Graph extremal_max(int k);

// Exhaustive check of the girth-five sufficiency condition: every connected
// graph on at most n_max vertices that has a cycle, girth >= 5, all degrees
// odd, and no vertex carrying two pendant neighbors must be irreducibly odd.
// Connectivity matters: a bare K2 component is a reducible pendant pair, so
// e.g. morningstar(5) plus a disjoint edge meets every other hypothesis yet
// fails.  (Equivalently, the minimal hypothesis is "no K2 component".)
struct Girth5Report {
    int n_max = 0;
    long long classes_girth5 = 0;    // graphs with girth >= 5 (incl. forests)
    long long classes_in_domain = 0; // ...that satisfy the hypotheses
    bool petersen_seen = false;      // sanity: Petersen is in the domain
    std::vector<std::string> counterexamples;  // expected empty
};
Girth5Report check_girth5_sufficiency(int n_max, int jobs = 1);

// --- persistence -------------------------------------------------------------
//
// A census is stored as <dir>/<kind>_<n>.g6 (one canonical string per line)
// with audits, when present, in <dir>/<kind>_<n>.audits.json.  Output is
// deterministic: re-writing an identical report reproduces identical bytes.
std::string census_basename(CensusKind kind, int n);
void write_census(const CensusReport& report, const std::string& dir);
std::optional<CensusReport> read_census(CensusKind kind, int n, const std::string& dir);

}  // namespace oddgraph
