#pragma once

#include <vector>

#include "oddgraph/graph.hpp"

namespace oddgraph {

// Triangle {0, 1, 2} with pendant vertices 3 (at 1) and 4 (at 2).  Vertex 0,
// the degree-2 "mouth", is the only even-degree vertex.
Graph bull();

// Cycle 0..k-1 (k >= 3).
Graph cycle(int k);

// k-cycle 0..k-1 with one pendant spike k+i attached to each cycle vertex i
// (k >= 3).  2k vertices, 2k edges, girth k, irreducibly odd: the minimum-
// edge example on 2k vertices.
Graph morningstar(int k);

// Alias for morningstar(3): the unique smallest nonempty irreducibly odd
// graph (6 vertices).  Equals bull() plus one spike at the mouth, up to
// isomorphism.
Graph triskelion();

// The Petersen graph: outer 5-cycle 0..4, inner 5-cycle 5..9 joined as a
// pentagram, spokes i -- 5+i.  3-regular, girth 5, irreducibly odd.
Graph petersen();

// How augment() repairs an odd-degree vertex sitting in a reducible pair.
enum class AugmentMode {
    bull,              // attach a bull at the vertex (may create triangles)
    girth_preserving,  // attach a girth(g)-morningstar less one spike instead
};

// One augmentation event.  `added` lists the new vertex ids in creation
// order; replay_trace applies the same ids, so a trace is a checkable
// certificate of the construction.
struct AugmentationStep {
    enum class Kind {
        hub,          // new vertex joined to one vertex of each component
        spike,        // new pendant at `at` (fixes even degree)
        bull,         // bull glued to `at` by its mouth (fixes a reducible pair)
        morningstar,  // cycle_len-morningstar less one spike, identified at `at`
    };
    Kind kind{};
    int at = -1;                   // patched vertex; -1 for hub
    int cycle_len = 0;             // morningstar steps only
    std::vector<int> added;        // new vertex ids
    std::vector<int> attachments;  // hub steps only: one vertex per component
};

struct AugmentationTrace {
    std::vector<AugmentationStep> steps;
};

struct AugmentOutcome {
    Graph graph;
    AugmentationTrace trace;
};

// Grow g into an irreducibly odd graph that contains it as an induced
// subgraph on vertices 0..g.n-1.  Disconnected input first gets one hub
// vertex joined to every component; after that, each round patches the least
// vertex that is even or belongs to a reducible pair, and the repair loop is
// asserted to converge within g.n + 1 rounds.
//
// girth_preserving mode additionally keeps girth(result) == girth(g); it
// rejects forests, where there is no girth to preserve.
AugmentOutcome augment(const Graph& g, AugmentMode mode);

// Re-apply a trace mechanically.  replay_trace(g, augment(g, m).trace) equals
// augment(g, m).graph field-for-field.
Graph replay_trace(const Graph& g, const AugmentationTrace& trace);

}  // namespace oddgraph
