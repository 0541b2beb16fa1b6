#include "oddgraph/construct.hpp"

#include <bit>

#include "oddgraph/oddness.hpp"
#include "oddgraph/structure.hpp"

namespace oddgraph {

Graph bull() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}});
}

Graph cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph morningstar(int k) {
    if (k < 3) throw std::invalid_argument("morningstar needs k >= 3");
    if (2 * k > kMaxVertices)
        throw std::invalid_argument("morningstar(" + std::to_string(k) +
                                    ") would exceed 64 vertices");
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, (i + 1) % k);
        g.add_edge(i, k + i);
    }
    return g;
}

Graph triskelion() { return morningstar(3); }

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + i);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

namespace {

// Attach the patch that repairs an odd-degree vertex `at`: a bull glued by
// its mouth, or in girth-preserving mode a k-morningstar less the spike at
// the identified vertex.  Both add a new k-cycle through `at` (k = 3 for the
// bull) whose other vertices each carry one new spike, raising deg(at) by 2.
AugmentationStep attach_patch(Graph& g, int at, int k) {
    AugmentationStep step;
    step.at = at;
    if (k == 3) {
        step.kind = AugmentationStep::Kind::bull;
    } else {
        step.kind = AugmentationStep::Kind::morningstar;
        step.cycle_len = k;
    }
    const int base = g.n;
    for (int i = 0; i < 2 * (k - 1); ++i) {
        g = g.add_vertex();
        step.added.push_back(base + i);
    }
    // Cycle vertices base..base+k-2 close a k-cycle through `at`...
    g.add_edge(at, base);
    for (int i = 0; i + 1 < k - 1; ++i) g.add_edge(base + i, base + i + 1);
    g.add_edge(base + k - 2, at);
    // ...and each of them gets a private spike.
    for (int i = 0; i < k - 1; ++i) g.add_edge(base + i, base + k - 1 + i);
    return step;
}

AugmentationStep attach_spike(Graph& g, int at) {
    AugmentationStep step;
    step.kind = AugmentationStep::Kind::spike;
    step.at = at;
    const int s = g.n;
    g = g.add_vertex();
    g.add_edge(at, s);
    step.added = {s};
    return step;
}

}  // namespace

AugmentOutcome augment(const Graph& g, AugmentMode mode) {
    AugmentOutcome out{g, {}};
    Graph& work = out.graph;
    if (is_irreducibly_odd(work)) return out;

    int patch_len = 3;
    if (mode == AugmentMode::girth_preserving) {
        auto k = girth(g);
        if (!k)
            throw std::invalid_argument(
                "girth-preserving augmentation needs a cycle; input is a forest");
        patch_len = *k;
    }

    if (!work.is_connected() && work.n > 0) {
        AugmentationStep hub;
        hub.kind = AugmentationStep::Kind::hub;
        const int h = work.n;
        auto components = work.connected_components();
        work = work.add_vertex();
        for (std::uint64_t comp : components) {
            int rep = std::countr_zero(comp);
            work.add_edge(h, rep);
            hub.attachments.push_back(rep);
        }
        hub.added = {h};
        out.trace.steps.push_back(hub);
    }

    const int round_limit = g.n + 1;
    int rounds = 0;
    while (!is_irreducibly_odd(work)) {
        if (++rounds > round_limit)
            throw std::runtime_error(
                "augmentation did not converge within " + std::to_string(round_limit) +
                " rounds; the one-round-per-original-vertex bound failed");

        // Least vertex that is even or lies in a reducible pair.
        int target = -1;
        for (int v = 0; v < work.n && target < 0; ++v) {
            if (work.degree(v) % 2 == 0) target = v;
        }
        for (const auto& pv : reducible_pairs(work)) {
            if (target < 0 || pv.u < target) target = pv.u;
            break;  // pairs are in lexicographic order; first is least
        }

        if (work.degree(target) % 2 == 0) {
            // A second spike at a vertex that already has one would form a
            // reducible pair of pendants, so repair the existing spike first.
            int pendant = -1;
            for (std::uint64_t nb = work.adj[target]; nb && pendant < 0;) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (work.degree(u) == 1) pendant = u;
            }
            if (pendant >= 0)
                out.trace.steps.push_back(attach_patch(work, pendant, patch_len));
            else
                out.trace.steps.push_back(attach_spike(work, target));
        } else {
            out.trace.steps.push_back(attach_patch(work, target, patch_len));
        }
    }
    return out;
}

Graph replay_trace(const Graph& g, const AugmentationTrace& trace) {
    Graph work = g;
    for (const auto& step : trace.steps) {
        if (step.added.empty() || step.added.front() != work.n)
            throw std::invalid_argument("trace does not fit this graph");
        switch (step.kind) {
            case AugmentationStep::Kind::hub: {
                work = work.add_vertex();
                for (int rep : step.attachments) work.add_edge(step.added.front(), rep);
                break;
            }
            case AugmentationStep::Kind::spike: {
                work = work.add_vertex();
                work.add_edge(step.at, step.added.front());
                break;
            }
            case AugmentationStep::Kind::bull:
            case AugmentationStep::Kind::morningstar: {
                int k = step.kind == AugmentationStep::Kind::bull ? 3 : step.cycle_len;
                Graph scratch = work;
                AugmentationStep redone = attach_patch(scratch, step.at, k);
                if (redone.added != step.added)
                    throw std::invalid_argument("trace does not fit this graph");
                work = scratch;
                break;
            }
        }
    }
    return work;
}

}  // namespace oddgraph
