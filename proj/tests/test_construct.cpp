#include <doctest.h>

#include <random>

#include "oddgraph/construct.hpp"
#include "oddgraph/oddness.hpp"
#include "oddgraph/structure.hpp"

using namespace oddgraph;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g;
    g.n = n;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

std::uint64_t low_mask(int n) { return n == 64 ? ~0ull : bit(n) - 1; }

}  // namespace

TEST_CASE("named graph facts") {
    Graph b = bull();
    CHECK(b.n == 5);
    CHECK(b.edge_count() == 5);
    CHECK(b.degree(0) == 2);  // the mouth, the only even-degree vertex
    for (int v = 1; v < 5; ++v) CHECK(b.degree(v) % 2 == 1);
    CHECK_FALSE(is_irreducibly_odd(b));

    CHECK(cycle(3).edge_count() == 3);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);

    Graph p = petersen();
    CHECK(p.n == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(girth(p) == 5);
    CHECK(is_irreducibly_odd(p));
}

TEST_CASE("morningstar family") {
    for (int k = 3; k <= 12; ++k) {
        Graph m = morningstar(k);
        CHECK(m.n == 2 * k);
        CHECK(m.edge_count() == 2 * k);
        CHECK(girth(m) == k);
        CHECK(is_irreducibly_odd(m));
        // Degrees: k cycle vertices of degree 3, k spikes of degree 1.
        for (int v = 0; v < k; ++v) CHECK(m.degree(v) == 3);
        for (int v = k; v < 2 * k; ++v) CHECK(m.degree(v) == 1);
    }
    CHECK(isomorphic(triskelion(), morningstar(3)));
    CHECK_THROWS_AS(morningstar(2), std::invalid_argument);
}

TEST_CASE("augmentation produces an irreducibly odd supergraph") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n, 0.4);
        auto out = augment(g, AugmentMode::bull);
        CHECK(is_irreducibly_odd(out.graph));
        // Original graph survives as the induced subgraph on its own labels.
        CHECK(out.graph.induced_subgraph(low_mask(g.n)) == g);
        // Bounded work: at most one repair round per original vertex, plus one
        // extra round, plus the hub step for disconnected input.
        CHECK(out.trace.steps.size() <= static_cast<std::size_t>(g.n) + 2);
        CHECK(replay_trace(g, out.trace) == out.graph);
    }
}

TEST_CASE("augmentation is idempotent on an already irreducibly odd graph") {
    auto out = augment(petersen(), AugmentMode::bull);
    CHECK(out.trace.steps.empty());
    CHECK(out.graph == petersen());
}

TEST_CASE("augmenting a single vertex yields the smallest example") {
    Graph k1;
    k1.n = 1;
    auto out = augment(k1, AugmentMode::bull);
    CHECK(out.graph.n == 6);
    CHECK(isomorphic(out.graph, triskelion()));
}

TEST_CASE("augmentation bridges disconnected input with a hub") {
    Graph g = Graph::disjoint_union(cycle(3), cycle(3));
    auto out = augment(g, AugmentMode::bull);
    REQUIRE_FALSE(out.trace.steps.empty());
    CHECK(out.trace.steps.front().kind == AugmentationStep::Kind::hub);
    CHECK(out.trace.steps.front().attachments.size() == 2);
    CHECK(out.graph.is_connected());
    CHECK(is_irreducibly_odd(out.graph));
}

TEST_CASE("girth-preserving augmentation keeps the girth") {
    std::mt19937 rng(43);
    int done = 0;
    while (done < 100) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = random_graph(rng, n, 0.4);
        auto k = girth(g);
        if (!k) continue;  // forests are rejected in this mode
        ++done;
        auto out = augment(g, AugmentMode::girth_preserving);
        CHECK(is_irreducibly_odd(out.graph));
        CHECK(girth(out.graph) == *k);
        CHECK(out.graph.induced_subgraph(low_mask(g.n)) == g);
        CHECK(replay_trace(g, out.trace) == out.graph);
    }
    // High-girth seed: C7 grows into an irreducibly odd graph of girth 7.
    auto out = augment(cycle(7), AugmentMode::girth_preserving);
    CHECK(girth(out.graph) == 7);
    CHECK(is_irreducibly_odd(out.graph));

    Graph forest;
    forest.n = 4;
    forest.add_edge(0, 1);
    forest.add_edge(1, 2);
    CHECK_THROWS_AS(augment(forest, AugmentMode::girth_preserving),
                    std::invalid_argument);
}
