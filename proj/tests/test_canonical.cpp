#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "oddgraph/construct.hpp"
#include "oddgraph/graph.hpp"

using namespace oddgraph;

namespace {

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph h;
    h.n = g.n;
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

// Reference certificate: the lexicographically least adjacency bitstring over
// all n! relabelings.  Any correct canonical form must induce exactly the
// same partition of labeled graphs into classes.
std::string brute_certificate(const Graph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        s.reserve(static_cast<std::size_t>(g.n) * g.n);
        Graph h = apply_permutation(g, perm);
        for (int u = 0; u < h.n; ++u)
            for (int v = u + 1; v < h.n; ++v) s.push_back(h.has_edge(u, v) ? '1' : '0');
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (apply_permutation(a, perm).adj == b.adj) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph graph_from_code(int n, unsigned code) {
    Graph g;
    g.n = n;
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if ((code >> k) & 1) g.add_edge(u, v);
    return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g;
    g.n = n;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("canonical form partitions all graphs up to 5 vertices correctly") {
    // Known isomorphism class counts for n = 1..5.
    const int expected_classes[] = {0, 1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        std::map<std::string, std::string> brute_to_canon;
        std::set<std::string> canon_seen;
        for (unsigned code = 0; code < (1u << pairs); ++code) {
            Graph g = graph_from_code(n, code);
            std::string b = brute_certificate(g);
            std::string c = canonical_form(g).g6;
            auto [it, fresh] = brute_to_canon.emplace(b, c);
            CHECK(it->second == c);  // same brute class, same canonical form
            canon_seen.insert(c);
        }
        CHECK(brute_to_canon.size() == static_cast<std::size_t>(expected_classes[n]));
        // Distinct brute classes must also get distinct canonical forms.
        CHECK(canon_seen.size() == brute_to_canon.size());
    }
}

TEST_CASE("canonical form is invariant under random relabeling") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);  // up to 9
        Graph g = random_graph(rng, n, 0.5);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(apply_permutation(g, perm)));
    }
}

TEST_CASE("canonical form agrees with brute-force isomorphism on perturbed pairs") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);  // up to 7: brute force stays cheap
        Graph a = random_graph(rng, n, 0.5);
        Graph b = a;
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) v = (v + 1) % n;
        if (b.has_edge(u, v))
            b.remove_edge(u, v);
        else
            b.add_edge(u, v);
        bool iso = brute_isomorphic(a, b);
        CHECK(isomorphic(a, b) == iso);
        CHECK((canonical_form(a) == canonical_form(b)) == iso);
    }
}

TEST_CASE("canonical graph is an isomorphic copy realizing the form") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n, 0.4);
        Graph c = canonical_graph(g);
        CHECK(emit_graph6(c) == canonical_form(g).g6);
        CHECK(brute_isomorphic(g, c));
    }
}

TEST_CASE("highly symmetric graphs canonicalize without blowup") {
    Graph pet = petersen();
    CHECK(isomorphic(pet, canonical_graph(pet)));
    // Petersen is self-complementary-free: its complement (the Kneser graph
    // complement, i.e. the triangular graph T(5)) is 6-regular, not isomorphic.
    CHECK_FALSE(isomorphic(pet, pet.complement()));
    Graph m6 = morningstar(6);
    CHECK(isomorphic(m6, canonical_graph(m6)));
    Graph k;  // complete graph on 10 vertices: automorphism group of size 10!
    k.n = 10;
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) k.add_edge(u, v);
    CHECK(canonical_form(k).g6 == emit_graph6(k));
}

TEST_CASE("isomorphic distinguishes same-degree-sequence non-isomorphic graphs") {
    // C6 and 2*C3 are both 2-regular on six vertices.
    Graph c6 = cycle(6);
    Graph two_triangles = Graph::disjoint_union(cycle(3), cycle(3));
    CHECK_FALSE(isomorphic(c6, two_triangles));
    CHECK(isomorphic(c6, apply_permutation(c6, {3, 1, 4, 0, 5, 2})));
}
