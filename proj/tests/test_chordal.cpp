#include <catch_amalgamated.hpp>

#include "nbhd/chordal.hpp"
#include "nbhd/coloring.hpp"
#include "nbhd/connectivity.hpp"
#include "nbhd/errors.hpp"
#include "nbhd/generators.hpp"
#include "nbhd/verify.hpp"
#include "oracles.hpp"

using namespace nbhd;

namespace {

bool induced_long_cycle(const Graph & g)
{
    bool found = false;
    oracle::for_each_mask(g.order(), [&](unsigned m) {
        if (found || std::popcount(m) < 5)
            return;
        auto vs = oracle::members(m);
        Subgraph h = extract(g, VertexSet(g.order(), vs));
        bool cycle = is_connected(h.graph) && h.graph.size() == vs.size();
        for (int v = 0; v < h.graph.order() && cycle; ++v)
            cycle = h.graph.degree(v) == 2;
        found = cycle;
    });
    return found;
}

bool is_induced_cycle(const Graph & g, const std::vector<int> & c)
{
    int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(c[i], c[j]) != consecutive)
                return false;
        }
    return true;
}

Graph k4_minus_edge()
{
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

} // namespace

TEST_CASE("chordality examples", "[chordal]")
{
    auto c4 = is_chordal(cycle_graph(4));
    CHECK_FALSE(c4.chordal);
    CHECK(c4.induced_cycle.size() == 4);
    CHECK(is_induced_cycle(cycle_graph(4), c4.induced_cycle));

    auto d = is_chordal(k4_minus_edge());
    CHECK(d.chordal);
    CHECK(is_perfect_elimination_ordering(k4_minus_edge(), d.peo));

    for (const auto & c : chordal_corpus(100, 1))
        CHECK(is_chordal(c.graph).chordal);
}

TEST_CASE("Lex-BFS chordality agrees with simplicial elimination", "[chordal][property]")
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        int n = 1 + static_cast<int>(seed % 9);
        double p = 0.3 + 0.08 * static_cast<double>(seed % 8);
        Graph g = random_graph(n, p, seed);
        auto r = is_chordal(g);
        INFO("seed " << seed);
        REQUIRE(r.chordal == oracle::chordal(g));
        if (r.chordal) {
            CHECK(is_perfect_elimination_ordering(g, r.peo));
        } else {
            CHECK(r.induced_cycle.size() >= 4);
            CHECK(is_induced_cycle(g, r.induced_cycle));
        }
    }
}

TEST_CASE("PEO check rejects a bad order", "[chordal]")
{
    // Path 0-1-2: eliminating the middle vertex first leaves 0, 2 non-adjacent.
    CHECK_FALSE(is_perfect_elimination_ordering(path_graph(3), {1, 0, 2}));
    CHECK(is_perfect_elimination_ordering(path_graph(3), {0, 1, 2}));
}

TEST_CASE("simplicial vertices", "[chordal]")
{
    CHECK(simplicial_vertices(path_graph(5)) == std::vector<int>{0, 4});
    CHECK(simplicial_vertices(complete_graph(4)) == std::vector<int>{0, 1, 2, 3});
    CHECK(simplicial_vertices(cycle_graph(4)).empty());
}

TEST_CASE("maximal cliques", "[chordal]")
{
    auto c5 = maximal_cliques(cycle_graph(5));
    CHECK(c5.size() == 5);
    for (const auto & c : c5)
        CHECK(c.count() == 2);
    CHECK(maximal_cliques(complete_graph(4)).size() == 1);

    Graph q = queen_graph(3, 2);
    std::vector<std::vector<int>> got;
    for (const auto & c : maximal_cliques(q))
        got.push_back(c.to_vector());
    CHECK(got == oracle::maximal_cliques(q));

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = random_graph(3 + static_cast<int>(seed % 8), 0.5, seed);
        std::vector<std::vector<int>> mine;
        for (const auto & c : maximal_cliques(g))
            mine.push_back(c.to_vector());
        CHECK(mine == oracle::maximal_cliques(g));
        CHECK(clique_number(g) == oracle::clique_number(g));
    }
}

TEST_CASE("simplicial decomposition", "[chordal]")
{
    auto k4 = simplicial_decomposition(complete_graph(4), VertexSet::full(4));
    CHECK(k4.cliques.size() == 1);
    CHECK(k4.intersection_sizes.empty());

    Graph diamond = k4_minus_edge();
    auto d = simplicial_decomposition(diamond, VertexSet(4, {0, 1, 2}));
    CHECK(d.intersection_sizes == std::vector<int>{2});
    CHECK(check_decomposition(diamond, d).empty());

    CHECK_THROWS_AS(simplicial_decomposition(cycle_graph(4), VertexSet(4, {0, 1})), DomainError);
    CHECK_THROWS_AS(simplicial_decomposition(diamond, VertexSet(4, {0, 1})), DomainError);
}

TEST_CASE("decompositions of corpus graphs satisfy the invariants", "[chordal][property]")
{
    for (const auto & c : chordal_corpus(100, 1)) {
        const Graph & g = c.graph;
        CHECK(check_decomposition(g, c.decomposition).empty());
        auto cliques = maximal_cliques(g);
        for (const auto & start : {cliques.front(), cliques.back()}) {
            auto d = simplicial_decomposition(g, start);
            CHECK(d.cliques.front() == start);
            CHECK(check_decomposition(g, d).empty());
            CHECK(d.cliques.size() == cliques.size());
            if (!is_complete(g)) {
                int k = vertex_connectivity(g).kappa;
                for (int s : d.intersection_sizes)
                    CHECK(s >= k);
            }
        }
    }
}

TEST_CASE("chordal graphs are perfect", "[chordal][property]")
{
    for (const auto & c : chordal_corpus(100, 1))
        CHECK(chromatic_number(c.graph) == clique_number(c.graph));
}

TEST_CASE("weak triangulation examples", "[chordal]")
{
    auto c5 = is_weakly_triangulated(cycle_graph(5));
    CHECK_FALSE(c5.weakly_triangulated);
    CHECK(c5.witness.size() == 5);
    CHECK(is_weakly_triangulated(cycle_graph(4)).weakly_triangulated);
    CHECK_FALSE(is_weakly_triangulated(cycle_graph(7)).weakly_triangulated);

    auto anti = is_weakly_triangulated(complement(cycle_graph(6)));
    CHECK_FALSE(anti.weakly_triangulated);
    CHECK(anti.witness_in_complement);

    CHECK_THROWS_AS(is_weakly_triangulated(Graph(17)), TooLarge);
    CHECK_NOTHROW(is_weakly_triangulated(Graph(17), 17));
}

TEST_CASE("weak triangulation agrees with exhaustive cycle search", "[chordal][property]")
{
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        Graph g = random_graph(5 + static_cast<int>(seed % 5), 0.5, seed);
        auto r = is_weakly_triangulated(g);
        bool expected = !induced_long_cycle(g) && !induced_long_cycle(complement(g));
        INFO("seed " << seed);
        CHECK(r.weakly_triangulated == expected);
        if (!r.weakly_triangulated)
            CHECK(is_induced_cycle(r.witness_in_complement ? complement(g) : g, r.witness));
    }
    for (const auto & c : chordal_corpus(60, 2))
        if (c.graph.order() <= 12)
            CHECK(is_weakly_triangulated(c.graph).weakly_triangulated);
}

TEST_CASE("Hayward property", "[chordal]")
{
    // C_4 with S = {0, 2}: each side has a vertex adjacent to both.
    CHECK(hayward_property(cycle_graph(4), VertexSet(4, {0, 2})));
    // C_6 with S = {0, 3}: no side vertex sees both.
    CHECK_FALSE(hayward_property(cycle_graph(6), VertexSet(6, {0, 3})));
    CHECK_THROWS_AS(hayward_property(complete_graph(4), VertexSet(4, {0})), DomainError);
}
