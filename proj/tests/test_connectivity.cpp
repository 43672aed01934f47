#include <catch_amalgamated.hpp>

#include "nbhd/chordal.hpp"
#include "nbhd/connectivity.hpp"
#include "nbhd/errors.hpp"
#include "nbhd/generators.hpp"
#include "nbhd/verify.hpp"
#include "oracles.hpp"

using namespace nbhd;

namespace {

// Smallest set of vertices other than s, t whose removal separates s from t.
int brute_local_cut(const Graph & g, int s, int t)
{
    int n = g.order();
    int best = n;
    oracle::for_each_mask(n, [&](unsigned m) {
        if (m >> s & 1u || m >> t & 1u || std::popcount(m) >= best)
            return;
        std::vector<bool> seen(n, false);
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (!seen[v] && !(m >> v & 1u) && g.adjacent(u, v)) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        if (!seen[t])
            best = std::popcount(m);
    });
    return best;
}

bool disconnects(const Graph & g, const VertexSet & s)
{
    return !is_connected(remove_vertices(g, s).graph);
}

} // namespace

TEST_CASE("vertex connectivity examples", "[connectivity]")
{
    auto k4 = vertex_connectivity(complete_graph(4));
    CHECK(k4.kappa == 3);
    CHECK_FALSE(k4.witness_cut.has_value());
    for (int n = 4; n <= 9; ++n)
        CHECK(vertex_connectivity(cycle_graph(n)).kappa == 2);
    CHECK(vertex_connectivity(path_graph(5)).kappa == 1);
    CHECK(vertex_connectivity(Graph(3)).kappa == 0);

    Graph fig2 = figure2_graph();
    auto r = vertex_connectivity(fig2);
    CHECK(r.kappa == 1);
    REQUIRE(r.witness_cut);
    CHECK(r.witness_cut->count() == 1);
    CHECK(fig2.label(r.witness_cut->to_vector()[0]) == "2");
}

TEST_CASE("the Figure 2 cut vertex is unique", "[connectivity]")
{
    Graph g = figure2_graph();
    std::vector<std::string> cut_vertices;
    for (int v = 0; v < g.order(); ++v)
        if (disconnects(g, VertexSet(g.order(), {v})))
            cut_vertices.push_back(g.label(v));
    CHECK(cut_vertices == std::vector<std::string>{"2"});
}

TEST_CASE("kappa agrees with brute-force separating sets", "[connectivity][property]")
{
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 2 + static_cast<int>(seed % 11);
        double p = 0.25 + 0.07 * static_cast<double>(seed % 10);
        Graph g = random_graph(n, p, seed);
        auto r = vertex_connectivity(g);
        INFO("seed " << seed);
        CHECK(r.kappa == oracle::kappa(g));
        if (r.witness_cut) {
            CHECK(r.witness_cut->count() == r.kappa);
            CHECK(disconnects(g, *r.witness_cut));
        }
        if (g.order() > 0)
            CHECK(r.kappa <= min_degree(g));
    }
}

TEST_CASE("Menger: disjoint paths match the minimum separator", "[connectivity][property]")
{
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_graph(5 + static_cast<int>(seed % 6), 0.45, seed);
        for (int s = 0; s < g.order(); ++s)
            for (int t = s + 1; t < g.order(); ++t) {
                if (g.adjacent(s, t))
                    continue;
                auto paths = disjoint_paths(g, s, t);
                CHECK(static_cast<int>(paths.size()) == brute_local_cut(g, s, t));
                CHECK(local_vertex_cut(g, s, t).value == static_cast<int>(paths.size()));
                std::vector<int> used(g.order(), 0);
                for (const auto & p : paths) {
                    CHECK(p.front() == s);
                    CHECK(p.back() == t);
                    for (std::size_t i = 0; i + 1 < p.size(); ++i)
                        CHECK(g.adjacent(p[i], p[i + 1]));
                    for (std::size_t i = 1; i + 1 < p.size(); ++i)
                        ++used[p[i]];
                }
                for (int c : used)
                    CHECK(c <= 1);
            }
    }
}

TEST_CASE("disjoint paths examples", "[connectivity]")
{
    CHECK(disjoint_paths(complete_graph(4), 0, 1).size() == 3);
    CHECK(disjoint_paths(cycle_graph(4), 0, 2).size() == 2);
    CHECK(disjoint_paths(path_graph(5), 0, 4).size() == 1);
    CHECK_THROWS_AS(disjoint_paths(path_graph(3), 1, 1), DomainError);
}

TEST_CASE("minimum vertex cuts", "[connectivity]")
{
    auto c4 = min_vertex_cuts(cycle_graph(4), 10);
    REQUIRE(c4.cuts.size() == 2);
    CHECK(c4.cuts[0].to_vector() == std::vector<int>{0, 2});
    CHECK(c4.cuts[1].to_vector() == std::vector<int>{1, 3});
    auto p3 = min_vertex_cuts(path_graph(3), 10);
    REQUIRE(p3.cuts.size() == 1);
    CHECK(p3.cuts[0].to_vector() == std::vector<int>{1});
    CHECK_THROWS_AS(min_vertex_cuts(complete_graph(4), 10), DomainError);

    auto c8 = min_vertex_cuts(cycle_graph(8), 3);
    CHECK(c8.cuts.size() == 3);
    CHECK(c8.truncated);
}

TEST_CASE("minimal cuts of chordal graphs induce cliques", "[connectivity][property]")
{
    for (const auto & c : chordal_corpus(60, 1)) {
        const Graph & g = c.graph;
        if (is_complete(g) || g.order() > 14)
            continue;
        for (const auto & s : min_vertex_cuts(g, 1000).cuts)
            CHECK(is_clique(g, s));
    }
}

TEST_CASE("removing fewer than kappa vertices leaves the graph connected", "[connectivity][property]")
{
    for (const auto & c : chordal_corpus(40, 3)) {
        const Graph & g = c.graph;
        if (g.order() > 14)
            continue;
        int k = vertex_connectivity(g).kappa;
        oracle::for_each_mask(g.order(), [&](unsigned m) {
            if (std::popcount(m) == k - 1)
                CHECK_FALSE(disconnects(g, VertexSet(g.order(), oracle::members(m))));
        });
    }
}

TEST_CASE("S-components", "[connectivity]")
{
    auto c4 = s_components(cycle_graph(4), VertexSet(4, {0, 2}));
    REQUIRE(c4.components.size() == 2);
    CHECK(c4.components[0].to_vector() == std::vector<int>{0, 1, 2});
    CHECK(c4.components[1].to_vector() == std::vector<int>{0, 2, 3});

    CHECK(s_components(cycle_graph(5), VertexSet(5)).components.size() == 1);
    CHECK_THROWS_AS(s_components(path_graph(2), VertexSet(2, {0, 1})), DomainError);

    Graph g = figure2_graph();
    int two = 1;
    REQUIRE(g.label(two) == "2");
    auto r = s_components(g, VertexSet(12, {two}));
    REQUIRE(r.components.size() == 2);
    std::vector<std::vector<std::string>> named;
    for (const auto & comp : r.components) {
        std::vector<std::string> labels;
        for (int v : comp.to_vector())
            labels.push_back(g.label(v));
        named.push_back(labels);
    }
    CHECK(named[0] == std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(named[1] == std::vector<std::string>{"2", "5", "6", "7", "8", "9", "10", "11", "12"});
}

TEST_CASE("S-components pairwise meet in S and cover V", "[connectivity][property]")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = random_connected_graph(9, 0.3, seed);
        if (is_complete(g))
            continue;
        auto cut = vertex_connectivity(g).witness_cut;
        REQUIRE(cut);
        auto r = s_components(g, *cut);
        CHECK(r.components.size() >= 2);
        VertexSet all(g.order());
        for (std::size_t i = 0; i < r.components.size(); ++i) {
            all = all | r.components[i];
            for (std::size_t j = i + 1; j < r.components.size(); ++j)
                CHECK((r.components[i] & r.components[j]) == *cut);
        }
        CHECK(all.count() == g.order());
    }
}

TEST_CASE("Mycielskian raises connectivity of connected graphs", "[connectivity][property]")
{
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_connected_graph(2 + static_cast<int>(seed % 7), 0.4, seed);
        CHECK(vertex_connectivity(mycielskian(g)).kappa > vertex_connectivity(g).kappa);
    }
    // Disconnected input: both sides have κ = 0.
    CHECK(vertex_connectivity(mycielskian(Graph(2))).kappa == 0);
}
