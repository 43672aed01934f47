#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "nbhd/chordal.hpp"
#include "nbhd/complex.hpp"
#include "nbhd/connectivity.hpp"
#include "nbhd/generators.hpp"
#include "nbhd/graph_io.hpp"
#include "nbhd/homology.hpp"
#include "nbhd/verify.hpp"

using namespace nbhd;

TEST_CASE("Figure 2 fixture", "[verify]")
{
    auto fx = fixture_counterexample();
    CHECK(fx.report.passed());
    CHECK(fx.report.instances_checked == 1);
    CHECK(fx.graph.order() == 12);
    CHECK(fx.graph.size() == 20);
    auto r = reduced_homology(neighbourhood_complex(fx.graph), 3);
    CHECK(r.group(0).trivial());
    CHECK(r.group(1).trivial());
    CHECK(describe(r.group(2)) == "Z^3");
    CHECK(r.group(3).trivial());
    CHECK_FALSE(is_chordal(fx.graph).chordal);
}

TEST_CASE("board orders", "[verify]")
{
    // 3x3: corner is (1,1),(1,2),(2,1),(2,2); then (3,1),(3,2); then column 3 top to bottom.
    CHECK(board_addition_order(3, 3) == std::vector<int>{6, 7, 2, 5, 8});
    CHECK(board_removal_order(3, 3) == std::vector<int>{8, 5, 2, 7, 6});
    CHECK(board_addition_order(2, 2).empty());
}

TEST_CASE("queen and king boards are certified simply connected", "[verify]")
{
    auto r = verify_queen_king_simply_connected(4, 4);
    CHECK(r.passed());
    CHECK(r.instances_checked == 18);
    CHECK(r.regime == Regime::certified_topological);
}

TEST_CASE("connectivity bounds", "[verify]")
{
    auto k5 = connectivity_bounds(complete_graph(5), 4);
    CHECK(k5.exact());
    CHECK(k5.lo == 2);
    CHECK(k5.certified);

    auto c4 = connectivity_bounds(cycle_graph(4), 3);
    CHECK(c4.exact());
    CHECK(c4.lo == -1);

    // Figure 2: homology vanishes through dimension 1, G is not chordal, no certificate given.
    auto fig = connectivity_bounds(figure2_graph(), 3);
    CHECK(fig.lo == 0);
    CHECK(fig.hi == 1);
    CHECK_FALSE(fig.certified);

    auto q = queen_graph(3, 3);
    auto cert = certify_connectivity(q, board_removal_order(3, 3), 1);
    REQUIRE(cert);
    auto certified = connectivity_bounds(q, 4, &*cert);
    CHECK(certified.exact());
    CHECK(certified.lo == 2);
    CHECK(certified.certified);

    CHECK(connectivity_bounds(Graph(), 2).lo == -2);
}

TEST_CASE("simplicial removal order", "[verify]")
{
    for (const auto & c : chordal_corpus(30, 2)) {
        const Graph & g = c.graph;
        int kappa = vertex_connectivity(g).kappa;
        auto order = simplicial_removal_order(g, kappa);
        if (!order)
            continue;
        VertexSet alive = VertexSet::full(g.order());
        for (int v : *order)
            alive.erase(v);
        CHECK(is_complete(extract(g, alive).graph));
    }
}

TEST_CASE("Table 1 reference values", "[verify]")
{
    const auto & cells = table1_expected();
    CHECK(cells.size() == 19);
    for (const auto & c : cells)
        if (c.m == 3 && c.n == 4)
            CHECK(c.betti == std::array<int, 4>{0, 0, 0, 5});
}

TEST_CASE("chordal verifiers pass on a small corpus", "[verify]")
{
    std::vector<Graph> corpus;
    for (auto & c : chordal_corpus(25, 1))
        corpus.push_back(c.graph);
    CHECK(verify_lovasz(corpus).passed());
    CHECK(verify_chordal_n_connected(corpus).passed());
    auto stiff = stiff_chordal_corpus(25, 1);
    auto main = verify_chordal_main(stiff.graphs);
    CHECK(main.passed());
    CHECK(main.instances_checked == 25);
}

TEST_CASE("two K_5 glued on K_4", "[verify]")
{
    std::vector<std::pair<int, int>> pairs{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    Graph g = glue(complete_graph(5), complete_graph(5), pairs).graph;
    CHECK(vertex_connectivity(g).kappa == 4);
    auto r = reduced_homology(neighbourhood_complex(g), 4);
    CHECK(vanishes_through(r, 2));
    CHECK(verify_chordal_n_connected({g}).passed());
}

TEST_CASE("Mycielskian verifier", "[verify]")
{
    auto r = verify_mycielskian(mycielski_corpus(5, 1));
    CHECK(r.passed());
    CHECK(r.instances_checked == 10);
    // A disconnected graph does not satisfy κ(M(G)) > κ(G).
    auto d = verify_mycielskian({Graph(2)});
    CHECK(d.passed());
    CHECK(d.skipped.size() == 1);
}

TEST_CASE("cut theorem verifier", "[verify]")
{
    auto r = verify_cut_theorem(cut_theorem_corpus());
    CHECK(r.passed());
    CHECK(r.instances_checked > 0);
}

TEST_CASE("vertex connectivity (ii) needs sides that agree on S", "[verify]")
{
    // G1 = C_4 as 0-2-1-3-0; G2 has edges 01 02 12 13 23. Glued on {0, 1}.
    Graph g1(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    Graph g2(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    GluedInstance inst{g1, g2, {{0, 0}, {1, 1}}};
    auto gg = glue(g1, g2, inst.glue);

    auto b1 = connectivity_bounds(g1, 3);
    auto b2 = connectivity_bounds(g2, 3);
    auto whole = connectivity_bounds(gg.graph, 3);
    auto on_s = connectivity_bounds(extract(gg.graph, VertexSet(gg.graph.order(), {0, 1})).graph, 3);
    REQUIRE(b1.exact());
    REQUIRE(whole.exact());
    REQUIRE(on_s.exact());
    int k = std::min(b1.lo, b2.lo);
    CHECK(k == -1);
    CHECK(on_s.lo == -1);
    CHECK(k <= on_s.lo);     // premise of the literal statement holds
    CHECK(whole.lo == 0);    // N(G) has the homology of a circle
    CHECK_FALSE(2 >= whole.lo + 3);

    auto r = verify_vertexconnectivity_theorem({inst}, Variant::ii);
    CHECK(r.passed());
    CHECK(r.instances_checked == 0);
    REQUIRE(r.skipped.size() == 1);
    CHECK(r.skipped[0].reason.find("differ") != std::string::npos);
}

TEST_CASE("vertex connectivity (ii) needs S non-empty", "[verify]")
{
    GluedInstance inst{Graph(2), Graph(2), {}};
    auto r = verify_vertexconnectivity_theorem({inst}, Variant::ii);
    CHECK(r.skipped.size() == 1);
    CHECK(verify_vertexconnectivity_theorem({inst}, Variant::i).passed());
}

TEST_CASE("vertex connectivity verifiers on the corpus", "[verify]")
{
    auto corpus = vertexconnectivity_corpus(120, 1);
    auto i = verify_vertexconnectivity_theorem(corpus, Variant::i, 1);
    auto ii = verify_vertexconnectivity_theorem(corpus, Variant::ii, 1);
    CHECK(i.passed());
    CHECK(ii.passed());
    CHECK(i.instances_checked > 0);
    CHECK(ii.instances_checked > 0);
}

TEST_CASE("weakly triangulated verifier", "[verify]")
{
    auto r = verify_weakly_triangulated(weakly_triangulated_corpus(30, 1), 1);
    CHECK(r.passed());
    CHECK(r.instances_checked > 0);
}

TEST_CASE("fold invariance verifier", "[verify]")
{
    auto r = verify_fold_invariance(fold_corpus(30, 1), 1);
    CHECK(r.passed());
    CHECK(r.instances_checked == 30);
}

TEST_CASE("reports are deterministic and replayable", "[verify]")
{
    std::vector<Graph> corpus;
    for (auto & c : chordal_corpus(10, 3))
        corpus.push_back(c.graph);
    auto a = report_to_json(verify_lovasz(corpus, 3));
    auto b = report_to_json(verify_lovasz(corpus, 3));
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    CHECK(j["theorem_id"] == "lovasz");
    CHECK(j["passed"] == true);
    CHECK(j["instances_checked"] == 10);

    // A failure record carries the graph; replaying it must reproduce the check.
    VerificationReport r;
    r.fail(corpus[0], "x", "y");
    Graph back = graph_from_json(r.failures[0].graph);
    CHECK(back == corpus[0]);
    CHECK(rerun("lovasz", back).instances_checked == 1);
    CHECK_THROWS_AS(rerun("table1", back), std::invalid_argument);
}

TEST_CASE("regime tagging", "[verify]")
{
    VerificationReport r;
    CHECK(r.regime == Regime::certified_topological);
    r.note_regime(true);
    CHECK(r.regime == Regime::certified_topological);
    r.note_regime(false);
    r.note_regime(true);
    CHECK(r.regime == Regime::homological_surrogate);
    CHECK(std::string(to_string(r.regime)) == "homological-surrogate");
}
