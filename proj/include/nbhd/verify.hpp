#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nbhd/certificate.hpp"
#include "nbhd/generators.hpp"
#include "nbhd/graph.hpp"
#include "nbhd/homology.hpp"

namespace nbhd {

enum class Regime
{
    certified_topological,
    homological_surrogate,
};

const char * to_string(Regime r);

struct FailureRecord
{
    /// Canonical graph JSON of the offending instance.
    std::string graph;
    std::string expected;
    std::string observed;
};

struct SkipRecord
{
    std::string graph;
    std::string reason;
};

/// Outcome of one verifier over a finite corpus. A pass means "checked N
/// instances without a counterexample", nothing more.
struct VerificationReport
{
    std::string theorem_id;
    int instances_checked = 0;
    std::vector<FailureRecord> failures;
    /// Checks that failed only at the homological level, where Conn is not
    /// pinned down; they neither pass nor refute.
    std::vector<FailureRecord> inconclusive;
    std::vector<SkipRecord> skipped;
    Regime regime = Regime::certified_topological;
    std::uint64_t seed = 0;
    int vacuous = 0;

    bool passed() const { return failures.empty(); }
    void note_regime(bool certified);
    void fail(const Graph & g, std::string expected, std::string observed);
    void flag(const Graph & g, std::string expected, std::string observed);
    void skip(const Graph & g, std::string reason);
};

std::string report_to_json(const VerificationReport & r);

/// Bounds lo ≤ Conn(N(G)) ≤ hi derived from homology (hi = INT_MAX when no
/// nonzero group was found up to max_dim). lo = hi whenever the homological
/// value is at most 0, G is chordal (N(G) is a wedge of spheres), or a
/// certificate shows N(G) simply connected.
struct ConnBounds
{
    static constexpr int unbounded = INT_MAX;
    int lo = -2;
    int hi = unbounded;
    /// Exactness comes from the chordal structure or a certificate.
    bool certified = false;
    std::string basis;
    HomologyReport homology;

    bool exact() const { return lo == hi; }
};

ConnBounds connectivity_bounds(const Graph & g, int max_dim, const ConnectivityCertificate * cert = nullptr);

// ---- corpora and fixtures ----

/// Random chordal graphs with 2..6 cliques of size 3..6; instance i uses seed + i.
std::vector<RandomChordal> chordal_corpus(int count, std::uint64_t seed);

/// Fold-reduced random chordal graphs that are stiff, connected and not complete.
struct StiffCorpus
{
    std::vector<Graph> graphs;
    int attempts = 0;
};
StiffCorpus stiff_chordal_corpus(int count, std::uint64_t seed);

/// Random graphs on 4..14 vertices with mixed densities.
std::vector<Graph> fold_corpus(int count, std::uint64_t seed);

/// K_2, K_3, C_4, C_5, P_4 followed by `random_count` connected random graphs on 2..8 vertices.
std::vector<Graph> mycielski_corpus(int random_count, std::uint64_t seed);

/// The 12-vertex graph of the 1-connected counterexample: K_4 on 1..4, a cube
/// on 5..12, joined by 2-9 and 2-7. Labels are "1".."12".
Graph figure2_graph();

/// Cells of an m x n board in the order the induction adds them, starting
/// from the 2 x 2 corner: rows 3..m over columns 1..2, then columns 3..n.
std::vector<int> board_addition_order(int m, int n);
/// Reverse of board_addition_order (the removal order certify_connectivity expects).
std::vector<int> board_removal_order(int m, int n);

/// Repeatedly removes the lowest simplicial vertex v with κ(H - v) ≥ level and
/// χ(H - v) = χ(H) until a complete graph remains. Absent if no such vertex exists.
std::optional<std::vector<int>> simplicial_removal_order(const Graph & g, int level);

struct Table1Cell
{
    int m;
    int n;
    std::array<int, 4> betti;
};
const std::vector<Table1Cell> & table1_expected();

struct GluedInstance
{
    Graph g1;
    Graph g2;
    /// (vertex of g1, vertex of g2) identified.
    std::vector<std::pair<int, int>> glue;
};

std::vector<GluedInstance> cut_theorem_corpus();
std::vector<GluedInstance> vertexconnectivity_corpus(int count, std::uint64_t seed);
/// Connected, non-complete, weakly triangulated random graphs on 5..10 vertices.
std::vector<Graph> weakly_triangulated_corpus(int count, std::uint64_t seed);

// ---- verifiers ----

VerificationReport verify_lovasz(const std::vector<Graph> & corpus, std::uint64_t seed = 0);
VerificationReport verify_chordal_main(const std::vector<Graph> & corpus, std::uint64_t seed = 0);
VerificationReport verify_cut_theorem(const std::vector<GluedInstance> & corpus);

enum class Variant
{
    i,
    ii,
};
VerificationReport verify_vertexconnectivity_theorem(const std::vector<GluedInstance> & corpus, Variant variant,
                                                     std::uint64_t seed = 0);
/// Minimal cuts S with G[S] connected in the complement: Hayward's property
/// holds and |S| ≥ Conn(N(G)) + 1 whenever the premise on the sides holds.
VerificationReport verify_weakly_triangulated(const std::vector<Graph> & corpus, std::uint64_t seed = 0);
VerificationReport verify_mycielskian(const std::vector<Graph> & corpus, std::uint64_t seed = 0);
VerificationReport verify_queen_king_simply_connected(int max_m, int max_n);
VerificationReport verify_table1();

struct Counterexample
{
    Graph graph;
    VerificationReport report;
};
Counterexample fixture_counterexample();

/// For every level n with G (n+1)-connected: if G cannot be folded onto
/// K_{n+2}, N(G) is n-connected, and the simplicial-vertex certificate exists.
VerificationReport verify_chordal_n_connected(const std::vector<Graph> & corpus, int fold_cap = 40,
                                              std::uint64_t seed = 0);

/// Homology of N(G) equals that of N(stiff residual) for both fold orders, dims ≤ 4.
VerificationReport verify_fold_invariance(const std::vector<Graph> & corpus, std::uint64_t seed = 0);

/// Re-runs a single-graph verifier on one instance (used to replay failure records).
VerificationReport rerun(const std::string & theorem_id, const Graph & g);

} // namespace nbhd
