#pragma once

#include <optional>
#include <vector>

#include "nbhd/graph.hpp"

namespace nbhd {

/// Ordering (V_1, ..., V_k) of the maximal cliques of a chordal graph in which
/// every V_j meets the union of its predecessors in a clique.
/// intersection_sizes[j-1] = |V_{j+1} ∩ (V_1 ∪ ... ∪ V_j)|, so it has k-1 entries.
struct SimplicialDecomposition
{
    std::vector<VertexSet> cliques;
    std::vector<int> intersection_sizes;
};

struct ChordalityResult
{
    bool chordal = false;
    /// Perfect elimination ordering (first eliminated first) when chordal.
    std::vector<int> peo;
    /// Induced cycle of length >= 4, in cyclic order, when not chordal.
    std::vector<int> induced_cycle;
};

/// Lexicographic breadth-first search, ties broken towards the lowest index.
/// Returns the visit order; its reverse is a PEO exactly when g is chordal.
std::vector<int> lex_bfs(const Graph & g);

/// True iff every vertex's later neighbours (in `order`) form a clique.
bool is_perfect_elimination_ordering(const Graph & g, const std::vector<int> & order);

ChordalityResult is_chordal(const Graph & g);

std::vector<int> simplicial_vertices(const Graph & g);

/// All maximal cliques, each as a VertexSet, sorted lexicographically by members.
std::vector<VertexSet> maximal_cliques(const Graph & g);
int clique_number(const Graph & g);

/// Decomposition starting at `start`, built from a clique tree rooted there and
/// emitted in breadth-first order.
/// Throws DomainError for non-chordal input (message carries the induced cycle),
/// disconnected input, or when `start` is not a maximal clique.
SimplicialDecomposition simplicial_decomposition(const Graph & g, const VertexSet & start);

/// Checks the decomposition invariants against g; returns an empty string when valid.
std::string check_decomposition(const Graph & g, const SimplicialDecomposition & d);

struct WeakTriangulationResult
{
    bool weakly_triangulated = true;
    /// Vertices of the offending induced C_k (k >= 5), in cyclic order of the cycle
    /// in g, or in the complement when witness_in_complement is set.
    std::vector<int> witness;
    bool witness_in_complement = false;
};

inline constexpr int default_weak_triangulation_cap = 16;

/// Exhaustive search for induced C_k (k >= 5) in g and in its complement.
/// Throws TooLarge above `cap` vertices.
WeakTriangulationResult is_weakly_triangulated(const Graph & g, int cap = default_weak_triangulation_cap);

/// Shortest induced cycle of length >= min_length found by chordless-path search,
/// or empty.
std::vector<int> find_long_induced_cycle(const Graph & g, int min_length);

/// Every component of G - S contains a vertex adjacent to all of S.
/// Throws DomainError when S is not a vertex cut.
bool hayward_property(const Graph & g, const VertexSet & s);

} // namespace nbhd
