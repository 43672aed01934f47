#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nbhd/chordal.hpp"
#include "nbhd/graph.hpp"

namespace nbhd {

Graph complete_graph(int p);
Graph cycle_graph(int k);
Graph path_graph(int k);
Graph star_graph(int leaves);

/// Squares (i,j), 1 <= i <= m, 1 <= j <= n, at index (i-1)*n + (j-1),
/// labelled "(i,j)". Two squares are adjacent when they share a row, column
/// or diagonal; intermediate squares never block.
Graph queen_graph(int m, int n);

/// Same square layout; adjacency at Chebyshev distance 1.
Graph king_graph(int m, int n);

/// Index of square (i,j) in queen_graph / king_graph(m, n).
inline int square_index(int n, int i, int j) { return (i - 1) * n + (j - 1); }

/// v_i -> i, u_i -> n + i, w -> 2n.
Graph mycielskian(const Graph & g);

struct RandomChordalParams
{
    int num_cliques = 1;
    int min_clique_size = 3;
    int max_clique_size = 6;
    int overlap_min = 1;
};

struct RandomChordal
{
    Graph graph;
    /// The cliques in gluing order; each is maximal in `graph`.
    SimplicialDecomposition decomposition;
};

/// Glues cliques one at a time: each new clique shares a proper subset (of size
/// >= overlap_min) of one earlier clique and adds at least one fresh vertex.
/// Vertex indices are randomly permuted at the end. Deterministic in `seed`.
RandomChordal random_chordal(const RandomChordalParams & params, std::uint64_t seed);

/// Erdős–Rényi G(n, p).
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

/// Uniform random connected graph model used by the corpora: a random spanning
/// tree plus independent extra edges with probability p.
Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed);

struct GluedGraph
{
    Graph graph;
    /// Index in `graph` of each vertex of the first / second part.
    std::vector<int> first;
    std::vector<int> second;
};

/// Union of g1 and g2 with g2's vertex pairs[i].second identified with g1's
/// vertex pairs[i].first. g1 keeps its indices; unglued g2 vertices follow.
GluedGraph glue(const Graph & g1, const Graph & g2, const std::vector<std::pair<int, int>> & pairs);

} // namespace nbhd
