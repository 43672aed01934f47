#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nbhd/vertex_set.hpp"

namespace nbhd {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one bitset row per vertex. Loops are rejected and
/// repeated edges collapse, so the edge set always has set semantics.
/// Optional display labels (chessboard squares, original indices after
/// re-indexing) live beside the structure and never affect it.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge> & edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    /// Adds {u,v}. Throws DomainError on loops or out-of-range endpoints.
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;

    /// Neighbour set of v; no range check (see nbhd::neighborhood for the checked form).
    const VertexSet & adjacency(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    /// Edges {u,v} with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    const std::map<int, std::string> & labels() const noexcept { return labels_; }
    void set_label(int v, std::string label);
    /// Label of v, or its index when unlabelled.
    std::string label(int v) const;

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.adj_ == b.adj_;
    }

private:
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
    std::map<int, std::string> labels_;
};

/// Induced subgraph together with the new-index -> old-index map.
struct Subgraph
{
    Graph graph;
    std::vector<int> original;
};

VertexSet neighborhood(const Graph & g, int v);
VertexSet common_neighborhood(const Graph & g, const VertexSet & a);

Graph complement(const Graph & g);

/// G[S], re-indexed 0..|S|-1 in increasing order of the original indices.
/// Each new vertex is labelled with its original label (or original index).
Graph induced_subgraph(const Graph & g, const VertexSet & s);
Subgraph extract(const Graph & g, const VertexSet & s);

/// G - S.
Subgraph remove_vertices(const Graph & g, const VertexSet & s);

bool is_complete(const Graph & g);
bool is_clique(const Graph & g, const VertexSet & s);
int min_degree(const Graph & g);

/// Connected components of G[alive] (vertex sets over the universe of g),
/// ordered by smallest member.
std::vector<VertexSet> components(const Graph & g, const VertexSet & alive);
std::vector<VertexSet> components(const Graph & g);
bool is_connected(const Graph & g);

} // namespace nbhd
