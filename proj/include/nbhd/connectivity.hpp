#pragma once

#include <optional>
#include <vector>

#include "nbhd/graph.hpp"

namespace nbhd {

struct CutReport
{
    int kappa = 0;
    /// A separating set of size kappa; absent for complete graphs.
    std::optional<VertexSet> witness_cut;
    /// Every separating set of size kappa, when enumeration was requested.
    std::optional<std::vector<VertexSet>> all_min_cuts;
    bool all_min_cuts_truncated = false;
};

struct LocalCut
{
    int value = 0;
    VertexSet cut;
};

/// Minimum s-t separating vertex set for non-adjacent s != t (vertex-split max flow).
LocalCut local_vertex_cut(const Graph & g, int s, int t);

/// κ(G) = min over non-adjacent pairs of the local connectivity, κ(K_p) = p - 1.
/// Only pairs through a minimum-degree vertex and its neighbourhood are tried
/// (Esfahanian–Hakimi), which is still exact.
/// When enumerate_limit > 0 all minimum cuts are also listed (see min_vertex_cuts).
CutReport vertex_connectivity(const Graph & g, int enumerate_limit = 0);

/// Maximum family of internally disjoint s-t paths, each listed from s to t.
/// Includes the direct edge when s ~ t. Lowest-index tie-breaking throughout.
std::vector<std::vector<int>> disjoint_paths(const Graph & g, int s, int t);

struct MinCuts
{
    std::vector<VertexSet> cuts;
    bool truncated = false;
};

inline constexpr int default_min_cut_cap = 20;

/// All vertex cuts of size κ(G), in lexicographic order, at most `limit` of them.
/// Throws DomainError on complete graphs and TooLarge above `cap` vertices.
MinCuts min_vertex_cuts(const Graph & g, int limit, int cap = default_min_cut_cap);

struct SComponents
{
    VertexSet cut;
    /// Each entry is X ∪ S for one component X of G - S.
    std::vector<VertexSet> components;
};

SComponents s_components(const Graph & g, const VertexSet & s);

} // namespace nbhd
