#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nbhd/graph.hpp"

namespace nbhd {

struct FoldStep
{
    int removed;
    int dominator;
};

/// Sequence of folds G ↘ G - {u_1} ↘ ... ending in a stiff graph.
/// Steps use the original vertex indices.
struct FoldTrace
{
    std::vector<FoldStep> steps;
    Graph result;
    /// result vertex i is original vertex result_vertices[i].
    std::vector<int> result_vertices;
    Graph original;
};

enum class FoldOrder
{
    lowest_first,
    highest_first,
};

/// Lexicographically smallest (u, v), u != v, with N(u) ⊆ N(v).
std::optional<std::pair<int, int>> find_fold(const Graph & g);

bool is_stiff(const Graph & g);

/// Folds until stiff. lowest_first picks find_fold's pair each time;
/// highest_first picks the largest foldable u (smallest dominator).
FoldTrace fold_reduce(const Graph & g, FoldOrder order = FoldOrder::lowest_first);

enum class FoldVerdict
{
    yes,
    no,
    unknown,
};

struct FoldOntoClique
{
    FoldVerdict verdict = FoldVerdict::unknown;
    /// Successful fold sequence when verdict == yes.
    std::vector<FoldStep> steps;
};

inline constexpr int default_fold_search_cap = 12;
inline constexpr std::size_t default_fold_state_budget = 1u << 20;

/// Can g be folded onto K_p? Greedy first; no when ω(g) < p. Otherwise every
/// fold sequence is searched when g has at most `exhaustive_cap` vertices
/// (memoized on the set of remaining vertices). Unknown above the cap or
/// once `max_states` dead states have been recorded.
FoldOntoClique folds_onto_clique(const Graph & g, int p, int exhaustive_cap = default_fold_search_cap,
                                 std::size_t max_states = default_fold_state_budget);

} // namespace nbhd
