#include "nbhd/folds.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "nbhd/chordal.hpp"
#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

bool dominated(const Graph & g, const VertexSet & alive, int u, int v)
{
    return (g.adjacency(u) & alive).is_subset_of(g.adjacency(v));
}

/// Smallest dominator of u among alive vertices, or -1.
int dominator_of(const Graph & g, const VertexSet & alive, int u)
{
    int found = -1;
    alive.for_each([&](int v) {
        if (found == -1 && v != u && dominated(g, alive, u, v))
            found = v;
    });
    return found;
}

} // namespace

std::optional<std::pair<int, int>> find_fold(const Graph & g)
{
    auto alive = VertexSet::full(g.order());
    for (int u = 0; u < g.order(); ++u) {
        int v = dominator_of(g, alive, u);
        if (v != -1)
            return std::pair{u, v};
    }
    return std::nullopt;
}

bool is_stiff(const Graph & g)
{
    return !find_fold(g).has_value();
}

FoldTrace fold_reduce(const Graph & g, FoldOrder order)
{
    FoldTrace trace;
    trace.original = g;
    auto alive = VertexSet::full(g.order());
    while (true) {
        std::optional<FoldStep> step;
        auto members = alive.to_vector();
        if (order == FoldOrder::highest_first)
            std::reverse(members.begin(), members.end());
        for (int u : members) {
            int v = dominator_of(g, alive, u);
            if (v != -1) {
                step = FoldStep{u, v};
                break;
            }
        }
        if (!step)
            break;
        alive.erase(step->removed);
        trace.steps.push_back(*step);
    }
    auto sub = extract(g, alive);
    for (std::size_t i = 0; i < sub.original.size(); ++i)
        sub.graph.set_label(static_cast<int>(i), g.label(sub.original[i]));
    trace.result = std::move(sub.graph);
    trace.result_vertices = std::move(sub.original);
    return trace;
}

FoldOntoClique folds_onto_clique(const Graph & g, int p, int exhaustive_cap, std::size_t max_states)
{
    if (p < 1)
        throw DomainError("clique size must be positive");
    FoldOntoClique out;
    auto greedy = fold_reduce(g);
    if (greedy.result.order() == p && is_complete(greedy.result)) {
        out.verdict = FoldVerdict::yes;
        out.steps = greedy.steps;
        return out;
    }
    if (clique_number(g) < p) {
        out.verdict = FoldVerdict::no;
        return out;
    }
    if (g.order() > exhaustive_cap || g.order() > 63) {
        out.verdict = FoldVerdict::unknown;
        return out;
    }

    struct Budget
    {
    };

    std::unordered_set<std::uint64_t> dead;
    std::vector<FoldStep> path;
    std::function<bool(VertexSet &, std::uint64_t)> search = [&](VertexSet & alive, std::uint64_t key) -> bool {
        int size = alive.count();
        if (size == p && is_clique(g, alive))
            return true;
        if (size <= p || dead.count(key))
            return false;
        if (dead.size() >= max_states)
            throw Budget{};
        for (int u : alive.to_vector()) {
            int v = dominator_of(g, alive, u);
            if (v == -1)
                continue;
            alive.erase(u);
            path.push_back({u, v});
            if (search(alive, key & ~(std::uint64_t{1} << u)))
                return true;
            path.pop_back();
            alive.insert(u);
        }
        dead.insert(key);
        return false;
    };

    auto alive = VertexSet::full(g.order());
    std::uint64_t key = g.order() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.order()) - 1);
    try {
        if (search(alive, key)) {
            out.verdict = FoldVerdict::yes;
            out.steps = path;
        } else {
            out.verdict = FoldVerdict::no;
        }
    } catch (const Budget &) {
        out.verdict = FoldVerdict::unknown;
    }
    return out;
}

} // namespace nbhd
