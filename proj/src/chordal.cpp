#include "nbhd/chordal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "nbhd/errors.hpp"

namespace nbhd {

std::vector<int> lex_bfs(const Graph & g)
{
    int n = g.order();
    std::vector<std::vector<int>> label(n);
    std::vector<char> visited(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best == -1 || label[v] > label[best]))
                best = v;
        visited[best] = 1;
        order.push_back(best);
        g.adjacency(best).for_each([&](int w) {
            if (!visited[w])
                label[w].push_back(n - step);
        });
    }
    return order;
}

bool is_perfect_elimination_ordering(const Graph & g, const std::vector<int> & order)
{
    int n = g.order();
    if (static_cast<int>(order.size()) != n)
        return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1)
            return false;
        pos[order[i]] = i;
    }
    for (int v : order) {
        VertexSet later(n);
        g.adjacency(v).for_each([&](int w) {
            if (pos[w] > pos[v])
                later.insert(w);
        });
        if (!is_clique(g, later))
            return false;
    }
    return true;
}

namespace {

// Induced cycle v, x, ..., y through a shortest x-y path avoiding N[v] \ {x, y}.
std::vector<int> induced_cycle_through(const Graph & g, int v, int x, int y)
{
    int n = g.order();
    auto blocked = g.adjacency(v);
    blocked.insert(v);
    blocked.erase(x);
    blocked.erase(y);
    std::vector<int> parent(n, -2);
    std::deque<int> queue{x};
    parent[x] = -1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == y)
            break;
        g.adjacency(u).for_each([&](int w) {
            if (parent[w] == -2 && !blocked.contains(w)) {
                parent[w] = u;
                queue.push_back(w);
            }
        });
    }
    if (parent[y] == -2)
        return {};
    std::vector<int> path;
    for (int u = y; u != -1; u = parent[u])
        path.push_back(u);
    std::reverse(path.begin(), path.end());
    std::vector<int> cycle{v};
    cycle.insert(cycle.end(), path.begin(), path.end());
    return cycle;
}

std::vector<int> find_chordless_cycle(const Graph & g)
{
    for (int v = 0; v < g.order(); ++v) {
        auto nb = g.adjacency(v).to_vector();
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.adjacent(nb[a], nb[b]))
                    continue;
                auto cycle = induced_cycle_through(g, v, nb[a], nb[b]);
                if (!cycle.empty())
                    return cycle;
            }
    }
    return {};
}

} // namespace

ChordalityResult is_chordal(const Graph & g)
{
    ChordalityResult result;
    auto order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    if (is_perfect_elimination_ordering(g, order)) {
        result.chordal = true;
        result.peo = std::move(order);
        return result;
    }
    result.induced_cycle = find_chordless_cycle(g);
    return result;
}

std::vector<int> simplicial_vertices(const Graph & g)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (is_clique(g, g.adjacency(v)))
            out.push_back(v);
    return out;
}

std::vector<VertexSet> maximal_cliques(const Graph & g)
{
    int n = g.order();
    std::vector<VertexSet> out;
    std::function<void(VertexSet, VertexSet, VertexSet)> expand = [&](VertexSet r, VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        // Pivot: vertex of P ∪ X with most neighbours in P.
        int pivot = -1, best = -1;
        (p | x).for_each([&](int u) {
            int c = (p & g.adjacency(u)).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        auto candidates = p - g.adjacency(pivot);
        candidates.for_each([&](int v) {
            auto r2 = r;
            r2.insert(v);
            expand(r2, p & g.adjacency(v), x & g.adjacency(v));
            p.erase(v);
            x.insert(v);
        });
    };
    if (n > 0)
        expand(VertexSet(n), VertexSet::full(n), VertexSet(n));
    std::sort(out.begin(), out.end(),
              [](const VertexSet & a, const VertexSet & b) { return a.to_vector() < b.to_vector(); });
    return out;
}

int clique_number(const Graph & g)
{
    int best = 0;
    for (const auto & c : maximal_cliques(g))
        best = std::max(best, c.count());
    return best;
}

SimplicialDecomposition simplicial_decomposition(const Graph & g, const VertexSet & start)
{
    auto chordality = is_chordal(g);
    if (!chordality.chordal) {
        std::string cycle;
        for (int v : chordality.induced_cycle)
            cycle += (cycle.empty() ? "" : "-") + std::to_string(v);
        throw DomainError("simplicial decomposition needs a chordal graph; induced cycle " + cycle);
    }
    if (!is_connected(g))
        throw DomainError("simplicial decomposition needs a connected graph");
    auto cliques = maximal_cliques(g);
    auto root_it = std::find(cliques.begin(), cliques.end(), start);
    if (root_it == cliques.end())
        throw DomainError("start " + start.to_string() + " is not a maximal clique");
    int k = static_cast<int>(cliques.size());
    int root = static_cast<int>(root_it - cliques.begin());

    // Prim's algorithm for a maximum-weight spanning tree of the clique graph.
    std::vector<int> parent(k, -1), weight(k, -1);
    std::vector<char> in_tree(k, 0);
    weight[root] = 0;
    for (int step = 0; step < k; ++step) {
        int u = -1;
        for (int i = 0; i < k; ++i)
            if (!in_tree[i] && weight[i] >= 0 && (u == -1 || weight[i] > weight[u]))
                u = i;
        if (u == -1)
            throw DomainError("clique graph is disconnected");
        in_tree[u] = 1;
        for (int i = 0; i < k; ++i) {
            if (in_tree[i])
                continue;
            int w = (cliques[u] & cliques[i]).count();
            if (w > 0 && w > weight[i]) {
                weight[i] = w;
                parent[i] = u;
            }
        }
    }

    std::vector<std::vector<int>> children(k);
    for (int i = 0; i < k; ++i)
        if (parent[i] != -1)
            children[parent[i]].push_back(i);

    SimplicialDecomposition d;
    VertexSet covered(g.order());
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (!d.cliques.empty())
            d.intersection_sizes.push_back((cliques[u] & covered).count());
        covered |= cliques[u];
        d.cliques.push_back(cliques[u]);
        for (int c : children[u])
            queue.push_back(c);
    }
    return d;
}

std::string check_decomposition(const Graph & g, const SimplicialDecomposition & d)
{
    auto cliques = maximal_cliques(g);
    if (d.cliques.size() != cliques.size())
        return "decomposition has " + std::to_string(d.cliques.size()) + " cliques, graph has " +
               std::to_string(cliques.size()) + " maximal cliques";
    if (d.intersection_sizes.size() + 1 != d.cliques.size())
        return "intersection size list has the wrong length";
    std::vector<char> used(cliques.size(), 0);
    VertexSet covered(g.order());
    for (std::size_t j = 0; j < d.cliques.size(); ++j) {
        const auto & c = d.cliques[j];
        auto it = std::find(cliques.begin(), cliques.end(), c);
        if (it == cliques.end())
            return "entry " + std::to_string(j) + " is not a maximal clique";
        auto idx = static_cast<std::size_t>(it - cliques.begin());
        if (used[idx])
            return "maximal clique listed twice";
        used[idx] = 1;
        if (j > 0) {
            auto meet = c & covered;
            if (meet.count() != d.intersection_sizes[j - 1])
                return "intersection size mismatch at entry " + std::to_string(j);
            if (!is_clique(g, meet))
                return "intersection at entry " + std::to_string(j) + " is not a clique";
            bool inside_one = false;
            for (std::size_t i = 0; i < j; ++i)
                inside_one = inside_one || meet.is_subset_of(d.cliques[i]);
            if (!inside_one)
                return "intersection at entry " + std::to_string(j) + " is not contained in an earlier clique";
        }
        covered |= c;
        if (components(g, covered).size() > 1)
            return "prefix union through entry " + std::to_string(j) + " is disconnected";
    }
    return {};
}

std::vector<int> find_long_induced_cycle(const Graph & g, int min_length)
{
    int n = g.order();
    std::vector<int> path;
    std::vector<int> found;
    VertexSet on_path(n);

    std::function<bool(int)> grow = [&](int s) -> bool {
        int last = path.back();
        bool hit = false;
        g.adjacency(last).for_each([&](int w) {
            if (hit || w <= s || on_path.contains(w))
                return;
            // w may touch only `last` and possibly the start among path vertices.
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.adjacent(w, path[i]))
                    return;
            if (path.size() >= 2 && g.adjacent(w, s)) {
                if (static_cast<int>(path.size()) + 1 >= min_length) {
                    found = path;
                    found.push_back(w);
                    hit = true;
                }
                return;
            }
            if (path.size() == 1 || !g.adjacent(w, s)) {
                path.push_back(w);
                on_path.insert(w);
                if (grow(s))
                    hit = true;
                on_path.erase(w);
                path.pop_back();
            }
        });
        return hit;
    };

    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path = VertexSet(n);
        on_path.insert(s);
        if (grow(s))
            return found;
    }
    return {};
}

WeakTriangulationResult is_weakly_triangulated(const Graph & g, int cap)
{
    if (g.order() > cap)
        throw TooLarge("weak triangulation check: " + std::to_string(g.order()) + " vertices exceeds cap " +
                       std::to_string(cap));
    WeakTriangulationResult r;
    r.witness = find_long_induced_cycle(g, 5);
    if (!r.witness.empty()) {
        r.weakly_triangulated = false;
        return r;
    }
    r.witness = find_long_induced_cycle(complement(g), 5);
    if (!r.witness.empty()) {
        r.weakly_triangulated = false;
        r.witness_in_complement = true;
    }
    return r;
}

bool hayward_property(const Graph & g, const VertexSet & s)
{
    auto rest = VertexSet::full(g.order()) - s;
    auto comps = components(g, rest);
    if (comps.size() < 2)
        throw DomainError(s.to_string() + " is not a vertex cut");
    auto full_view = common_neighborhood(g, s);
    for (const auto & c : comps)
        if (!c.intersects(full_view))
            return false;
    return true;
}

} // namespace nbhd
