#include "nbhd/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

#include "nbhd/errors.hpp"

namespace nbhd {

Graph complete_graph(int p)
{
    if (p < 1)
        throw DomainError("complete graph needs p >= 1");
    Graph g(p);
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int k)
{
    if (k < 3)
        throw DomainError("cycle graph needs k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        g.add_edge(i, (i + 1) % k);
    return g;
}

Graph path_graph(int k)
{
    if (k < 1)
        throw DomainError("path graph needs at least one vertex");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves)
{
    if (leaves < 1)
        throw DomainError("star graph needs at least one leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

namespace {

template <class Adjacent>
Graph board_graph(int m, int n, Adjacent adjacent)
{
    if (m < 1 || n < 1)
        throw DomainError("board dimensions must be positive");
    Graph g(m * n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            g.set_label(square_index(n, i, j), "(" + std::to_string(i) + "," + std::to_string(j) + ")");
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= n; ++l) {
                    int a = square_index(n, i, j), b = square_index(n, k, l);
                    if (a < b && adjacent(i, j, k, l))
                        g.add_edge(a, b);
                }
        }
    return g;
}

} // namespace

Graph queen_graph(int m, int n)
{
    return board_graph(m, n, [](int i, int j, int k, int l) {
        return i == k || j == l || std::abs(i - k) == std::abs(j - l);
    });
}

Graph king_graph(int m, int n)
{
    return board_graph(m, n, [](int i, int j, int k, int l) {
        return std::max(std::abs(i - k), std::abs(j - l)) == 1;
    });
}

Graph mycielskian(const Graph & g)
{
    int n = g.order();
    if (n < 1)
        throw DomainError("Mycielskian needs at least one vertex");
    Graph m(2 * n + 1);
    for (auto [a, b] : g.edges()) {
        m.add_edge(a, b);
        m.add_edge(n + a, b);
        m.add_edge(n + b, a);
    }
    for (int j = 0; j < n; ++j)
        m.add_edge(2 * n, n + j);
    return m;
}

RandomChordal random_chordal(const RandomChordalParams & p, std::uint64_t seed)
{
    if (p.num_cliques < 1)
        throw DomainError("random chordal: need at least one clique");
    if (p.min_clique_size < 1 || p.min_clique_size > p.max_clique_size)
        throw DomainError("random chordal: invalid clique size range");
    if (p.overlap_min < 0 || p.overlap_min >= p.min_clique_size)
        throw DomainError("random chordal: overlap_min must lie in [0, min clique size)");

    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    std::vector<std::vector<int>> cliques;
    std::vector<int> sizes;
    int n = 0;
    for (int j = 0; j < p.num_cliques; ++j) {
        int s = uniform(p.min_clique_size, p.max_clique_size);
        std::vector<int> clique;
        int shared = 0;
        if (j > 0) {
            const auto & base = cliques[uniform(0, j - 1)];
            int hi = std::min(s - 1, static_cast<int>(base.size()) - 1);
            shared = uniform(p.overlap_min, hi);
            std::vector<int> pool = base;
            std::shuffle(pool.begin(), pool.end(), rng);
            clique.assign(pool.begin(), pool.begin() + shared);
        }
        for (int i = shared; i < s; ++i)
            clique.push_back(n++);
        std::sort(clique.begin(), clique.end());
        cliques.push_back(std::move(clique));
        sizes.push_back(shared);
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    RandomChordal out;
    out.graph = Graph(n);
    for (const auto & c : cliques) {
        VertexSet members(n);
        for (int v : c)
            members.insert(perm[v]);
        auto vs = members.to_vector();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                out.graph.add_edge(vs[a], vs[b]);
        out.decomposition.cliques.push_back(std::move(members));
    }
    out.decomposition.intersection_sizes.assign(sizes.begin() + 1, sizes.end());
    return out;
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

GluedGraph glue(const Graph & g1, const Graph & g2, const std::vector<std::pair<int, int>> & pairs)
{
    GluedGraph out;
    out.first.resize(g1.order());
    std::iota(out.first.begin(), out.first.end(), 0);
    out.second.assign(g2.order(), -1);
    std::vector<char> used(g1.order(), 0);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= g1.order() || b < 0 || b >= g2.order())
            throw DomainError("glue pair out of range");
        if (used[a] || out.second[b] != -1)
            throw DomainError("glue pairs must be injective");
        used[a] = 1;
        out.second[b] = a;
    }
    int n = g1.order();
    for (auto & idx : out.second)
        if (idx == -1)
            idx = n++;
    out.graph = Graph(n);
    for (auto [u, v] : g1.edges())
        out.graph.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        out.graph.add_edge(out.second[u], out.second[v]);
    return out;
}

} // namespace nbhd
