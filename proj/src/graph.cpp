#include "nbhd/graph.hpp"

#include <algorithm>

#include "nbhd/errors.hpp"

namespace nbhd {

Graph::Graph(int n)
{
    if (n < 0)
        throw DomainError("negative vertex count");
    adj_.assign(n, VertexSet(n));
}

Graph::Graph(int n, const std::vector<Edge> & edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw DomainError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" +
                          std::to_string(order()));
    if (u == v)
        throw DomainError("self-loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v))
        return;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++edge_count_;
}

bool Graph::adjacent(int u, int v) const
{
    return u >= 0 && u < order() && adj_[u].contains(v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        adj_[u].for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

void Graph::set_label(int v, std::string label)
{
    if (v < 0 || v >= order())
        throw DomainError("label for out-of-range vertex " + std::to_string(v));
    labels_[v] = std::move(label);
}

std::string Graph::label(int v) const
{
    auto it = labels_.find(v);
    return it == labels_.end() ? std::to_string(v) : it->second;
}

VertexSet neighborhood(const Graph & g, int v)
{
    if (v < 0 || v >= g.order())
        throw DomainError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.order()));
    return g.adjacency(v);
}

VertexSet common_neighborhood(const Graph & g, const VertexSet & a)
{
    if (a.universe() != g.order())
        throw DomainError("vertex set universe does not match graph order");
    auto result = VertexSet::full(g.order());
    a.for_each([&](int x) { result &= g.adjacency(x); });
    return result;
}

Graph complement(const Graph & g)
{
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                h.add_edge(u, v);
    for (const auto & [v, l] : g.labels())
        h.set_label(v, l);
    return h;
}

Subgraph extract(const Graph & g, const VertexSet & s)
{
    if (s.universe() != g.order())
        throw DomainError("vertex set universe does not match graph order");
    Subgraph out;
    out.original = s.to_vector();
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < out.original.size(); ++i)
        index[out.original[i]] = static_cast<int>(i);
    out.graph = Graph(static_cast<int>(out.original.size()));
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        int u = out.original[i];
        g.adjacency(u).for_each([&](int w) {
            if (index[w] > static_cast<int>(i))
                out.graph.add_edge(static_cast<int>(i), index[w]);
        });
    }
    return out;
}

Graph induced_subgraph(const Graph & g, const VertexSet & s)
{
    auto sub = extract(g, s);
    for (std::size_t i = 0; i < sub.original.size(); ++i)
        sub.graph.set_label(static_cast<int>(i), g.label(sub.original[i]));
    return std::move(sub.graph);
}

Subgraph remove_vertices(const Graph & g, const VertexSet & s)
{
    return extract(g, VertexSet::full(g.order()) - s);
}

bool is_complete(const Graph & g)
{
    auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_clique(const Graph & g, const VertexSet & s)
{
    bool ok = true;
    s.for_each([&](int v) {
        auto rest = s;
        rest.erase(v);
        if (!rest.is_subset_of(g.adjacency(v)))
            ok = false;
    });
    return ok;
}

int min_degree(const Graph & g)
{
    int best = g.order() > 0 ? g.order() : 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

std::vector<VertexSet> components(const Graph & g, const VertexSet & alive)
{
    std::vector<VertexSet> out;
    auto unseen = alive;
    while (!unseen.empty()) {
        int root = unseen.first();
        VertexSet comp(g.order());
        comp.insert(root);
        unseen.erase(root);
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            (g.adjacency(u) & unseen).for_each([&](int w) {
                unseen.erase(w);
                comp.insert(w);
                stack.push_back(w);
            });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> components(const Graph & g)
{
    return components(g, VertexSet::full(g.order()));
}

bool is_connected(const Graph & g)
{
    return components(g).size() <= 1;
}

} // namespace nbhd
