#include "nbhd/connectivity.hpp"

#include <algorithm>
#include <deque>

#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

/// Unit-vertex-capacity flow network: vertex v becomes in(v) = 2v -> out(v) = 2v+1.
class SplitNetwork
{
public:
    struct Arc
    {
        int to;
        int cap;
        int rev;
        bool forward;
    };

    SplitNetwork(const Graph & g, int s, int t, bool skip_st_edge) : arcs_(2 * g.order())
    {
        int inf = g.order() + 1;
        for (int v = 0; v < g.order(); ++v)
            add(in(v), out(v), (v == s || v == t) ? inf : 1);
        for (auto [u, v] : g.edges()) {
            if (skip_st_edge && ((u == s && v == t) || (u == t && v == s)))
                continue;
            add(out(u), in(v), inf);
            add(out(v), in(u), inf);
        }
        for (auto & list : arcs_)
            std::stable_sort(list.begin(), list.end(), [](const Arc & a, const Arc & b) { return a.to < b.to; });
        // Sorting moved arcs; rebuild the reverse indices.
        for (int u = 0; u < static_cast<int>(arcs_.size()); ++u)
            for (int i = 0; i < static_cast<int>(arcs_[u].size()); ++i) {
                auto & a = arcs_[u][i];
                auto & back = arcs_[a.to];
                for (int j = 0; j < static_cast<int>(back.size()); ++j)
                    if (back[j].to == u && back[j].forward != a.forward) {
                        a.rev = j;
                        break;
                    }
            }
    }

    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }

    int max_flow(int source, int sink)
    {
        int flow = 0;
        while (true) {
            std::vector<std::pair<int, int>> parent(arcs_.size(), {-1, -1});
            std::deque<int> queue{source};
            parent[source] = {source, -1};
            while (!queue.empty() && parent[sink].first == -1) {
                int u = queue.front();
                queue.pop_front();
                for (int i = 0; i < static_cast<int>(arcs_[u].size()); ++i) {
                    const auto & a = arcs_[u][i];
                    if (a.cap > 0 && parent[a.to].first == -1) {
                        parent[a.to] = {u, i};
                        queue.push_back(a.to);
                    }
                }
            }
            if (parent[sink].first == -1)
                return flow;
            for (int v = sink; v != source;) {
                auto [u, i] = parent[v];
                auto & a = arcs_[u][i];
                a.cap -= 1;
                arcs_[v][a.rev].cap += 1;
                v = u;
            }
            ++flow;
        }
    }

    std::vector<char> reachable(int source) const
    {
        std::vector<char> seen(arcs_.size(), 0);
        std::vector<int> stack{source};
        seen[source] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto & a : arcs_[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
        return seen;
    }

    /// Walks one unit of flow from `source` to `sink`, consuming it.
    std::vector<int> take_path(int source, int sink)
    {
        std::vector<int> nodes{source};
        int u = source;
        while (u != sink) {
            bool moved = false;
            for (auto & a : arcs_[u]) {
                if (!a.forward)
                    continue;
                auto & back = arcs_[a.to][a.rev];
                if (back.cap > 0) {
                    back.cap -= 1;
                    a.cap += 1;
                    u = a.to;
                    nodes.push_back(u);
                    moved = true;
                    break;
                }
            }
            if (!moved)
                break;
        }
        return nodes;
    }

private:
    void add(int u, int v, int cap)
    {
        arcs_[u].push_back({v, cap, 0, true});
        arcs_[v].push_back({u, 0, 0, false});
    }

    std::vector<std::vector<Arc>> arcs_;
};

void check_vertex(const Graph & g, int v)
{
    if (v < 0 || v >= g.order())
        throw DomainError("vertex " + std::to_string(v) + " out of range");
}

bool disconnects(const Graph & g, const VertexSet & s)
{
    return components(g, VertexSet::full(g.order()) - s).size() >= 2;
}

} // namespace

LocalCut local_vertex_cut(const Graph & g, int s, int t)
{
    check_vertex(g, s);
    check_vertex(g, t);
    if (s == t || g.adjacent(s, t))
        throw DomainError("local vertex cut needs distinct non-adjacent vertices");
    SplitNetwork net(g, s, t, false);
    LocalCut out;
    out.value = net.max_flow(SplitNetwork::out(s), SplitNetwork::in(t));
    auto seen = net.reachable(SplitNetwork::out(s));
    out.cut = VertexSet(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (v != s && v != t && seen[SplitNetwork::in(v)] && !seen[SplitNetwork::out(v)])
            out.cut.insert(v);
    return out;
}

CutReport vertex_connectivity(const Graph & g, int enumerate_limit)
{
    CutReport report;
    int n = g.order();
    if (n == 0)
        throw DomainError("vertex connectivity of the empty graph");
    if (is_complete(g)) {
        report.kappa = n - 1;
        if (enumerate_limit > 0)
            report.all_min_cuts = std::vector<VertexSet>{};
        return report;
    }
    if (!is_connected(g)) {
        report.kappa = 0;
        report.witness_cut = VertexSet(n);
    } else {
        int v = 0;
        for (int u = 1; u < n; ++u)
            if (g.degree(u) < g.degree(v))
                v = u;
        std::optional<LocalCut> best;
        auto consider = [&](int a, int b) {
            auto cut = local_vertex_cut(g, a, b);
            if (!best || cut.value < best->value)
                best = std::move(cut);
        };
        for (int w = 0; w < n; ++w)
            if (w != v && !g.adjacent(v, w))
                consider(v, w);
        auto nb = g.adjacency(v).to_vector();
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (!g.adjacent(nb[a], nb[b]))
                    consider(nb[a], nb[b]);
        report.kappa = best->value;
        report.witness_cut = best->cut;
    }
    if (enumerate_limit > 0) {
        auto cuts = min_vertex_cuts(g, enumerate_limit, std::max(default_min_cut_cap, n));
        report.all_min_cuts = std::move(cuts.cuts);
        report.all_min_cuts_truncated = cuts.truncated;
    }
    return report;
}

std::vector<std::vector<int>> disjoint_paths(const Graph & g, int s, int t)
{
    check_vertex(g, s);
    check_vertex(g, t);
    if (s == t)
        throw DomainError("disjoint paths need s != t");
    std::vector<std::vector<int>> paths;
    bool direct = g.adjacent(s, t);
    if (direct)
        paths.push_back({s, t});
    SplitNetwork net(g, s, t, direct);
    int source = SplitNetwork::out(s), sink = SplitNetwork::in(t);
    int flow = net.max_flow(source, sink);
    std::vector<std::vector<int>> routed;
    for (int i = 0; i < flow; ++i) {
        auto nodes = net.take_path(source, sink);
        std::vector<int> path{s};
        for (int node : nodes)
            if (node % 2 == 1 && node / 2 != s)
                path.push_back(node / 2);
        path.push_back(t);
        routed.push_back(std::move(path));
    }
    std::sort(routed.begin(), routed.end());
    paths.insert(paths.end(), routed.begin(), routed.end());
    return paths;
}

MinCuts min_vertex_cuts(const Graph & g, int limit, int cap)
{
    int n = g.order();
    if (is_complete(g))
        throw DomainError("no vertex cut exists in a complete graph");
    if (n > cap)
        throw TooLarge("min_vertex_cuts: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
    int k = vertex_connectivity(g).kappa;
    MinCuts out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i)
        pick[i] = i;
    while (true) {
        VertexSet s(n, pick);
        if (disconnects(g, s)) {
            if (static_cast<int>(out.cuts.size()) == limit) {
                out.truncated = true;
                break;
            }
            out.cuts.push_back(std::move(s));
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return out;
}

SComponents s_components(const Graph & g, const VertexSet & s)
{
    if (s.universe() != g.order())
        throw DomainError("vertex set universe does not match graph order");
    auto rest = VertexSet::full(g.order()) - s;
    if (rest.empty())
        throw DomainError("S-components need S to be a proper subset of V(G)");
    SComponents out{s, {}};
    for (auto & c : components(g, rest))
        out.components.push_back(c | s);
    return out;
}

} // namespace nbhd
