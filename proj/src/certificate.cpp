#include "nbhd/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nbhd/errors.hpp"

namespace nbhd {

ExtensionCheck extension_property(const Graph & g, int v, int n)
{
    auto nv = neighborhood(g, v).to_vector();
    int size = std::min(n + 1, static_cast<int>(nv.size()));
    int d = static_cast<int>(nv.size());

    ExtensionCheck out;
    out.holds = true;
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Simplex s;
        VertexSet set(g.order());
        for (int i : pick) {
            s.push_back(nv[i]);
            set.insert(nv[i]);
        }
        auto common = common_neighborhood(g, set);
        common.erase(v);
        if (common.empty()) {
            out.holds = false;
            out.failing_subset = s;
            out.witnesses.clear();
            return out;
        }
        out.witnesses.emplace(std::move(s), common.first());

        int i = size - 1;
        while (i >= 0 && pick[i] == d - size + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return out;
}

namespace {

/// Number of components of N(G - v)[N_G(v)], or -1 if a neighbour of v is missing from it.
int link_components(const Graph & g, int v)
{
    auto nv = neighborhood(g, v);
    if (nv.empty())
        throw DomainError("simply_connected_hypothesis: vertex " + std::to_string(v) + " is isolated");
    auto rest = remove_vertices(g, VertexSet(g.order(), {v}));
    auto x = neighbourhood_complex(rest.graph, rest.original);
    auto sub = induced_subcomplex(x, nv.to_vector());
    if (static_cast<int>(sub.vertices().size()) != nv.count())
        return -1;
    return static_cast<int>(vertex_components(sub).size());
}

} // namespace

bool simply_connected_hypothesis(const Graph & g, int v)
{
    return link_components(g, v) == 1;
}

std::optional<ConnectivityCertificate> certify_connectivity(const Graph & g, const std::vector<int> & order, int k,
                                                           std::string * why)
{
    auto fail = [&](std::string reason) -> std::optional<ConnectivityCertificate> {
        if (why)
            *why = std::move(reason);
        return std::nullopt;
    };
    if (k < 0)
        return fail("negative connectivity level");

    VertexSet removed(g.order());
    for (int v : order) {
        if (v < 0 || v >= g.order())
            return fail("order names vertex " + std::to_string(v) + " outside the graph");
        if (removed.contains(v))
            return fail("order repeats vertex " + std::to_string(v));
        removed.insert(v);
    }

    auto base = remove_vertices(g, removed);
    if (!is_complete(base.graph) || base.graph.order() < k + 3)
        return fail("base graph on " + std::to_string(base.graph.order()) + " vertices is not K_p with p >= " +
                    std::to_string(k + 3));

    ConnectivityCertificate cert{order.empty() ? CertificateKind::complete_graph_base : CertificateKind::extension_chain, k,
                                 {}, base.graph, order};

    VertexSet alive = VertexSet::full(g.order()) - removed;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        alive.insert(*it);
        auto h = extract(g, alive);
        int local = static_cast<int>(std::find(h.original.begin(), h.original.end(), *it) - h.original.begin());

        auto ext = extension_property(h.graph, local, k);
        if (ext.holds) {
            cert.chain.push_back({*it, Hypothesis::extension, true, static_cast<int>(ext.witnesses.size())});
            continue;
        }
        if (k <= 1 && h.graph.degree(local) > 0 && is_connected(h.graph)) {
            int parts = link_components(h.graph, local);
            if (parts == 1) {
                cert.chain.push_back({*it, Hypothesis::simply_connected, true, parts});
                continue;
            }
        }
        return fail("vertex " + g.label(*it) + " fails the extension property for k=" + std::to_string(k) +
                    (k <= 1 ? " and the path-connected link test" : ""));
    }
    if (why)
        why->clear();
    return cert;
}

bool recheck(const ConnectivityCertificate & cert, const Graph & g)
{
    auto again = certify_connectivity(g, cert.removal_order, cert.claimed_connectivity);
    if (!again || again->base_graph != cert.base_graph || again->chain.size() != cert.chain.size())
        return false;
    for (std::size_t i = 0; i < cert.chain.size(); ++i) {
        const auto & a = again->chain[i];
        const auto & b = cert.chain[i];
        if (a.vertex != b.vertex || a.hypothesis != b.hypothesis || a.passed != b.passed || !b.passed)
            return false;
    }
    return true;
}

const char * to_string(CertificateKind kind)
{
    return kind == CertificateKind::complete_graph_base ? "complete-graph-base" : "extension-chain";
}

const char * to_string(Hypothesis h)
{
    return h == Hypothesis::extension ? "extension" : "simply-connected";
}

} // namespace nbhd
