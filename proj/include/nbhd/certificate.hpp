#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nbhd/complex.hpp"
#include "nbhd/graph.hpp"

namespace nbhd {

struct ExtensionCheck
{
    bool holds = false;
    /// S -> lowest common neighbour v_S != v, for every checked S.
    std::map<Simplex, int> witnesses;
    /// First subset without a witness when !holds.
    Simplex failing_subset;
};

/// Every S ⊆ N(v) with |S| ≤ n+1 has a common neighbour other than v.
/// Only subsets of size min(n+1, deg v) are enumerated: a witness for S
/// is a witness for each of its subsets.
ExtensionCheck extension_property(const Graph & g, int v, int n);

/// N(G - v)[N_G(v)] contains every neighbour of v and is path connected.
/// Throws DomainError when v is isolated.
bool simply_connected_hypothesis(const Graph & g, int v);

enum class CertificateKind
{
    complete_graph_base,
    extension_chain,
};

enum class Hypothesis
{
    extension,
    simply_connected,
};

struct ChainStep
{
    int vertex;
    Hypothesis hypothesis;
    bool passed;
    /// Number of subsets checked (extension) or link components (simply_connected).
    int detail;
};

struct ConnectivityCertificate
{
    CertificateKind kind;
    int claimed_connectivity;
    /// Steps in re-addition order (reverse of the removal order).
    std::vector<ChainStep> chain;
    Graph base_graph;
    std::vector<int> removal_order;
};

/// Removes `order` from g, requires the remainder to be K_p with p ≥ k + 3,
/// then re-adds the vertices in reverse, each passing extension_property(·, ·, k).
/// For k ≤ 1 a step may pass on simply_connected_hypothesis instead (the
/// intermediate graph must then be connected). Absent on any failure; the
/// reason is written to `why` when given.
std::optional<ConnectivityCertificate> certify_connectivity(const Graph & g, const std::vector<int> & order, int k,
                                                           std::string * why = nullptr);

/// Re-runs every recorded check against g.
bool recheck(const ConnectivityCertificate & cert, const Graph & g);

const char * to_string(CertificateKind kind);
const char * to_string(Hypothesis h);

} // namespace nbhd
