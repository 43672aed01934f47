#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "nbhd/complex.hpp"
#include "nbhd/smith.hpp"

namespace nbhd {

/// ∂_k : C_k -> C_{k-1} of the augmented chain complex (∂_0 sends every
/// vertex to the empty face). Rows and columns are faces in lexicographic order.
struct BoundaryMatrix
{
    int dim = 0;
    std::vector<Simplex> rows;
    std::vector<Simplex> cols;
    SparseMatrix matrix;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex & x, int k);

struct HomologyGroup
{
    int dim = 0;
    int betti = 0;
    std::vector<mpz_class> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup &, const HomologyGroup &) = default;
};

struct HomologyOptions
{
    /// Full Smith normal form (torsion). Otherwise Betti numbers from ranks mod p only.
    bool integral = true;
    /// Also compute ranks mod p and compare with the SNF ranks.
    bool cross_check = true;
};

struct HomologyReport
{
    std::vector<HomologyGroup> groups;
    int max_dim = 0;
    int vertex_count = 0;
    bool integral = true;
    /// face_counts[k + 1] = number of k-faces, k = -1 .. max_dim + 1.
    std::vector<long long> face_counts;
    /// rank ∂_k for k = 0 .. max_dim + 1, from the primary route.
    std::vector<int> boundary_ranks;
    bool cross_checked = false;
    /// SNF ranks agree with the mod-p ranks (meaningful when cross_checked).
    bool ranks_agree = true;

    const HomologyGroup & group(int k) const { return groups.at(k); }
};

/// Reduced integral homology H̃_k(X), 0 ≤ k ≤ max_dim.
HomologyReport reduced_homology(const SimplicialComplex & x, int max_dim, HomologyOptions options = {});

struct HomologicalConnectivity
{
    int value = 0;
    /// true: no nonzero group up to max_dim, so the connectivity is at least `value`.
    bool at_least = false;
};

/// (first k with H̃_k ≠ 0) - 1; -2 when the complex has no vertices.
HomologicalConnectivity homological_connectivity(const HomologyReport & r);

/// H̃_i = 0 for every 0 ≤ i ≤ k (k ≤ max_dim).
bool vanishes_through(const HomologyReport & r, int k);

/// Groups in dimensions lo..hi of a equal groups lo+shift..hi+shift of b.
bool groups_match(const HomologyReport & a, int lo, int hi, const HomologyReport & b, int shift = 0);

std::string describe(const HomologyGroup & g);
std::string homology_to_json(const HomologyReport & r, const std::string & source_id);

} // namespace nbhd
