#pragma once

#include <string>
#include <vector>

#include "nbhd/graph.hpp"

namespace nbhd {

/// Sorted, duplicate-free vertex list.
using Simplex = std::vector<int>;

/// Finite abstract simplicial complex stored by its facets.
///
/// Facets form an antichain under inclusion and are kept sorted. Two empty
/// cases are distinguished: the void complex (no faces at all) and {∅}
/// (a single empty facet, e.g. the link of a facet).
class SimplicialComplex
{
public:
    SimplicialComplex() = default;
    /// Normalizes: sorts each face, drops duplicates and non-maximal faces.
    explicit SimplicialComplex(std::vector<Simplex> faces);

    const std::vector<Simplex> & facets() const noexcept { return facets_; }
    const std::vector<int> & vertices() const noexcept { return vertices_; }

    /// No faces at all (not even ∅).
    bool is_void() const noexcept { return facets_.empty(); }
    int dimension() const;

    friend bool operator==(const SimplicialComplex &, const SimplicialComplex &) = default;

private:
    std::vector<Simplex> facets_;
    std::vector<int> vertices_;
};

/// Facets are the inclusion-maximal non-empty neighbourhoods N_G(v).
/// An edgeless graph with vertices gives {∅}; the graph with no vertices gives the void complex.
SimplicialComplex neighbourhood_complex(const Graph & g);

/// Same complex with vertex i of g renamed to names[i].
SimplicialComplex neighbourhood_complex(const Graph & g, const std::vector<int> & names);

bool has_face(const SimplicialComplex & x, const Simplex & sigma);

/// lk(η) = {σ : σ ∪ η ∈ X, σ ∩ η = ∅}. Throws DomainError if η ∉ X.
SimplicialComplex link(const SimplicialComplex & x, const Simplex & eta);

/// st(η) = {σ : σ ∪ η ∈ X}. Throws DomainError if η ∉ X.
SimplicialComplex star(const SimplicialComplex & x, const Simplex & eta);

/// X[S]: faces of X contained in S.
SimplicialComplex induced_subcomplex(const SimplicialComplex & x, const Simplex & s);

/// Complex on {0..family.size()-1}; σ is a face iff the indexed sets meet.
SimplicialComplex nerve(const std::vector<Simplex> & family);

/// Join with two fresh apexes (max vertex + 1, + 2). Throws DomainError on the void complex.
SimplicialComplex suspension(const SimplicialComplex & x);

/// Every (k+1)-subset of `ground` is a face.
bool has_full_skeleton(const SimplicialComplex & x, const Simplex & ground, int k);

/// Connected components of the 1-skeleton, each a sorted vertex list.
std::vector<Simplex> vertex_components(const SimplicialComplex & x);
bool is_path_connected(const SimplicialComplex & x);

/// All faces of dimension k (k + 1 vertices), sorted lexicographically.
std::vector<Simplex> faces_of_dimension(const SimplicialComplex & x, int k);

/// Canonical JSON: {"facets": [[...], ...]}.
std::string complex_to_json(const SimplicialComplex & x);
/// Throws ParseError on malformed input.
SimplicialComplex complex_from_json(const std::string & text);

} // namespace nbhd
