#include "nbhd/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace nbhd {

namespace {

std::vector<Simplex> faces(const SimplicialComplex & x, int k)
{
    if (k == -1)
        return x.is_void() ? std::vector<Simplex>{} : std::vector<Simplex>{Simplex{}};
    return faces_of_dimension(x, k);
}

SparseMatrix assemble(const std::vector<Simplex> & rows, const std::vector<Simplex> & cols)
{
    SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    Simplex face;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto & s = cols[j];
        auto & col = m.columns[j];
        for (std::size_t i = 0; i < s.size(); ++i) {
            face.assign(s.begin(), s.end());
            face.erase(face.begin() + static_cast<long>(i));
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            col.emplace_back(static_cast<int>(it - rows.begin()), i % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
    }
    return m;
}

} // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex & x, int k)
{
    BoundaryMatrix b;
    b.dim = k;
    b.rows = faces(x, k - 1);
    b.cols = faces(x, k);
    b.matrix = assemble(b.rows, b.cols);
    return b;
}

HomologyReport reduced_homology(const SimplicialComplex & x, int max_dim, HomologyOptions options)
{
    if (max_dim < 0)
        throw std::invalid_argument("reduced_homology: max_dim must be non-negative");

    HomologyReport r;
    r.max_dim = max_dim;
    r.vertex_count = static_cast<int>(x.vertices().size());
    r.integral = options.integral;
    r.cross_checked = options.cross_check || !options.integral;

    std::vector<std::vector<Simplex>> by_dim;
    for (int k = -1; k <= max_dim + 1; ++k) {
        by_dim.push_back(faces(x, k));
        r.face_counts.push_back(static_cast<long long>(by_dim.back().size()));
    }

    // rank and invariant factors of ∂_k, k = 0 .. max_dim + 1
    std::vector<std::vector<mpz_class>> factors(max_dim + 2);
    for (int k = 0; k <= max_dim + 1; ++k) {
        const auto & rows = by_dim[k];
        const auto & cols = by_dim[k + 1];
        if (rows.empty() || cols.empty()) {
            r.boundary_ranks.push_back(0);
            continue;
        }
        auto m = assemble(rows, cols);
        int rank;
        if (options.integral) {
            auto snf = smith_normal_form(m);
            rank = snf.rank;
            factors[k] = std::move(snf.invariant_factors);
            if (options.cross_check && rational_rank(m) != rank)
                r.ranks_agree = false;
        } else {
            rank = rational_rank(m);
        }
        r.boundary_ranks.push_back(rank);
    }

    for (int k = 0; k <= max_dim; ++k) {
        HomologyGroup g;
        g.dim = k;
        g.betti = static_cast<int>(r.face_counts[k + 1] - r.boundary_ranks[k] - r.boundary_ranks[k + 1]);
        for (const auto & d : factors[k + 1])
            if (d > 1)
                g.torsion.push_back(d);
        r.groups.push_back(std::move(g));
    }
    return r;
}

HomologicalConnectivity homological_connectivity(const HomologyReport & r)
{
    if (r.vertex_count == 0)
        return {-2, false};
    for (const auto & g : r.groups)
        if (!g.trivial())
            return {g.dim - 1, false};
    return {r.max_dim, true};
}

bool vanishes_through(const HomologyReport & r, int k)
{
    for (int i = 0; i <= k; ++i)
        if (!r.group(i).trivial())
            return false;
    return true;
}

bool groups_match(const HomologyReport & a, int lo, int hi, const HomologyReport & b, int shift)
{
    for (int k = lo; k <= hi; ++k) {
        const auto & x = a.group(k);
        const auto & y = b.group(k + shift);
        if (x.betti != y.betti || x.torsion != y.torsion)
            return false;
    }
    return true;
}

std::string describe(const HomologyGroup & g)
{
    if (g.trivial())
        return "0";
    std::string out;
    if (g.betti > 0)
        out = g.betti == 1 ? "Z" : "Z^" + std::to_string(g.betti);
    for (const auto & t : g.torsion)
        out += (out.empty() ? "" : "+") + ("Z/" + t.get_str());
    return out;
}

std::string homology_to_json(const HomologyReport & r, const std::string & source_id)
{
    nlohmann::ordered_json j;
    j["complex"] = source_id;
    auto groups = nlohmann::ordered_json::array();
    for (const auto & g : r.groups) {
        nlohmann::ordered_json entry;
        entry["dim"] = g.dim;
        entry["betti"] = g.betti;
        auto torsion = nlohmann::ordered_json::array();
        for (const auto & t : g.torsion) {
            if (t.fits_slong_p())
                torsion.push_back(t.get_si());
            else
                torsion.push_back(t.get_str());
        }
        entry["torsion"] = std::move(torsion);
        groups.push_back(std::move(entry));
    }
    j["groups"] = std::move(groups);
    j["max_dim"] = r.max_dim;
    return j.dump();
}

} // namespace nbhd
