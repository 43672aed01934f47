#include "nbhd/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include <json.hpp>

#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

bool contains_all(const Simplex & big, const Simplex & small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Simplex intersect(const Simplex & a, const Simplex & b)
{
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex difference(const Simplex & a, const Simplex & b)
{
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex normalized(Simplex s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

void require_face(const SimplicialComplex & x, const Simplex & eta, const char * op)
{
    if (!has_face(x, eta))
        throw DomainError(std::string(op) + ": simplex is not a face of the complex");
}

/// Calls f on every k-subset of `pool` (sorted), in lexicographic order.
template <class F>
void for_each_subset(const Simplex & pool, int k, F && f)
{
    int n = static_cast<int>(pool.size());
    if (k < 0 || k > n)
        return;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    Simplex s(k);
    while (true) {
        for (int i = 0; i < k; ++i)
            s[i] = pool[pick[i]];
        f(s);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

} // namespace

SimplicialComplex::SimplicialComplex(std::vector<Simplex> faces)
{
    for (auto & f : faces)
        f = normalized(std::move(f));
    std::sort(faces.begin(), faces.end(), [](const Simplex & a, const Simplex & b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto & f : faces) {
        bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const Simplex & g) { return contains_all(g, f); });
        if (!covered)
            facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());
    for (const auto & f : facets_)
        vertices_.insert(vertices_.end(), f.begin(), f.end());
    vertices_ = normalized(std::move(vertices_));
}

int SimplicialComplex::dimension() const
{
    int d = -1;
    for (const auto & f : facets_)
        d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

SimplicialComplex neighbourhood_complex(const Graph & g)
{
    std::vector<int> names(g.order());
    std::iota(names.begin(), names.end(), 0);
    return neighbourhood_complex(g, names);
}

SimplicialComplex neighbourhood_complex(const Graph & g, const std::vector<int> & names)
{
    std::vector<Simplex> faces;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            continue;
        Simplex s;
        g.adjacency(v).for_each([&](int w) { s.push_back(names[w]); });
        faces.push_back(std::move(s));
    }
    // N(∅) = V(G) is non-empty, so ∅ is a face even without edges.
    if (faces.empty() && g.order() > 0)
        faces.push_back({});
    return SimplicialComplex(std::move(faces));
}

bool has_face(const SimplicialComplex & x, const Simplex & sigma)
{
    auto s = normalized(sigma);
    return std::any_of(x.facets().begin(), x.facets().end(), [&](const Simplex & f) { return contains_all(f, s); });
}

SimplicialComplex link(const SimplicialComplex & x, const Simplex & eta)
{
    require_face(x, eta, "link");
    auto e = normalized(eta);
    std::vector<Simplex> faces;
    for (const auto & f : x.facets())
        if (contains_all(f, e))
            faces.push_back(difference(f, e));
    return SimplicialComplex(std::move(faces));
}

SimplicialComplex star(const SimplicialComplex & x, const Simplex & eta)
{
    require_face(x, eta, "star");
    auto e = normalized(eta);
    std::vector<Simplex> faces;
    for (const auto & f : x.facets())
        if (contains_all(f, e))
            faces.push_back(f);
    return SimplicialComplex(std::move(faces));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex & x, const Simplex & s)
{
    auto ground = normalized(s);
    std::vector<Simplex> faces;
    for (const auto & f : x.facets())
        faces.push_back(intersect(f, ground));
    return SimplicialComplex(std::move(faces));
}

SimplicialComplex nerve(const std::vector<Simplex> & family)
{
    std::map<int, Simplex> members_of;
    for (int i = 0; i < static_cast<int>(family.size()); ++i)
        for (int x : family[i])
            members_of[x].push_back(i);
    std::vector<Simplex> faces;
    for (auto & [x, idx] : members_of)
        faces.push_back(std::move(idx));
    if (faces.empty())
        faces.push_back({});
    return SimplicialComplex(std::move(faces));
}

SimplicialComplex suspension(const SimplicialComplex & x)
{
    if (x.is_void())
        throw DomainError("suspension of the void complex");
    int a = x.vertices().empty() ? 0 : x.vertices().back() + 1;
    int b = a + 1;
    std::vector<Simplex> faces;
    for (const auto & f : x.facets()) {
        auto fa = f, fb = f;
        fa.push_back(a);
        fb.push_back(b);
        faces.push_back(std::move(fa));
        faces.push_back(std::move(fb));
    }
    return SimplicialComplex(std::move(faces));
}

bool has_full_skeleton(const SimplicialComplex & x, const Simplex & ground, int k)
{
    bool full = true;
    for_each_subset(normalized(ground), k + 1, [&](const Simplex & s) {
        if (full && !has_face(x, s))
            full = false;
    });
    return full;
}

std::vector<Simplex> vertex_components(const SimplicialComplex & x)
{
    const auto & verts = x.vertices();
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto index = [&](int v) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
    std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
    for (const auto & f : x.facets())
        for (std::size_t i = 1; i < f.size(); ++i)
            parent[find(index(f[i]))] = find(index(f[0]));
    std::map<int, Simplex> groups;
    for (std::size_t i = 0; i < verts.size(); ++i)
        groups[find(static_cast<int>(i))].push_back(verts[i]);
    std::vector<Simplex> out;
    for (auto & [root, members] : groups)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_path_connected(const SimplicialComplex & x)
{
    return vertex_components(x).size() == 1;
}

std::vector<Simplex> faces_of_dimension(const SimplicialComplex & x, int k)
{
    std::vector<Simplex> out;
    for (const auto & f : x.facets())
        for_each_subset(f, k + 1, [&](const Simplex & s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string complex_to_json(const SimplicialComplex & x)
{
    nlohmann::json j;
    j["facets"] = x.facets();
    return j.dump();
}

SimplicialComplex complex_from_json(const std::string & text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error & e) {
        throw ParseError(std::string("complex JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw ParseError("complex JSON: expected an object with a \"facets\" array");
    std::vector<Simplex> faces;
    for (const auto & f : j["facets"]) {
        if (!f.is_array())
            throw ParseError("complex JSON: each facet must be an array");
        Simplex s;
        for (const auto & v : f) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw ParseError("complex JSON: vertices must be non-negative integers");
            s.push_back(v.get<int>());
        }
        faces.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(faces));
}

} // namespace nbhd
