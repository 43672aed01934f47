#include "nbhd/coloring.hpp"

#include <algorithm>

#include "nbhd/chordal.hpp"
#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

class Dsatur
{
public:
    explicit Dsatur(const Graph & g) : g_(g), color_(g.order(), -1), seen_(g.order(), std::vector<int>(g.order() + 1, 0)) {}

    int pick() const
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (color_[v] != -1)
                continue;
            int sat = saturation(v);
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    int saturation(int v) const
    {
        int s = 0;
        for (int c = 0; c <= g_.order(); ++c)
            s += seen_[v][c] > 0;
        return s;
    }

    bool allowed(int v, int c) const { return seen_[v][c] == 0; }

    void assign(int v, int c)
    {
        color_[v] = c;
        g_.adjacency(v).for_each([&](int w) { ++seen_[w][c]; });
    }

    void unassign(int v)
    {
        int c = color_[v];
        color_[v] = -1;
        g_.adjacency(v).for_each([&](int w) { --seen_[w][c]; });
    }

    bool extend(int k, int used, int remaining)
    {
        if (remaining == 0)
            return true;
        int v = pick();
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            if (!allowed(v, c))
                continue;
            assign(v, c);
            if (extend(k, std::max(used, c + 1), remaining - 1))
                return true;
            unassign(v);
        }
        return false;
    }

    const std::vector<int> & colors() const { return color_; }

private:
    const Graph & g_;
    std::vector<int> color_;
    std::vector<std::vector<int>> seen_;
};

} // namespace

std::vector<int> dsatur_coloring(const Graph & g)
{
    Dsatur d(g);
    for (int step = 0; step < g.order(); ++step) {
        int v = d.pick();
        int c = 0;
        while (!d.allowed(v, c))
            ++c;
        d.assign(v, c);
    }
    return d.colors();
}

int chromatic_number(const Graph & g, int cap)
{
    if (g.order() < 1)
        throw DomainError("chromatic number of the empty graph");
    if (g.order() > cap)
        throw TooLarge("chromatic_number: " + std::to_string(g.order()) + " vertices exceeds exact-solver cap " +
                       std::to_string(cap));
    int lower = clique_number(g);
    auto greedy = dsatur_coloring(g);
    int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
    for (int k = lower; k < upper; ++k) {
        Dsatur d(g);
        if (d.extend(k, 0, g.order()))
            return k;
    }
    return upper;
}

} // namespace nbhd
