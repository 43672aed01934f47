#include "nbhd/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <type_traits>

namespace nbhd {

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long long>> & a)
{
    int r = static_cast<int>(a.size());
    int c = r ? static_cast<int>(a[0].size()) : 0;
    SparseMatrix m(r, c);
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < r; ++i)
            if (a[i][j] != 0)
                m.columns[j].emplace_back(i, a[i][j]);
    return m;
}

std::vector<std::vector<long long>> SparseMatrix::to_dense() const
{
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols, 0));
    for (int j = 0; j < cols; ++j)
        for (auto [i, v] : columns[j])
            a[i][j] = v;
    return a;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t total = 0;
    for (const auto & c : columns)
        total += c.size();
    return total;
}

namespace {

struct Overflow
{
};

long long sub_mul(long long a, long long f, long long b)
{
    long long p, r;
    if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r))
        throw Overflow{};
    return r;
}

mpz_class sub_mul(const mpz_class & a, const mpz_class & f, const mpz_class & b)
{
    return a - f * b;
}

bool is_unit(long long v) { return v == 1 || v == -1; }
bool is_unit(const mpz_class & v) { return v == 1 || v == -1; }

mpz_class to_mpz(long long v)
{
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), v);
    return z;
}
mpz_class to_mpz(const mpz_class & v) { return v; }

template <class T>
T from_ll(long long v)
{
    if constexpr (std::is_same_v<T, long long>)
        return v;
    else
        return to_mpz(v);
}

template <class T>
struct Entry
{
    int row;
    T val;
};

/// Sparse elimination restricted to ±1 pivots. Picks the shortest column
/// and, inside it, the unit entry whose row is shortest.
template <class T>
class UnitEliminator
{
public:
    explicit UnitEliminator(const SparseMatrix & m)
        : cols_(m.cols), row_cols_(m.rows), row_count_(m.rows, 0), state_(m.cols, done), key_(m.cols, 0)
    {
        for (int j = 0; j < m.cols; ++j) {
            for (auto [i, v] : m.columns[j]) {
                cols_[j].push_back({i, from_ll<T>(v)});
                row_cols_[i].push_back(j);
                ++row_count_[i];
            }
            if (!cols_[j].empty())
                activate(j);
        }
    }

    int run()
    {
        int pivots = 0;
        while (!active_.empty()) {
            int c = active_.begin()->second;
            active_.erase(active_.begin());
            state_[c] = stuck;
            int best = -1;
            for (std::size_t k = 0; k < cols_[c].size(); ++k)
                if (is_unit(cols_[c][k].val) &&
                    (best < 0 || row_count_[cols_[c][k].row] < row_count_[cols_[c][best].row]))
                    best = static_cast<int>(k);
            if (best < 0)
                continue;
            pivot(c, best);
            ++pivots;
        }
        return pivots;
    }

    /// Columns that never offered a unit pivot, restricted to their live rows.
    std::vector<std::vector<mpz_class>> residual() const
    {
        std::vector<int> cols;
        std::vector<int> rows;
        for (int j = 0; j < static_cast<int>(cols_.size()); ++j)
            if (state_[j] == stuck && !cols_[j].empty()) {
                cols.push_back(j);
                for (const auto & e : cols_[j])
                    rows.push_back(e.row);
            }
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::vector<std::vector<mpz_class>> a(rows.size(), std::vector<mpz_class>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto & e : cols_[cols[j]]) {
                auto i = std::lower_bound(rows.begin(), rows.end(), e.row) - rows.begin();
                a[i][j] = to_mpz(e.val);
            }
        return a;
    }

private:
    enum State : char
    {
        active,
        stuck,
        done,
    };

    void activate(int c)
    {
        key_[c] = static_cast<int>(cols_[c].size());
        active_.emplace(key_[c], c);
        state_[c] = active;
    }

    void pivot(int c, int at)
    {
        std::vector<Entry<T>> pcol = std::move(cols_[c]);
        cols_[c].clear();
        state_[c] = done;
        const int r = pcol[at].row;
        const T pv = pcol[at].val;
        for (const auto & e : pcol)
            --row_count_[e.row];

        std::vector<int> touching = std::move(row_cols_[r]);
        row_cols_[r].clear();
        std::vector<Entry<T>> merged;
        for (int c2 : touching) {
            if (c2 == c || state_[c2] == done)
                continue;
            auto & col = cols_[c2];
            auto hit = std::lower_bound(col.begin(), col.end(), r, [](const Entry<T> & e, int row) { return e.row < row; });
            if (hit == col.end() || hit->row != r)
                continue;
            T factor = hit->val * pv;

            merged.clear();
            merged.reserve(col.size() + pcol.size());
            auto a = col.begin();
            auto b = pcol.begin();
            while (a != col.end() || b != pcol.end()) {
                if (b == pcol.end() || (a != col.end() && a->row < b->row)) {
                    merged.push_back(std::move(*a++));
                } else if (a == col.end() || b->row < a->row) {
                    T v = sub_mul(T(0), factor, b->val);
                    ++row_count_[b->row];
                    row_cols_[b->row].push_back(c2);
                    merged.push_back({b->row, std::move(v)});
                    ++b;
                } else {
                    T v = sub_mul(a->val, factor, b->val);
                    if (v == 0)
                        --row_count_[a->row];
                    else
                        merged.push_back({a->row, std::move(v)});
                    ++a;
                    ++b;
                }
            }
            col.swap(merged);

            if (state_[c2] == active)
                active_.erase({key_[c2], c2});
            if (col.empty())
                state_[c2] = done;
            else
                activate(c2);
        }
    }

    std::vector<std::vector<Entry<T>>> cols_;
    std::vector<std::vector<int>> row_cols_;
    std::vector<int> row_count_;
    std::vector<State> state_;
    std::vector<int> key_;
    std::set<std::pair<int, int>> active_;
};

template <class T>
SmithResult eliminate(const SparseMatrix & m)
{
    UnitEliminator<T> e(m);
    SmithResult out;
    out.unit_pivots = e.run();
    auto rest = e.residual();
    out.residual_rows = static_cast<int>(rest.size());
    out.residual_cols = rest.empty() ? 0 : static_cast<int>(rest[0].size());
    auto tail = dense_smith_diagonal(std::move(rest));
    out.invariant_factors.assign(out.unit_pivots, mpz_class(1));
    out.invariant_factors.insert(out.invariant_factors.end(), tail.begin(), tail.end());
    out.rank = static_cast<int>(out.invariant_factors.size());
    return out;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    std::uint32_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1)
            result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return result;
}

} // namespace

SmithResult smith_normal_form(const SparseMatrix & m)
{
    try {
        return eliminate<long long>(m);
    } catch (const Overflow &) {
        auto out = eliminate<mpz_class>(m);
        out.used_bignum = true;
        return out;
    }
}

std::vector<mpz_class> dense_smith_diagonal(std::vector<std::vector<mpz_class>> a)
{
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    std::vector<mpz_class> diag;

    for (int t = 0; t < std::min(m, n); ++t) {
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break;
        std::swap(a[t], a[pi]);
        for (auto & row : a)
            std::swap(row[t], row[pj]);

        while (true) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (a[i][t] == 0)
                    continue;
                mpz_class q = a[i][t] / a[t][t];
                for (int j = t; j < n; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    clean = false;
                    std::swap(a[t], a[i]);
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a[t][j] == 0)
                    continue;
                mpz_class q = a[t][j] / a[t][t];
                for (int i = t; i < m; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    clean = false;
                    for (auto & row : a)
                        std::swap(row[t], row[j]);
                }
            }
            if (clean)
                break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return invariant_chain(std::move(diag));
}

std::vector<mpz_class> invariant_chain(std::vector<mpz_class> d)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            mpz_class g = gcd(d[i], d[j]);
            mpz_class l = lcm(d[i], d[j]);
            d[i] = g;
            d[j] = l;
        }
    return d;
}

int rank_mod_p(const SparseMatrix & m, std::uint32_t p)
{
    using Col = std::vector<std::pair<int, std::uint32_t>>;
    std::vector<int> owner(m.rows, -1);
    std::vector<Col> reduced(m.cols);
    int rank = 0;
    Col merged;
    for (int j = 0; j < m.cols; ++j) {
        Col col;
        for (auto [i, v] : m.columns[j]) {
            long long r = v % static_cast<long long>(p);
            if (r < 0)
                r += p;
            if (r)
                col.emplace_back(i, static_cast<std::uint32_t>(r));
        }
        while (!col.empty()) {
            int low = col.back().first;
            int i = owner[low];
            if (i < 0) {
                std::uint32_t inv = inverse_mod(col.back().second, p);
                for (auto & e : col)
                    e.second = mul_mod(e.second, inv, p);
                owner[low] = j;
                reduced[j] = std::move(col);
                ++rank;
                break;
            }
            // reduced[i] has leading coefficient 1 at `low`.
            std::uint32_t f = col.back().second;
            const Col & piv = reduced[i];
            merged.clear();
            auto a = col.begin();
            auto b = piv.begin();
            while (a != col.end() || b != piv.end()) {
                if (b == piv.end() || (a != col.end() && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == col.end() || b->first < a->first) {
                    merged.emplace_back(b->first, (p - mul_mod(f, b->second, p)) % p);
                    ++b;
                } else {
                    std::uint32_t v = (a->second + p - mul_mod(f, b->second, p)) % p;
                    if (v)
                        merged.emplace_back(a->first, v);
                    ++a;
                    ++b;
                }
            }
            col.swap(merged);
        }
    }
    return rank;
}

int rational_rank(const SparseMatrix & m)
{
    return std::max(rank_mod_p(m, 2147483647u), rank_mod_p(m, 2147483629u));
}

} // namespace nbhd
