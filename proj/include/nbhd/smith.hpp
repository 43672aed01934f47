#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nbhd {

/// Column-major sparse integer matrix; each column sorted by row, no zeros.
struct SparseMatrix
{
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> columns;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

    static SparseMatrix from_dense(const std::vector<std::vector<long long>> & a);
    std::vector<std::vector<long long>> to_dense() const;
    std::size_t nonzeros() const;
};

struct SmithResult
{
    int rank = 0;
    /// d_1 | d_2 | ... | d_rank, all positive.
    std::vector<mpz_class> invariant_factors;
    /// Pivots taken by sparse unit elimination before the dense phase.
    int unit_pivots = 0;
    /// Size of the block left for the dense phase.
    int residual_rows = 0;
    int residual_cols = 0;
    /// The 64-bit pass overflowed and the elimination was redone with GMP.
    bool used_bignum = false;
};

/// Exact Smith normal form over the integers.
SmithResult smith_normal_form(const SparseMatrix & m);

/// Dense SNF on arbitrary-precision entries; returns the nonzero diagonal as a divisibility chain.
std::vector<mpz_class> dense_smith_diagonal(std::vector<std::vector<mpz_class>> a);

/// Turns any positive diagonal into the equivalent divisibility chain.
std::vector<mpz_class> invariant_chain(std::vector<mpz_class> diagonal);

/// Rank over Z/p (p prime, < 2^31) by column reduction.
int rank_mod_p(const SparseMatrix & m, std::uint32_t p);

/// Rank over Q, taken as the larger of the ranks modulo two 31-bit primes.
int rational_rank(const SparseMatrix & m);

} // namespace nbhd
