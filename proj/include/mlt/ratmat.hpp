#ifndef MLT_RATMAT_HPP
#define MLT_RATMAT_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

namespace mlt {

using Rational = mpq_class;

/// make a canonical rational from an integer pair
Rational make_rational(long num, long den = 1);

/// Dense matrix of exact rationals (arbitrary-precision). All entries kept
/// in lowest terms; sizes here stay small (at most a few thousand entries).
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    RatMat transposed() const;
    bool is_symmetric() const;
    bool is_zero() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const; // M v

    bool operator==(const RatMat& other) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Exact rank by fraction elimination.
int rank(const RatMat& m);

/// Basis of the right kernel {v : M v = 0}; dimension = cols - rank.
std::vector<std::vector<Rational>> kernel(const RatMat& m);

/// Exact inertia of a symmetric matrix.
struct SymmetricDecomposition {
    int dimension = 0;
    int rank = 0;
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    bool psd = false; // n_minus == 0
};

/// LDL^T-style symmetric elimination with exact pivoting: 1x1 pivots on
/// nonzero diagonal entries; when the remaining diagonal is all zero but an
/// off-diagonal entry survives, that entry forms a hyperbolic 2x2 block
/// contributing one positive and one negative eigenvalue, so the counts
/// always fill the whole dimension. Throws on non-symmetric input.
SymmetricDecomposition symmetric_inertia(const RatMat& m);

/// Three fixed 61-bit primes; rank probing uses these for reproducibility.
inline constexpr std::array<std::uint64_t, 3> kRankPrimes = {
    2305843009213693951ull, // 2^61 - 1
    2305843009213693921ull,
    2305843009213693907ull,
};

using IntMat = std::vector<std::vector<std::int64_t>>;

/// Row elimination over F_p. Throws std::invalid_argument if p is composite.
int rank_mod_p(const IntMat& m, std::uint64_t p);

bool is_prime_u64(std::uint64_t n);

} // namespace mlt

#endif
