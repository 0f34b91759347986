#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mlt/ratmat.hpp"
#include "mlt/rng.hpp"

using namespace mlt;

namespace {

RatMat from_ints(const std::vector<std::vector<long>>& rows) {
    RatMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = Rational(rows[r][c]);
    return m;
}

IntMat random_int_matrix(int rows, int cols, Rng& rng, long range = 100) {
    IntMat m(rows, std::vector<std::int64_t>(cols));
    for (auto& row : m)
        for (auto& x : row) x = rng.int_in(-range, range);
    return m;
}

RatMat to_ratmat(const IntMat& m) {
    RatMat out(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c) out.at(r, c) = Rational(static_cast<long>(m[r][c]));
    return out;
}

} // namespace

TEST_CASE("rank_mod_p basics") {
    IntMat id5(5, std::vector<std::int64_t>(5, 0));
    for (int i = 0; i < 5; ++i) id5[i][i] = 1;
    for (std::uint64_t p : kRankPrimes) CHECK(rank_mod_p(id5, p) == 5);

    IntMat zero(3, std::vector<std::int64_t>(4, 0));
    CHECK(rank_mod_p(zero, kRankPrimes[0]) == 0);

    CHECK_THROWS_AS(rank_mod_p(id5, 91), std::invalid_argument); // 91 = 7 * 13
}

TEST_CASE("prime checker") {
    for (std::uint64_t p : kRankPrimes) CHECK(is_prime_u64(p));
    CHECK(is_prime_u64(2));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(2305843009213693950ull));
}

TEST_CASE("modular rank against the exact rational rank") {
    Rng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        IntMat m = random_int_matrix(6, 4, rng);
        int exact = rank(to_ratmat(m));
        int best = 0;
        for (std::uint64_t p : kRankPrimes) {
            int r = rank_mod_p(m, p);
            CHECK(r <= exact);
            best = std::max(best, r);
        }
        CHECK(best == exact);
    }
}

TEST_CASE("kernel basics") {
    CHECK(kernel(RatMat::identity(4)).empty());

    RatMat m = from_ints({{1, -1}});
    auto basis = kernel(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == basis[0][1]);

    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 2 + static_cast<int>(rng.below(5));
        int cols = 2 + static_cast<int>(rng.below(5));
        RatMat a = to_ratmat(random_int_matrix(rows, cols, rng, 9));
        auto ker = kernel(a);
        CHECK(static_cast<int>(ker.size()) + rank(a) == cols);
        for (const auto& v : ker)
            for (const auto& x : a.apply(v)) CHECK(x == 0);
    }
}

TEST_CASE("symmetric_inertia on pinned cases") {
    auto diag = from_ints({{2, 0, 0}, {0, 3, 0}, {0, 0, 0}});
    auto d1 = symmetric_inertia(diag);
    CHECK(d1.rank == 2);
    CHECK(d1.psd);
    CHECK(d1.n_plus == 2);
    CHECK(d1.n_zero == 1);

    auto d2 = symmetric_inertia(from_ints({{1, 0}, {0, -1}}));
    CHECK_FALSE(d2.psd);
    CHECK(d2.n_plus == 1);
    CHECK(d2.n_minus == 1);
    CHECK(d2.n_zero == 0);

    // zero diagonal, nonzero off-diagonal: eigenvalues +-1
    auto d3 = symmetric_inertia(from_ints({{0, 1}, {1, 0}}));
    CHECK_FALSE(d3.psd);
    CHECK(d3.n_plus == 1);
    CHECK(d3.n_minus == 1);

    CHECK_THROWS_AS(symmetric_inertia(from_ints({{0, 1}, {2, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_inertia(from_ints({{0, 1, 2}, {1, 0, 3}})), std::invalid_argument);
}

TEST_CASE("gram matrices are PSD") {
    Rng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 2 + static_cast<int>(rng.below(4));
        int cols = 2 + static_cast<int>(rng.below(4));
        RatMat a = to_ratmat(random_int_matrix(rows, cols, rng, 7));
        RatMat at = a.transposed();
        RatMat gram(cols, cols);
        for (int i = 0; i < cols; ++i)
            for (int j = 0; j < cols; ++j) {
                Rational acc(0);
                for (int k = 0; k < rows; ++k) acc += at.at(i, k) * a.at(k, j);
                gram.at(i, j) = acc;
            }
        auto dec = symmetric_inertia(gram);
        CHECK(dec.psd);
        CHECK(dec.rank == rank(a));
        RatMat neg = gram;
        for (int i = 0; i < cols; ++i)
            for (int j = 0; j < cols; ++j) neg.at(i, j) = -gram.at(i, j);
        auto nd = symmetric_inertia(neg);
        CHECK(nd.n_plus == 0);
        CHECK(nd.rank == dec.rank);
    }
}

TEST_CASE("inertia counts always fill the dimension") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.below(7));
        RatMat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                a.at(i, j) = Rational(rng.int_in(-5, 5));
                a.at(j, i) = a.at(i, j);
            }
        auto dec = symmetric_inertia(a);
        CHECK(dec.n_plus + dec.n_minus + dec.n_zero == n);
        CHECK(dec.rank == rank(a));
        CHECK(dec.psd == (dec.n_minus == 0));
    }
}

TEST_CASE("make_rational canonicalizes") {
    CHECK(make_rational(7, -14) == make_rational(-1, 2));
    CHECK(make_rational(0, 5) == 0);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}
