#include "mlt/ratmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlt {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::transposed() const {
    RatMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool RatMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

bool RatMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<Rational> RatMat::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r) {
        Rational acc(0);
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0 && v[c] != 0) acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

namespace {

// bit size proxy used to prefer small pivots (limits coefficient growth)
std::size_t entry_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) + mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

// Row echelon pass; returns pivot columns. If reduce_up is set the result is
// the full RREF with unit pivots (used for kernels).
std::vector<int> echelon(RatMat& m, bool reduce_up) {
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int best = -1;
        std::size_t best_size = 0;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            std::size_t s = entry_size(m.at(i, c));
            if (best < 0 || s < best_size) {
                best = i;
                best_size = s;
            }
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(best, j));
        for (int i = reduce_up ? 0 : r + 1; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) / m.at(r, c);
            m.at(i, c) = 0;
            for (int j = c + 1; j < m.cols(); ++j)
                if (m.at(r, j) != 0) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    if (reduce_up) {
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
            int c = pivot_cols[k];
            Rational inv = 1 / m.at(static_cast<int>(k), c);
            for (int j = c; j < m.cols(); ++j)
                if (m.at(static_cast<int>(k), j) != 0) m.at(static_cast<int>(k), j) *= inv;
        }
    }
    return pivot_cols;
}

} // namespace

int rank(const RatMat& m) {
    RatMat work = m;
    return static_cast<int>(echelon(work, false).size());
}

std::vector<std::vector<Rational>> kernel(const RatMat& m) {
    RatMat work = m;
    std::vector<int> pivots = echelon(work, true);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -work.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SymmetricDecomposition symmetric_inertia(const RatMat& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("symmetric_inertia: matrix not symmetric");
    const int n = m.rows();
    RatMat a = m;
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    SymmetricDecomposition dec;
    dec.dimension = n;
    while (!active.empty()) {
        // 1x1 pivot: smallest nonzero diagonal entry
        int pk = -1;
        std::size_t pk_size = 0;
        for (std::size_t ai = 0; ai < active.size(); ++ai) {
            int i = active[ai];
            if (a.at(i, i) == 0) continue;
            std::size_t s = entry_size(a.at(i, i));
            if (pk < 0 || s < pk_size) {
                pk = static_cast<int>(ai);
                pk_size = s;
            }
        }
        if (pk >= 0) {
            int k = active[pk];
            const Rational pivot = a.at(k, k);
            if (pivot > 0) ++dec.n_plus;
            else ++dec.n_minus;
            active.erase(active.begin() + pk);
            for (std::size_t ai = 0; ai < active.size(); ++ai) {
                int i = active[ai];
                if (a.at(i, k) == 0) continue;
                Rational f = a.at(i, k) / pivot;
                for (std::size_t aj = ai; aj < active.size(); ++aj) {
                    int j = active[aj];
                    if (a.at(k, j) == 0) continue;
                    a.at(i, j) -= f * a.at(k, j);
                    a.at(j, i) = a.at(i, j);
                }
            }
            continue;
        }
        // all active diagonal entries are zero; a surviving off-diagonal entry
        // gives a hyperbolic pair with eigenvalues +-|a_kl|
        int hk = -1, hl = -1;
        for (std::size_t ai = 0; ai < active.size() && hk < 0; ++ai)
            for (std::size_t aj = ai + 1; aj < active.size(); ++aj)
                if (a.at(active[ai], active[aj]) != 0) {
                    hk = static_cast<int>(ai);
                    hl = static_cast<int>(aj);
                    break;
                }
        if (hk < 0) {
            dec.n_zero += static_cast<int>(active.size());
            break;
        }
        int k = active[hk], l = active[hl];
        const Rational off = a.at(k, l);
        ++dec.n_plus;
        ++dec.n_minus;
        active.erase(active.begin() + hl);
        active.erase(active.begin() + hk);
        // Schur complement of the block [[0, off], [off, 0]]
        for (std::size_t ai = 0; ai < active.size(); ++ai) {
            int i = active[ai];
            if (a.at(i, k) == 0 && a.at(i, l) == 0) continue;
            for (std::size_t aj = ai; aj < active.size(); ++aj) {
                int j = active[aj];
                Rational upd = (a.at(i, k) * a.at(l, j) + a.at(i, l) * a.at(k, j)) / off;
                if (upd != 0) {
                    a.at(i, j) -= upd;
                    a.at(j, i) = a.at(i, j);
                }
            }
        }
    }
    dec.rank = dec.n_plus + dec.n_minus;
    dec.n_zero = dec.dimension - dec.rank;
    dec.psd = (dec.n_minus == 0);
    return dec;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin base set for 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

int rank_mod_p(const IntMat& m, std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("rank_mod_p: p is not prime");
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(m[i].size()) != cols)
            throw std::invalid_argument("rank_mod_p: ragged matrix");
        for (int j = 0; j < cols; ++j) {
            std::int64_t x = m[i][j] % static_cast<std::int64_t>(p);
            if (x < 0) x += static_cast<std::int64_t>(p);
            a[i][j] = static_cast<std::uint64_t>(x);
        }
    }
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        const std::uint64_t inv = powmod(a[r][c], p - 2, p);
        for (int j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
        for (int i = r + 1; i < rows; ++i) {
            if (!a[i][c]) continue;
            const std::uint64_t f = a[i][c];
            for (int j = c; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, a[r][j], p);
                a[i][j] = (a[i][j] >= sub) ? a[i][j] - sub : a[i][j] + p - sub;
            }
        }
        ++r;
    }
    return r;
}

} // namespace mlt
