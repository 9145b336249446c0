#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "q4n/groupring.hpp"
#include "q4n/zlattice.hpp"

namespace q4n::testing {

// Deterministic PRNG so failures reproduce.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eed);
    return gen;
}

inline long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Int(rand_int(lo, hi));
    return m;
}

// Random unimodular matrix: a product of elementary row operations.
inline IntegerMatrix random_unimodular(std::size_t n, int ops = 20) {
    IntegerMatrix u = IntegerMatrix::identity(n);
    for (int t = 0; t < ops; ++t) {
        std::size_t i = static_cast<std::size_t>(rand_int(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rand_int(0, static_cast<long>(n) - 1));
        if (i == j) continue;
        Int q(rand_int(-3, 3));
        for (std::size_t c = 0; c < n; ++c) u(i, c) += q * u(j, c);
    }
    return u;
}

inline ZRingElem random_ring_elem(GroupParams p, long bound = 4) {
    ZRingElem e(p);
    std::vector<Int> c(static_cast<std::size_t>(p.order()));
    for (auto& v : c) v = Int(rand_int(-bound, bound));
    return ZRingElem::from_coeffs(p, std::move(c));
}

// Rational rank by fraction-free elimination; independent of hnf/snf.
inline std::size_t bareiss_rank(IntegerMatrix a) {
    std::size_t rank = 0;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t k = r; k < rows; ++k)
            if (a(k, c) != 0) { piv = k; break; }
        if (piv == rows) continue;
        for (std::size_t cc = 0; cc < cols; ++cc) std::swap(a(r, cc), a(piv, cc));
        for (std::size_t k = r + 1; k < rows; ++k) {
            if (a(k, c) == 0) continue;
            const Int f1 = a(r, c), f2 = a(k, c);
            for (std::size_t cc = 0; cc < cols; ++cc)
                a(k, cc) = a(k, cc) * f1 - a(r, cc) * f2;
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Exact determinant by cofactor expansion (test sizes only).
inline Int naive_det(const IntegerMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return Int(1);
    if (n == 1) return a(0, 0);
    Int det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        IntegerMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = a(r, c);
            }
        }
        Int term = a(0, j) * naive_det(minor);
        det += (j % 2 == 0) ? term : Int(-term);
    }
    return det;
}

// Determinantal-divisor oracle for invariant factors: d_i = g_i / g_{i-1}
// where g_i is the gcd of all i x i minors.  Independent of snf().
inline std::vector<Int> minor_gcd_invariants(const IntegerMatrix& a) {
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> g(n + 1);
    g[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Int gk(0);
        std::vector<std::size_t> ri(k), ci(k);
        // enumerate k-subsets of rows and columns
        std::function<void(std::size_t, std::size_t)> rows_rec =
            [&](std::size_t pos, std::size_t start) {
                if (pos == k) {
                    std::function<void(std::size_t, std::size_t)> cols_rec =
                        [&](std::size_t cpos, std::size_t cstart) {
                            if (cpos == k) {
                                IntegerMatrix sub(k, k);
                                for (std::size_t i = 0; i < k; ++i)
                                    for (std::size_t j = 0; j < k; ++j)
                                        sub(i, j) = a(ri[i], ci[j]);
                                Int d = naive_det(sub);
                                mpz_gcd(gk.get_mpz_t(), gk.get_mpz_t(), d.get_mpz_t());
                                return;
                            }
                            for (std::size_t c = cstart; c < a.cols(); ++c) {
                                ci[cpos] = c;
                                cols_rec(cpos + 1, c + 1);
                            }
                        };
                    cols_rec(0, 0);
                    return;
                }
                for (std::size_t r = start; r < a.rows(); ++r) {
                    ri[pos] = r;
                    rows_rec(pos + 1, r + 1);
                }
            };
        rows_rec(0, 0);
        g[k] = gk;
    }
    std::vector<Int> inv;
    for (std::size_t k = 1; k <= n; ++k) {
        if (g[k] == 0) break;
        inv.push_back(g[k] / g[k - 1]);
    }
    return inv;
}

// All lattice points of l with max-norm <= bound, by exact triangular DFS
// over the HNF basis.  Independent enumeration used as a box oracle.
inline std::vector<std::vector<Int>> lattice_points_in_box(const IntegerLattice& l, long bound) {
    std::vector<std::vector<Int>> out;
    const std::size_t r = l.rank(), m = l.ambient_dim();
    std::vector<Int> point(m, Int(0));
    const Int b(bound);

    // Basis rows are echelon: row k is the only remaining contributor at its
    // pivot column once rows < k are fixed, so coefficient ranges are exact.
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == r) {
            for (const Int& v : point)
                if (v > b || v < -b) return;
            out.push_back(point);
            return;
        }
        const std::size_t p = l.pivot_cols()[k];
        const Int piv = l.basis()(k, p);
        // point[p] currently holds the contribution of rows < k; rows > k add 0 there.
        Int lo, hi, t;
        t = -b - point[p];
        mpz_cdiv_q(lo.get_mpz_t(), t.get_mpz_t(), piv.get_mpz_t());
        t = b - point[p];
        mpz_fdiv_q(hi.get_mpz_t(), t.get_mpz_t(), piv.get_mpz_t());
        for (Int c = lo; c <= hi; ++c) {
            if (c != 0)
                for (std::size_t j = 0; j < m; ++j) point[j] += c * l.basis()(k, j);
            rec(k + 1);
            if (c != 0)
                for (std::size_t j = 0; j < m; ++j) point[j] -= c * l.basis()(k, j);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace q4n::testing
