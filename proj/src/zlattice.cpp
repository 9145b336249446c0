#include "q4n/zlattice.hpp"

#include <algorithm>
#include <cassert>

namespace q4n {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::size_t cols,
                                       const std::vector<std::vector<Int>>& rows) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("from_rows: ragged row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntegerMatrix IntegerMatrix::vstack(const IntegerMatrix& top, const IntegerMatrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("vstack: column mismatch");
    IntegerMatrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) m(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < bottom.cols(); ++c) m(top.rows() + r, c) = bottom(r, c);
    return m;
}

IntegerMatrix IntegerMatrix::hstack(const IntegerMatrix& left, const IntegerMatrix& right) {
    if (left.rows() != right.rows())
        throw std::invalid_argument("hstack: row mismatch");
    IntegerMatrix m(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) m(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) m(r, left.cols() + c) = right(r, c);
    }
    return m;
}

std::vector<Int> IntegerMatrix::row(std::size_t r) const {
    std::vector<Int> v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

void IntegerMatrix::set_row(std::size_t r, const std::vector<Int>& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    if (cols_ != other.rows())
        throw std::invalid_argument("matrix product: dimension mismatch");
    IntegerMatrix out(rows_, other.cols());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols(); ++j)
                out(i, j) += a * other(k, j);
        }
    return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& other) const {
    if (rows_ != other.rows() || cols_ != other.cols())
        throw std::invalid_argument("matrix sum: dimension mismatch");
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + other.e_[i];
    return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& other) const {
    if (rows_ != other.rows() || cols_ != other.cols())
        throw std::invalid_argument("matrix difference: dimension mismatch");
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - other.e_[i];
    return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> mat_vec(const std::vector<Int>& v, const IntegerMatrix& a) {
    if (v.size() != a.rows())
        throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Int> out(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < a.cols(); ++c) out[c] += v[r] * a(r, c);
    }
    return out;
}

namespace {

void add_row_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void negate_row(IntegerMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

// Row HNF in place; u (when non-null) receives the same row operations.
// Returns the pivot column of each nonzero row; zero rows end up trailing.
std::vector<std::size_t> hnf_in_place(IntegerMatrix& h, IntegerMatrix* u) {
    const std::size_t nrows = h.rows(), ncols = h.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0; // next pivot row

    for (std::size_t col = 0; col < ncols && pr < nrows; ++col) {
        // Euclidean descent: shrink entries in this column until one remains.
        for (;;) {
            std::size_t best = nrows;
            for (std::size_t r = pr; r < nrows; ++r) {
                if (h(r, col) == 0) continue;
                if (best == nrows || mpz_cmpabs(h(r, col).get_mpz_t(), h(best, col).get_mpz_t()) < 0)
                    best = r;
            }
            if (best == nrows) break; // column clear below pr
            swap_rows(h, pr, best);
            if (u) swap_rows(*u, pr, best);
            bool others = false;
            for (std::size_t r = pr + 1; r < nrows; ++r) {
                if (h(r, col) == 0) continue;
                Int q = h(r, col) / h(pr, col); // truncated: |remainder| < |pivot|
                add_row_multiple(h, r, pr, q);
                if (u) add_row_multiple(*u, r, pr, q);
                if (h(r, col) != 0) others = true;
            }
            if (!others) {
                if (h(pr, col) < 0) {
                    negate_row(h, pr);
                    if (u) negate_row(*u, pr);
                }
                pivots.push_back(col);
                ++pr;
                break;
            }
        }
    }

    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const std::size_t pc = pivots[k];
        for (std::size_t r = 0; r < k; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(r, pc).get_mpz_t(), h(k, pc).get_mpz_t());
            add_row_multiple(h, r, k, q);
            if (u) add_row_multiple(*u, r, k, q);
        }
    }
    return pivots;
}

} // namespace

IntegerMatrix hnf(const IntegerMatrix& a) {
    IntegerMatrix h = a;
    auto pivots = hnf_in_place(h, nullptr);
    IntegerMatrix out(pivots.size(), a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = h(r, c);
    return out;
}

HnfTransform hnf_with_transform(const IntegerMatrix& a) {
    HnfTransform t;
    t.h = a;
    t.u = IntegerMatrix::identity(a.rows());
    t.pivot_cols = hnf_in_place(t.h, &t.u);
    return t;
}

namespace {

struct SnfState {
    IntegerMatrix d, u, v;
    const CancelToken* cancel;

    void tick() {
        if (cancel && (*cancel)()) throw OperationCancelled();
    }

    void row_op(std::size_t dst, std::size_t src, const Int& q) {
        add_row_multiple(d, dst, src, q);
        add_row_multiple(u, dst, src, q);
    }
    void col_op(std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < d.rows(); ++r) d(r, dst) -= q * d(r, src);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) -= q * v(r, src);
    }
    void swap_r(std::size_t a, std::size_t b) {
        swap_rows(d, a, b);
        swap_rows(u, a, b);
    }
    void swap_c(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, a), d(r, b));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, a), v(r, b));
    }

    // Clear the cross at (s, s) by min-abs pivoting on the trailing submatrix.
    void eliminate_from(std::size_t s) {
        const std::size_t m = d.rows(), n = d.cols();
        for (std::size_t i = s; i < std::min(m, n); ++i) {
            for (;;) {
                tick();
                std::size_t br = m, bc = n;
                for (std::size_t r = i; r < m; ++r)
                    for (std::size_t c = i; c < n; ++c) {
                        if (d(r, c) == 0) continue;
                        if (br == m ||
                            mpz_cmpabs(d(r, c).get_mpz_t(), d(br, bc).get_mpz_t()) < 0) {
                            br = r;
                            bc = c;
                        }
                    }
                if (br == m) return; // trailing block is zero
                swap_r(i, br);
                swap_c(i, bc);
                bool dirty = false;
                for (std::size_t r = i + 1; r < m; ++r) {
                    if (d(r, i) == 0) continue;
                    row_op(r, i, d(r, i) / d(i, i));
                    if (d(r, i) != 0) dirty = true;
                }
                for (std::size_t c = i + 1; c < n; ++c) {
                    if (d(i, c) == 0) continue;
                    col_op(c, i, d(i, c) / d(i, i));
                    if (d(i, c) != 0) dirty = true;
                }
                if (!dirty) break;
            }
            if (d(i, i) < 0) {
                negate_row(d, i);
                negate_row(u, i);
            }
        }
    }
};

} // namespace

SnfResult snf(const IntegerMatrix& a, const CancelToken& cancel) {
    SnfState st;
    st.d = a;
    st.u = IntegerMatrix::identity(a.rows());
    st.v = IntegerMatrix::identity(a.cols());
    st.cancel = cancel ? &cancel : nullptr;

    st.eliminate_from(0);

    const std::size_t k = std::min(a.rows(), a.cols());
    // Sort zeros to the back, then enforce the divisibility chain.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            if (st.d(i, i) == 0 && st.d(i + 1, i + 1) != 0) {
                st.swap_r(i, i + 1);
                st.swap_c(i, i + 1);
                changed = true;
            } else if (st.d(i, i) != 0 && st.d(i + 1, i + 1) != 0 &&
                       st.d(i + 1, i + 1) % st.d(i, i) != 0) {
                // Merge the 2x2 block so it re-eliminates to (gcd, lcm).
                st.col_op(i, i + 1, Int(-1));
                st.eliminate_from(i);
                changed = true;
            }
        }
    }

    SnfResult res;
    res.u = st.u;
    res.d = st.d;
    res.v = st.v;
    for (std::size_t i = 0; i < k; ++i)
        if (st.d(i, i) != 0) res.invariant_factors.push_back(st.d(i, i));

    if (res.u * a * res.v != res.d)
        throw std::logic_error("snf: transform identity U*A*V = D violated");
    return res;
}

IntegerLattice IntegerLattice::zero(std::size_t ambient_dim) {
    return IntegerLattice(ambient_dim, IntegerMatrix(0, ambient_dim), {});
}

IntegerLattice IntegerLattice::full(std::size_t ambient_dim) {
    std::vector<std::size_t> pivots(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
    return IntegerLattice(ambient_dim, IntegerMatrix::identity(ambient_dim), std::move(pivots));
}

IntegerLattice IntegerLattice::from_generators(const IntegerMatrix& gens) {
    IntegerMatrix h = gens;
    auto pivots = hnf_in_place(h, nullptr);
    IntegerMatrix basis(pivots.size(), gens.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < gens.cols(); ++c) basis(r, c) = h(r, c);
    return IntegerLattice(gens.cols(), std::move(basis), std::move(pivots));
}

std::optional<std::vector<Int>> IntegerLattice::coordinates(const std::vector<Int>& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("lattice coordinates: dimension mismatch");
    std::vector<Int> res = v;
    std::vector<Int> coeff(rank());
    for (std::size_t k = 0; k < rank(); ++k) {
        const std::size_t p = pivots_[k];
        if (res[p] % basis_(k, p) != 0) return std::nullopt;
        coeff[k] = res[p] / basis_(k, p);
        if (coeff[k] != 0)
            for (std::size_t c = 0; c < ambient_; ++c) res[c] -= coeff[k] * basis_(k, c);
    }
    for (const Int& x : res)
        if (x != 0) return std::nullopt;
    return coeff;
}

bool IntegerLattice::contains(const std::vector<Int>& v) const {
    return coordinates(v).has_value();
}

bool IntegerLattice::contains(const IntegerLattice& other) const {
    if (other.ambient_dim() != ambient_)
        throw std::invalid_argument("lattice containment: ambient mismatch");
    for (std::size_t r = 0; r < other.rank(); ++r)
        if (!contains(other.basis().row(r))) return false;
    return true;
}

std::vector<Int> IntegerLattice::reduce(std::vector<Int> v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("lattice reduce: dimension mismatch");
    for (std::size_t k = 0; k < rank(); ++k) {
        const std::size_t p = pivots_[k];
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), basis_(k, p).get_mpz_t());
        if (q != 0)
            for (std::size_t c = 0; c < ambient_; ++c) v[c] -= q * basis_(k, c);
    }
    return v;
}

IntegerLattice kernel(const IntegerMatrix& a) {
    HnfTransform t = hnf_with_transform(a);
    const std::size_t rank = t.pivot_cols.size();
    IntegerMatrix gens(a.rows() - rank, a.rows());
    for (std::size_t r = rank; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.rows(); ++c) gens(r - rank, c) = t.u(r, c);
    return IntegerLattice::from_generators(gens);
}

IntegerLattice image(const IntegerMatrix& a) {
    return IntegerLattice::from_generators(a);
}

bool membership(const std::vector<Int>& v, const IntegerLattice& l) {
    return l.contains(v);
}

IntegerLattice lattice_sum(const IntegerLattice& l1, const IntegerLattice& l2) {
    if (l1.ambient_dim() != l2.ambient_dim())
        throw std::invalid_argument("lattice_sum: ambient mismatch");
    return IntegerLattice::from_generators(IntegerMatrix::vstack(l1.basis(), l2.basis()));
}

IntegerLattice lattice_intersect(const IntegerLattice& l1, const IntegerLattice& l2) {
    if (l1.ambient_dim() != l2.ambient_dim())
        throw std::invalid_argument("lattice_intersect: ambient mismatch");
    // v in both lattices <=> v = s*B1 = t*B2; solve s*B1 - t*B2 = 0.
    IntegerMatrix neg2 = l2.basis();
    for (std::size_t r = 0; r < neg2.rows(); ++r) negate_row(neg2, r);
    IntegerMatrix stacked = IntegerMatrix::vstack(l1.basis(), neg2);
    IntegerLattice rel = kernel(stacked);
    IntegerMatrix gens(rel.rank(), l1.ambient_dim());
    for (std::size_t r = 0; r < rel.rank(); ++r) {
        std::vector<Int> s(l1.rank());
        for (std::size_t c = 0; c < l1.rank(); ++c) s[c] = rel.basis()(r, c);
        gens.set_row(r, mat_vec(s, l1.basis()));
    }
    return IntegerLattice::from_generators(gens);
}

std::vector<Int> quotient_invariants(const IntegerLattice& sub, const IntegerLattice& sup) {
    if (sub.ambient_dim() != sup.ambient_dim())
        throw std::invalid_argument("quotient_invariants: ambient mismatch");
    IntegerMatrix coords(sub.rank(), sup.rank());
    for (std::size_t r = 0; r < sub.rank(); ++r) {
        auto c = sup.coordinates(sub.basis().row(r));
        if (!c) throw std::domain_error("quotient_invariants: first lattice not contained in second");
        coords.set_row(r, *c);
    }
    SnfResult s = snf(coords);
    std::vector<Int> inv = s.invariant_factors;
    inv.resize(sup.rank(), Int(0)); // zeros for the free part
    return inv;
}

Int lattice_index(const IntegerLattice& l) {
    if (l.rank() != l.ambient_dim()) return 0;
    Int idx = 1;
    for (std::size_t k = 0; k < l.rank(); ++k) idx *= l.basis()(k, l.pivot_cols()[k]);
    return idx;
}

IntegerLattice lattice_apply(const IntegerLattice& l, const IntegerMatrix& a) {
    return image(l.basis() * a);
}

} // namespace q4n
