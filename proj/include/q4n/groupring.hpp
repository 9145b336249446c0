#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "q4n/zlattice.hpp"

namespace q4n {

/// Parameters of the generalized quaternion group
/// Q_{4n} = <x, y | x^n y^{-2}, y x y x^{-n+1}>, of order 4n.
/// The defining relators rewrite as y^2 = x^n and y x = x^{-1} y.
struct GroupParams {
    int n;

    explicit GroupParams(int n_) : n(n_) {
        if (n < 2) throw std::invalid_argument("GroupParams: n must be >= 2");
    }
    int order() const { return 4 * n; }   // |Q_{4n}|
    int x_order() const { return 2 * n; } // order of x
    bool operator==(const GroupParams&) const = default;
};

/// A group element in the unique normal form x^i y^j with
/// 0 <= i < 2n and j in {0, 1}.
struct GroupElement {
    GroupParams params;
    int i;
    int j;

    bool operator==(const GroupElement&) const = default;

    /// Normal form of x^xe * y^ye for arbitrary integer exponents
    /// (folds y^2 = x^n, y^-1 = x^n y).
    static GroupElement from_exponents(GroupParams p, long xe, long ye);
};

GroupElement identity(GroupParams p);
GroupElement mul_group(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// Basis position of a group element: lexicographic in (j, i).
std::size_t element_index(const GroupElement& g);
GroupElement element_at(GroupParams p, std::size_t index);

std::string to_string(const GroupElement& g);

namespace detail {
// Rationals are kept in lowest terms; mpq_class does not canonicalize
// values constructed from a raw numerator/denominator pair.
inline void canonicalize(Int&) {}
inline void canonicalize(Rat& v) { v.canonicalize(); }
} // namespace detail

/// A group-ring element of Z Q_{4n} (Coeff = Int) or Q Q_{4n} (Coeff = Rat),
/// stored as the dense coefficient vector over the 4n normal forms.
template <typename Coeff>
class RingElem {
public:
    explicit RingElem(GroupParams p) : params_(p), c_(static_cast<std::size_t>(p.order())) {}

    static RingElem zero(GroupParams p) { return RingElem(p); }
    static RingElem one(GroupParams p) { return monomial(p, Coeff(1), 0, 0); }
    static RingElem monomial(GroupParams p, Coeff coeff, long xe, long ye) {
        RingElem e(p);
        detail::canonicalize(coeff);
        e.coeff(GroupElement::from_exponents(p, xe, ye)) += coeff;
        return e;
    }
    static RingElem from_coeffs(GroupParams p, std::vector<Coeff> coeffs) {
        if (coeffs.size() != static_cast<std::size_t>(p.order()))
            throw std::invalid_argument("RingElem: coefficient count must be 4n");
        RingElem e(p);
        e.c_ = std::move(coeffs);
        for (Coeff& v : e.c_) detail::canonicalize(v);
        return e;
    }

    GroupParams params() const { return params_; }
    const std::vector<Coeff>& coeffs() const { return c_; }

    Coeff& coeff(const GroupElement& g) { return c_[element_index(require_same(g))]; }
    const Coeff& coeff(const GroupElement& g) const { return c_[element_index(require_same(g))]; }

    bool is_zero() const {
        for (const Coeff& v : c_)
            if (v != 0) return false;
        return true;
    }

    /// Sum of all coefficients; a ring homomorphism onto the coefficient ring.
    Coeff augmentation() const {
        Coeff s(0);
        for (const Coeff& v : c_) s += v;
        return s;
    }

    bool operator==(const RingElem&) const = default;

    RingElem operator-() const {
        RingElem out(params_);
        for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = -c_[k];
        return out;
    }
    RingElem operator+(const RingElem& other) const {
        check_params(other);
        RingElem out(params_);
        for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] + other.c_[k];
        return out;
    }
    RingElem operator-(const RingElem& other) const { return *this + (-other); }

    /// Convolution product over mul_group; noncommutative.
    RingElem operator*(const RingElem& other) const {
        check_params(other);
        RingElem out(params_);
        const std::size_t m = c_.size();
        for (std::size_t a = 0; a < m; ++a) {
            if (c_[a] == 0) continue;
            const GroupElement ga = element_at(params_, a);
            for (std::size_t b = 0; b < m; ++b) {
                if (other.c_[b] == 0) continue;
                out.c_[element_index(mul_group(ga, element_at(params_, b)))] +=
                    c_[a] * other.c_[b];
            }
        }
        return out;
    }

    RingElem operator*(const Coeff& s) const {
        RingElem out(params_);
        for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] * s;
        return out;
    }
    friend RingElem operator*(const Coeff& s, const RingElem& e) { return e * s; }

    RingElem& operator+=(const RingElem& other) { return *this = *this + other; }
    RingElem& operator-=(const RingElem& other) { return *this = *this - other; }

private:
    const GroupElement& require_same(const GroupElement& g) const {
        if (!(g.params == params_))
            throw std::invalid_argument("RingElem: group parameter mismatch");
        return g;
    }
    void check_params(const RingElem& other) const {
        if (!(other.params_ == params_))
            throw std::invalid_argument("RingElem: group parameter mismatch");
    }

    GroupParams params_;
    std::vector<Coeff> c_;
};

using ZRingElem = RingElem<Int>;
using QRingElem = RingElem<Rat>;

template <typename Coeff>
Coeff augmentation(const RingElem<Coeff>& p) {
    return p.augmentation();
}

QRingElem to_rational(const ZRingElem& p);

/// N: the sum of all 4n group elements.  Central; p*N = N*p = aug(p)*N.
ZRingElem norm_element(GroupParams p);

/// Sigma^-: the alternating sum 1 - x + x^2 - ... - x^(2n-1).
ZRingElem alternating_sum(GroupParams p);

/// psi_2n = 1 - x + x^2 - ... + x^(n-1); for n odd, psi_2n * (x+1) = x^n + 1.
ZRingElem psi_element(GroupParams p);

ZRingElem xpow(GroupParams p, long e);
ZRingElem ypow(GroupParams p, long e);

/// Matrix of v -> v * p on the (j, i)-ordered basis: row g holds the
/// coefficients of g * p.  A faithful ring homomorphism into 4n x 4n matrices.
IntegerMatrix right_mult_matrix(const ZRingElem& p);

/// Matrix of v -> p * v: row g holds the coefficients of p * g.
IntegerMatrix left_mult_matrix(const ZRingElem& p);

template <typename Coeff>
std::string to_string(const RingElem<Coeff>& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < e.coeffs().size(); ++k) {
        const Coeff& c = e.coeffs()[k];
        if (c == 0) continue;
        const GroupElement g = element_at(e.params(), k);
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Coeff a = c > 0 ? c : Coeff(-c);
        if (a != 1 || (g.i == 0 && g.j == 0)) os << a;
        if (g.i != 0 || g.j != 0) {
            if (a != 1) os << "*";
            os << to_string(g);
        }
    }
    if (first) os << "0";
    return os.str();
}

template <typename Coeff>
std::ostream& operator<<(std::ostream& os, const RingElem<Coeff>& e) {
    return os << to_string(e);
}

} // namespace q4n
