#include "q4n/groupring.hpp"

namespace q4n {

namespace {
int mod(long v, int m) {
    long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}
} // namespace

GroupElement GroupElement::from_exponents(GroupParams p, long xe, long ye) {
    int j = mod(ye, 4);
    int i = mod(xe, p.x_order());
    if (j >= 2) { // y^2 = x^n, y^3 = x^n y
        i = mod(i + p.n, p.x_order());
        j -= 2;
    }
    return GroupElement{p, i, j};
}

GroupElement identity(GroupParams p) { return GroupElement{p, 0, 0}; }

GroupElement mul_group(const GroupElement& g, const GroupElement& h) {
    if (!(g.params == h.params))
        throw std::invalid_argument("mul_group: group parameter mismatch");
    const GroupParams p = g.params;
    // (x^a y^jg)(x^b y^jh): move x^b past y^jg with y x = x^-1 y.
    const long xe = g.j == 0 ? static_cast<long>(g.i) + h.i
                             : static_cast<long>(g.i) - h.i;
    return GroupElement::from_exponents(p, xe, static_cast<long>(g.j) + h.j);
}

GroupElement inverse(const GroupElement& g) {
    if (g.j == 0) return GroupElement::from_exponents(g.params, -g.i, 0);
    // (x^i y)^-1 = y^-1 x^-i = x^(n+i) y
    return GroupElement::from_exponents(g.params, g.params.n + g.i, 1);
}

std::size_t element_index(const GroupElement& g) {
    return static_cast<std::size_t>(g.j) * g.params.x_order() + g.i;
}

GroupElement element_at(GroupParams p, std::size_t index) {
    const int m = p.x_order();
    if (index >= static_cast<std::size_t>(p.order()))
        throw std::out_of_range("element_at: index out of range");
    return GroupElement{p, static_cast<int>(index % m), static_cast<int>(index / m)};
}

std::string to_string(const GroupElement& g) {
    std::string s;
    if (g.i == 1) s += "x";
    else if (g.i > 1) s += "x^" + std::to_string(g.i);
    if (g.j == 1) s += "y";
    if (s.empty()) s = "1";
    return s;
}

QRingElem to_rational(const ZRingElem& p) {
    std::vector<Rat> c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = Rat(p.coeffs()[k]);
    return QRingElem::from_coeffs(p.params(), std::move(c));
}

ZRingElem norm_element(GroupParams p) {
    std::vector<Int> c(static_cast<std::size_t>(p.order()), Int(1));
    return ZRingElem::from_coeffs(p, std::move(c));
}

ZRingElem alternating_sum(GroupParams p) {
    ZRingElem e(p);
    for (int k = 0; k < p.x_order(); ++k)
        e += ZRingElem::monomial(p, Int(k % 2 == 0 ? 1 : -1), k, 0);
    return e;
}

ZRingElem psi_element(GroupParams p) {
    ZRingElem e(p);
    for (int k = 0; k < p.n; ++k)
        e += ZRingElem::monomial(p, Int(k % 2 == 0 ? 1 : -1), k, 0);
    return e;
}

ZRingElem xpow(GroupParams p, long e) { return ZRingElem::monomial(p, Int(1), e, 0); }
ZRingElem ypow(GroupParams p, long e) { return ZRingElem::monomial(p, Int(1), 0, e); }

IntegerMatrix right_mult_matrix(const ZRingElem& p) {
    const GroupParams gp = p.params();
    const std::size_t m = static_cast<std::size_t>(gp.order());
    IntegerMatrix out(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        const GroupElement g = element_at(gp, r);
        for (std::size_t b = 0; b < m; ++b) {
            if (p.coeffs()[b] == 0) continue;
            out(r, element_index(mul_group(g, element_at(gp, b)))) += p.coeffs()[b];
        }
    }
    return out;
}

IntegerMatrix left_mult_matrix(const ZRingElem& p) {
    const GroupParams gp = p.params();
    const std::size_t m = static_cast<std::size_t>(gp.order());
    IntegerMatrix out(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        const GroupElement g = element_at(gp, r);
        for (std::size_t b = 0; b < m; ++b) {
            if (p.coeffs()[b] == 0) continue;
            out(r, element_index(mul_group(element_at(gp, b), g))) += p.coeffs()[b];
        }
    }
    return out;
}

} // namespace q4n
