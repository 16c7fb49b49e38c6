#ifndef PP1_JETS_HPP
#define PP1_JETS_HPP

#include "pp1/laurent.hpp"
#include "pp1/rings.hpp"

#include <stdexcept>
#include <vector>

namespace pp1 {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

/// Element of the order-k truncated neighborhood ring over one chart:
/// coords[j] is the Laurent coefficient of the j-th power of the diagonal
/// generator (dt or du).  Multiplication is convolution truncated at order k.
template <Field R>
struct JetElement {
    R ring;
    int order = 0;
    char var = 't';
    std::vector<LaurentPoly<R>> coords;

    JetElement() = default;
    JetElement(R r, int k, char v)
        : ring(r), order(k), var(v), coords(static_cast<std::size_t>(k) + 1, LaurentPoly<R>(r)) {}

    bool operator==(const JetElement& o) const { return order == o.order && coords == o.coords; }
};

template <Field R>
JetElement<R> jet_mul(const JetElement<R>& a, const JetElement<R>& b) {
    if (a.order != b.order) throw std::domain_error("jet_mul: order mismatch");
    if (!(a.ring == b.ring)) throw std::domain_error("jet_mul: ring mismatch");
    JetElement<R> r(a.ring, a.order, a.var);
    for (int i = 0; i <= a.order; ++i)
        for (int j = 0; i + j <= a.order; ++j)
            r.coords[i + j] = lp_add(r.coords[i + j], lp_mul(a.coords[i], b.coords[j]));
    return r;
}

/// Jet with a single diagonal component: coeff * d^shift.
template <Field R>
JetElement<R> jet_monomial(R ring, int k, char var, const LaurentPoly<R>& coeff, int shift) {
    if (shift < 0 || shift > k) throw std::out_of_range("jet_monomial: shift out of range");
    JetElement<R> r(ring, k, var);
    r.coords[shift] = coeff;
    return r;
}

/// Coefficients of (1+x)^m modulo x^(k+1); entry i equals series_coeff(m, i).
inline std::vector<BigInt> trunc_pow(long long m, int k) {
    if (k < 0) throw std::out_of_range("trunc_pow: negative order");
    std::vector<BigInt> r;
    r.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) r.push_back(series_coeff(m, i));
    return r;
}

/// The chart coordinate of the opposite factor, raised to the power m, as a
/// truncated jet: (x + d)^m = x^m * (1 + d/x)^m expanded with trunc_pow.
template <Field R>
JetElement<R> jet_opposite_coord_pow(R ring, int k, char var, long long m) {
    JetElement<R> r(ring, k, var);
    auto coeffs = trunc_pow(m, k);
    for (int i = 0; i <= k; ++i)
        r.coords[i] = lp_monomial(ring, static_cast<int>(m) - i, ring.from_bigint(coeffs[i]));
    return r;
}

/// Coordinates of ds^p (x) x_1^n in the chart-0 left basis {dt^j (x) x_0^n}:
/// ds^p = (-1)^p t^(-p) dt^p u^(-p) with u = t + dt, so the whole expression
/// is (-1)^p t^(-p) dt^p u^(n-p), expanded in the truncated ring.
template <Field R>
JetElement<R> jet_expand_left(R ring, int k, int n, int p) {
    if (p < 0 || p > k) throw std::out_of_range("jet_expand_left: p out of range");
    auto sign = (p % 2 != 0) ? ring.neg(ring.one()) : ring.one();
    auto front = jet_monomial(ring, k, 't', lp_monomial(ring, -p, sign), p);
    return jet_mul(front, jet_opposite_coord_pow(ring, k, 't', n - p));
}

/// Coordinates of dv^p (x) x_1^n in the chart-0 right basis {du^j (x) x_0^n}:
/// dv^p = (-1)^p u^(-p) du^p t^(-p) with t = u + du, so the whole expression
/// is (-1)^p u^(n-p) du^p t^(-p).
template <Field R>
JetElement<R> jet_expand_right(R ring, int k, int n, int p) {
    if (p < 0 || p > k) throw std::out_of_range("jet_expand_right: p out of range");
    auto sign = (p % 2 != 0) ? ring.neg(ring.one()) : ring.one();
    auto front = jet_monomial(ring, k, 'u', lp_monomial(ring, n - p, sign), p);
    return jet_mul(front, jet_opposite_coord_pow(ring, k, 'u', -p));
}

/// Transition matrix computed column-by-column from the jet expansions; the
/// ground truth the closed forms are checked against.
template <Field R>
LaurentMatrix<R> oracle_transition(R ring, int k, int n, Side side) {
    if (k < 1) throw std::out_of_range("oracle_transition: k must be >= 1");
    LaurentMatrix<R> m(ring, static_cast<std::size_t>(k) + 1, side == Side::left ? 't' : 'u');
    for (int p = 0; p <= k; ++p) {
        auto col = side == Side::left ? jet_expand_left(ring, k, n, p)
                                      : jet_expand_right(ring, k, n, p);
        for (int j = 0; j <= k; ++j) m.at(j, p) = col.coords[j];
    }
    return m;
}

}  // namespace pp1

#endif
