#ifndef PP1_LAURENT_HPP
#define PP1_LAURENT_HPP

#include "pp1/rings.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pp1 {

/// Laurent polynomial in one variable: finite map from integer exponents to
/// nonzero coefficients.  The canonical zero is the empty map.
template <Field R>
struct LaurentPoly {
    using Elem = typename R::Elem;

    R ring;
    std::map<int, Elem> terms;

    LaurentPoly() = default;
    explicit LaurentPoly(R r) : ring(r) {}

    bool is_zero() const { return terms.empty(); }
    bool operator==(const LaurentPoly& o) const { return terms == o.terms; }

    std::optional<int> min_exp() const {
        if (terms.empty()) return std::nullopt;
        return terms.begin()->first;
    }
    std::optional<int> max_exp() const {
        if (terms.empty()) return std::nullopt;
        return terms.rbegin()->first;
    }
    Elem coeff(int e) const {
        auto it = terms.find(e);
        return it == terms.end() ? ring.zero() : it->second;
    }
    void set(int e, const Elem& c) {
        if (ring.is_zero(c))
            terms.erase(e);
        else
            terms[e] = c;
    }
};

template <Field R>
LaurentPoly<R> lp_zero(R ring) {
    return LaurentPoly<R>(ring);
}

template <Field R>
LaurentPoly<R> lp_monomial(R ring, int e, const typename R::Elem& c) {
    LaurentPoly<R> f(ring);
    f.set(e, c);
    return f;
}

template <Field R>
LaurentPoly<R> lp_const(R ring, const typename R::Elem& c) {
    return lp_monomial(ring, 0, c);
}

template <Field R>
void lp_check_ring(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    if (!(a.ring == b.ring)) throw std::domain_error("laurent: ring mismatch");
}

template <Field R>
LaurentPoly<R> lp_add(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    lp_check_ring(a, b);
    LaurentPoly<R> r = a;
    for (const auto& [e, c] : b.terms) r.set(e, r.ring.add(r.coeff(e), c));
    return r;
}

template <Field R>
LaurentPoly<R> lp_neg(const LaurentPoly<R>& a) {
    LaurentPoly<R> r(a.ring);
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, a.ring.neg(c));
    return r;
}

template <Field R>
LaurentPoly<R> lp_sub(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    return lp_add(a, lp_neg(b));
}

template <Field R>
LaurentPoly<R> lp_mul(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    lp_check_ring(a, b);
    LaurentPoly<R> r(a.ring);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms)
            r.set(ea + eb, r.ring.add(r.coeff(ea + eb), r.ring.mul(ca, cb)));
    return r;
}

template <Field R>
LaurentPoly<R> lp_scale(const LaurentPoly<R>& a, const typename R::Elem& c) {
    LaurentPoly<R> r(a.ring);
    if (a.ring.is_zero(c)) return r;
    for (const auto& [e, k] : a.terms) r.set(e, a.ring.mul(k, c));
    return r;
}

/// Multiplies by a monomial t^e (exponent shift).
template <Field R>
LaurentPoly<R> lp_shift(const LaurentPoly<R>& a, int e) {
    LaurentPoly<R> r(a.ring);
    for (const auto& [k, c] : a.terms) r.terms.emplace(k + e, c);
    return r;
}

/// The chart change t -> 1/t: exponent e -> -e, coefficients unchanged.
template <Field R>
LaurentPoly<R> lp_invert_var(const LaurentPoly<R>& a) {
    LaurentPoly<R> r(a.ring);
    for (const auto& [e, c] : a.terms) r.terms.emplace(-e, c);
    return r;
}

/// If f is a single term c*t^e returns (e, c); otherwise nullopt.
template <Field R>
std::optional<std::pair<int, typename R::Elem>> lp_unit_part(const LaurentPoly<R>& f) {
    if (f.terms.size() != 1) return std::nullopt;
    const auto& [e, c] = *f.terms.begin();
    return std::make_pair(e, c);
}

// ---------------------------------------------------------------------------
// Square matrices of Laurent polynomials.  The variable name is metadata used
// by printers; 't'/'s' and 'u'/'v' are chart-dual pairs.

inline char dual_variable(char v) {
    switch (v) {
        case 't': return 's';
        case 's': return 't';
        case 'u': return 'v';
        case 'v': return 'u';
        default: return v;
    }
}

template <Field R>
struct LaurentMatrix {
    using Elem = typename R::Elem;

    R ring;
    std::size_t dim = 0;
    char var = 't';
    std::vector<LaurentPoly<R>> e;

    LaurentMatrix() = default;
    LaurentMatrix(R r, std::size_t n, char v)
        : ring(r), dim(n), var(v), e(n * n, LaurentPoly<R>(r)) {}

    LaurentPoly<R>& at(std::size_t i, std::size_t j) { return e[i * dim + j]; }
    const LaurentPoly<R>& at(std::size_t i, std::size_t j) const { return e[i * dim + j]; }

    bool operator==(const LaurentMatrix& o) const { return dim == o.dim && e == o.e; }
};

template <Field R>
LaurentMatrix<R> lmat_identity(R ring, std::size_t n, char var) {
    LaurentMatrix<R> m(ring, n, var);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = lp_const(ring, ring.one());
    return m;
}

template <Field R>
LaurentMatrix<R> lmat_diag_monomials(R ring, char var, const std::vector<int>& exps) {
    LaurentMatrix<R> m(ring, exps.size(), var);
    for (std::size_t i = 0; i < exps.size(); ++i)
        m.at(i, i) = lp_monomial(ring, exps[i], ring.one());
    return m;
}

template <Field R>
LaurentMatrix<R> lmat_mul(const LaurentMatrix<R>& A, const LaurentMatrix<R>& B) {
    if (A.dim != B.dim) throw std::domain_error("lmat_mul: dimension mismatch");
    if (!(A.ring == B.ring)) throw std::domain_error("lmat_mul: ring mismatch");
    LaurentMatrix<R> C(A.ring, A.dim, A.var);
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            LaurentPoly<R> s(A.ring);
            for (std::size_t k = 0; k < A.dim; ++k)
                s = lp_add(s, lp_mul(A.at(i, k), B.at(k, j)));
            C.at(i, j) = std::move(s);
        }
    return C;
}

/// The matrix with every entry's variable inverted; relabels to the dual
/// chart variable.
template <Field R>
LaurentMatrix<R> lmat_invert_var(const LaurentMatrix<R>& A) {
    LaurentMatrix<R> B(A.ring, A.dim, dual_variable(A.var));
    for (std::size_t i = 0; i < A.dim * A.dim; ++i) B.e[i] = lp_invert_var(A.e[i]);
    return B;
}

namespace detail {
template <Field R>
LaurentPoly<R> lmat_det_rec(const LaurentMatrix<R>& A, std::vector<std::size_t>& rows,
                            std::size_t col_from) {
    const R& ring = A.ring;
    if (rows.size() == 1) return A.at(rows[0], col_from);
    LaurentPoly<R> acc(ring);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& entry = A.at(rows[k], col_from);
        if (entry.is_zero()) continue;
        std::size_t removed = rows[k];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(k));
        auto minor = lmat_det_rec(A, rows, col_from + 1);
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(k), removed);
        auto term = lp_mul(entry, minor);
        acc = (k % 2 == 0) ? lp_add(acc, term) : lp_sub(acc, term);
    }
    return acc;
}
}  // namespace detail

/// Determinant by cofactor expansion; exact, intended for small dimensions.
template <Field R>
LaurentPoly<R> lmat_det(const LaurentMatrix<R>& A) {
    if (A.dim == 0) return lp_const(A.ring, A.ring.one());
    std::vector<std::size_t> rows(A.dim);
    for (std::size_t i = 0; i < A.dim; ++i) rows[i] = i;
    return detail::lmat_det_rec(A, rows, 0);
}

/// Adjugate matrix: adj(A) * A == det(A) * I.
template <Field R>
LaurentMatrix<R> lmat_adjugate(const LaurentMatrix<R>& A) {
    const std::size_t n = A.dim;
    LaurentMatrix<R> adj(A.ring, n, A.var);
    if (n == 1) {
        adj.at(0, 0) = lp_const(A.ring, A.ring.one());
        return adj;
    }
    LaurentMatrix<R> minor(A.ring, n - 1, A.var);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc) = A.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            auto d = lmat_det(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? d : lp_neg(d);
        }
    return adj;
}

// in-place elementary operations (used by the factorization routines)

template <Field R>
void lmat_row_add(LaurentMatrix<R>& A, std::size_t dst, std::size_t src,
                  const LaurentPoly<R>& f) {
    for (std::size_t j = 0; j < A.dim; ++j)
        A.at(dst, j) = lp_add(A.at(dst, j), lp_mul(f, A.at(src, j)));
}

template <Field R>
void lmat_col_add(LaurentMatrix<R>& A, std::size_t dst, std::size_t src,
                  const LaurentPoly<R>& f) {
    for (std::size_t i = 0; i < A.dim; ++i)
        A.at(i, dst) = lp_add(A.at(i, dst), lp_mul(f, A.at(i, src)));
}

template <Field R>
void lmat_row_swap(LaurentMatrix<R>& A, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < A.dim; ++j) std::swap(A.at(a, j), A.at(b, j));
}

template <Field R>
void lmat_col_swap(LaurentMatrix<R>& A, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < A.dim; ++i) std::swap(A.at(i, a), A.at(i, b));
}

template <Field R>
void lmat_row_scale(LaurentMatrix<R>& A, std::size_t i, const typename R::Elem& c) {
    for (std::size_t j = 0; j < A.dim; ++j) A.at(i, j) = lp_scale(A.at(i, j), c);
}

template <Field R>
void lmat_col_scale(LaurentMatrix<R>& A, std::size_t j, const typename R::Elem& c) {
    for (std::size_t i = 0; i < A.dim; ++i) A.at(i, j) = lp_scale(A.at(i, j), c);
}

}  // namespace pp1

#endif
