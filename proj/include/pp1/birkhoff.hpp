#ifndef PP1_BIRKHOFF_HPP
#define PP1_BIRKHOFF_HPP

#include "pp1/laurent.hpp"
#include "pp1/matrix.hpp"
#include "pp1/rings.hpp"
#include "pp1/splitting_type.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pp1 {

/// M = A * diag(t^exponents) * B with A polynomial in t, B polynomial in 1/t,
/// both of constant nonzero determinant.  Exponents are the splitting data.
template <Field R>
struct BirkhoffFactorization {
    LaurentMatrix<R> A;
    std::vector<int> exponents;  // sorted descending, matching the diagonal order
    LaurentMatrix<R> B;
};

namespace detail {

inline long long ceil_div(long long x, long long y) {
    long long q = x / y;
    if (q * y < x) ++q;
    return q;
}

/// Accumulated factorization state with the invariant
/// original == A * M * B (and Ainv = A^-1, Binv = B^-1).
template <Field R>
struct BkState {
    LaurentMatrix<R> M, A, Ainv, B, Binv;

    // row_dst += f * row_src on M
    void row_add(std::size_t dst, std::size_t src, const LaurentPoly<R>& f) {
        lmat_row_add(M, dst, src, f);
        auto nf = lp_neg(f);
        lmat_col_add(A, src, dst, nf);
        lmat_row_add(Ainv, dst, src, f);
    }
    // col_dst += g * col_src on M
    void col_add(std::size_t dst, std::size_t src, const LaurentPoly<R>& g) {
        lmat_col_add(M, dst, src, g);
        auto ng = lp_neg(g);
        lmat_row_add(B, src, dst, ng);
        lmat_col_add(Binv, dst, src, g);
    }
    void row_scale(std::size_t i, const typename R::Elem& c) {
        lmat_row_scale(M, i, c);
        lmat_col_scale(A, i, M.ring.inv(c));
        lmat_row_scale(Ainv, i, c);
    }
    // full-matrix left operation: M := P*M
    void left_apply(const LaurentMatrix<R>& P, const LaurentMatrix<R>& Pinv) {
        M = lmat_mul(P, M);
        A = lmat_mul(A, Pinv);
        Ainv = lmat_mul(P, Ainv);
    }
    // full-matrix right operation: M := M*Q
    void right_apply(const LaurentMatrix<R>& Q, const LaurentMatrix<R>& Qinv) {
        M = lmat_mul(M, Q);
        B = lmat_mul(Qinv, B);
        Binv = lmat_mul(Binv, Q);
    }
};

template <Field R>
LaurentPoly<R> poly_quotient(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    const R& ring = a.ring;
    LaurentPoly<R> q(ring), rem = a;
    const int db = *b.max_exp();
    const auto lead_b = b.coeff(db);
    while (!rem.is_zero() && *rem.max_exp() >= db) {
        int e = *rem.max_exp() - db;
        auto c = ring.div(rem.coeff(*rem.max_exp()), lead_b);
        q.set(e, ring.add(q.coeff(e), c));
        rem = lp_sub(rem, lp_shift(lp_scale(b, c), e));
    }
    return q;
}

/// Row operations over F[t] carrying a primitive polynomial column to e_0.
/// Returns (P, Pinv) with P*v = e_0 and det(P) a nonzero constant.
template <Field R>
std::pair<LaurentMatrix<R>, LaurentMatrix<R>> column_completion_ops(
    R ring, const std::vector<LaurentPoly<R>>& v, char var) {
    const std::size_t n = v.size();
    auto P = lmat_identity(ring, n, var);
    auto Pinv = lmat_identity(ring, n, var);
    auto w = v;

    auto nonzero_indices = [&]() {
        std::vector<std::size_t> nz;
        for (std::size_t i = 0; i < n; ++i)
            if (!w[i].is_zero()) nz.push_back(i);
        return nz;
    };

    for (;;) {
        auto nz = nonzero_indices();
        if (nz.empty()) throw std::logic_error("column_completion_ops: zero column");
        if (nz.size() == 1) break;
        std::size_t piv = nz[0];
        for (auto i : nz)
            if (*w[i].max_exp() < *w[piv].max_exp()) piv = i;
        for (auto i : nz) {
            if (i == piv) continue;
            auto q = poly_quotient(w[i], w[piv]);
            if (q.is_zero()) continue;
            auto nq = lp_neg(q);
            w[i] = lp_add(w[i], lp_mul(nq, w[piv]));
            lmat_row_add(P, i, piv, nq);
            lmat_col_add(Pinv, piv, i, q);
        }
    }

    std::size_t s = nonzero_indices()[0];
    if (*w[s].max_exp() != 0 || *w[s].min_exp() != 0)
        throw std::logic_error("column_completion_ops: column is not primitive");
    if (s != 0) {
        std::swap(w[0], w[s]);
        lmat_row_swap(P, 0, s);
        lmat_col_swap(Pinv, 0, s);
    }
    auto c = w[0].coeff(0);
    lmat_row_scale(P, 0, ring.inv(c));
    lmat_col_scale(Pinv, 0, c);
    return {P, Pinv};
}

template <Field R>
LaurentMatrix<R> embed_block(const LaurentMatrix<R>& sub, std::size_t dim, std::size_t off,
                             char var) {
    auto full = lmat_identity(sub.ring, dim, var);
    for (std::size_t i = 0; i < sub.dim; ++i)
        for (std::size_t j = 0; j < sub.dim; ++j) full.at(off + i, off + j) = sub.at(i, j);
    return full;
}

template <Field R>
LaurentMatrix<R> trailing_block(const LaurentMatrix<R>& M, std::size_t off) {
    LaurentMatrix<R> sub(M.ring, M.dim - off, M.var);
    for (std::size_t i = 0; i < sub.dim; ++i)
        for (std::size_t j = 0; j < sub.dim; ++j) sub.at(i, j) = M.at(off + i, off + j);
    return sub;
}

/// Highest twist a <= start admitting a section: a nonzero v1 over F[1/t]
/// with M*v1 in t^a * F[t]^n.  Returns the section's chart-1 column, or
/// nullopt when none exists at level a.
template <Field R>
std::optional<std::vector<LaurentPoly<R>>> section_at(const LaurentMatrix<R>& M, int a,
                                                      int ord_minv) {
    const R& ring = M.ring;
    const std::size_t n = M.dim;
    const int depth = std::max(0, -(a + ord_minv));  // v1 exponents in [-depth, 0]

    int ord_m = 0;
    bool have = false;
    for (const auto& f : M.e)
        if (auto e = f.min_exp()) {
            ord_m = have ? std::min(ord_m, *e) : *e;
            have = true;
        }
    const int e_lo = ord_m - depth;

    const std::size_t unknowns = n * static_cast<std::size_t>(depth + 1);
    const std::size_t win = a > e_lo ? static_cast<std::size_t>(a - e_lo) : 0;

    std::vector<LaurentPoly<R>> v1(n, LaurentPoly<R>(ring));
    if (win == 0) {
        v1[0] = lp_const(ring, ring.one());
        return v1;
    }

    ExactMatrix<R> sys(ring, n * win, unknowns);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t w = 0; w < win; ++w) {
            const int e = e_lo + static_cast<int>(w);
            for (std::size_t i = 0; i < n; ++i)
                for (int d = 0; d <= depth; ++d)
                    sys.at(r * win + w, i * static_cast<std::size_t>(depth + 1) +
                                            static_cast<std::size_t>(d)) =
                        M.at(r, i).coeff(e + d);
        }
    auto sol = solve_affine(sys, std::vector<typename R::Elem>(n * win, ring.zero()));
    if (sol.nullspace.empty()) return std::nullopt;
    const auto& x = sol.nullspace.front();
    for (std::size_t i = 0; i < n; ++i)
        for (int d = 0; d <= depth; ++d)
            v1[i].set(-d, x[i * static_cast<std::size_t>(depth + 1) + static_cast<std::size_t>(d)]);
    return v1;
}

template <Field R>
void factor_level(BkState<R>& st, std::size_t off, std::optional<int> hint,
                  std::vector<int>& exps) {
    const R& ring = st.M.ring;
    const std::size_t dim = st.M.dim;
    const std::size_t nsub = dim - off;

    if (nsub == 1) {
        auto u = lp_unit_part(st.M.at(off, off));
        if (!u) throw std::logic_error("birkhoff: trailing entry is not a monomial");
        st.row_scale(off, ring.inv(u->second));
        exps[off] = u->first;
        return;
    }

    auto sub = trailing_block(st.M, off);
    auto det = lmat_det(sub);
    auto du = lp_unit_part(det);
    if (!du) throw std::logic_error("birkhoff: block determinant is not a monomial");
    const int d_exp = du->first;

    auto adj = lmat_adjugate(sub);
    int ord_adj = 0;
    bool have = false;
    for (const auto& f : adj.e)
        if (auto e = f.min_exp()) {
            ord_adj = have ? std::min(ord_adj, *e) : *e;
            have = true;
        }
    const int ord_minv = ord_adj - d_exp;

    int top = 0;
    have = false;
    for (const auto& f : sub.e)
        if (auto e = f.max_exp()) {
            top = have ? std::max(top, *e) : *e;
            have = true;
        }
    int start = hint ? std::min(top, *hint) : top;
    const long long floor_a = ceil_div(d_exp, static_cast<long long>(nsub));

    std::optional<std::vector<LaurentPoly<R>>> v1;
    int a = start;
    for (; a >= floor_a; --a) {
        v1 = section_at(sub, a, ord_minv);
        if (v1) break;
    }
    if (!v1) throw std::logic_error("birkhoff: no section found above the mean twist");

    // chart-0 column of the section
    std::vector<LaurentPoly<R>> v0(nsub, LaurentPoly<R>(ring));
    for (std::size_t r = 0; r < nsub; ++r) {
        LaurentPoly<R> acc(ring);
        for (std::size_t i = 0; i < nsub; ++i) acc = lp_add(acc, lp_mul(sub.at(r, i), (*v1)[i]));
        if (auto e = acc.min_exp(); e && *e < a)
            throw std::logic_error("birkhoff: section has a pole on chart 0");
        v0[r] = lp_shift(acc, -a);
    }

    auto [P, Pinv] = column_completion_ops(ring, v0, st.M.var);
    st.left_apply(embed_block(P, dim, off, st.M.var), embed_block(Pinv, dim, off, st.M.var));

    std::vector<LaurentPoly<R>> v1s(nsub, LaurentPoly<R>(ring));
    for (std::size_t i = 0; i < nsub; ++i) v1s[i] = lp_invert_var((*v1)[i]);
    auto [W, Winv] = column_completion_ops(ring, v1s, st.M.var);
    LaurentMatrix<R> Q = lmat_invert_var(Winv), Qinv = lmat_invert_var(W);
    Q.var = Qinv.var = st.M.var;
    st.right_apply(embed_block(Q, dim, off, st.M.var), embed_block(Qinv, dim, off, st.M.var));

    for (std::size_t i = off; i < dim; ++i) {
        const auto& entry = st.M.at(i, off);
        bool ok = (i == off) ? (entry == lp_monomial(ring, a, ring.one())) : entry.is_zero();
        if (!ok) throw std::logic_error("birkhoff: pivot column not in split form");
    }
    exps[off] = a;

    factor_level(st, off + 1, a, exps);

    // clear the remaining entries of row `off`; the trailing block is now
    // diag(t^b_j) with every b_j <= a, so low and high passes cover everything
    for (std::size_t j = off + 1; j < dim; ++j) {
        const int b = exps[j];
        LaurentPoly<R> low(ring), high(ring);
        for (const auto& [e, c] : st.M.at(off, j).terms)
            (e <= a ? low : high).set(e, c);
        if (!low.is_zero()) st.col_add(j, off, lp_shift(lp_neg(low), -a));
        if (!high.is_zero()) st.row_add(off, j, lp_shift(lp_neg(high), -b));
        if (!st.M.at(off, j).is_zero())
            throw std::logic_error("birkhoff: uncleared extension term");
    }
}

}  // namespace detail

/// Factorization of an invertible Laurent matrix over a field.  Throws
/// std::domain_error when det(M) is not a unit (a nonzero monomial).
template <Field R>
BirkhoffFactorization<R> birkhoff_factor(const LaurentMatrix<R>& M) {
    const R& ring = M.ring;
    auto du = lp_unit_part(lmat_det(M));
    if (!du || ring.is_zero(du->second))
        throw std::domain_error("birkhoff_factor: determinant is not a unit");

    detail::BkState<R> st{M, lmat_identity(ring, M.dim, M.var), lmat_identity(ring, M.dim, M.var),
                          lmat_identity(ring, M.dim, M.var), lmat_identity(ring, M.dim, M.var)};
    std::vector<int> exps(M.dim, 0);
    detail::factor_level(st, 0, std::nullopt, exps);

    if (st.M != lmat_diag_monomials(ring, M.var, exps))
        throw std::logic_error("birkhoff_factor: middle factor is not monomial diagonal");
    if (!std::is_sorted(exps.rbegin(), exps.rend()))
        throw std::logic_error("birkhoff_factor: exponents not sorted");
    for (const auto& f : st.A.e)
        if (auto e = f.min_exp(); e && *e < 0)
            throw std::logic_error("birkhoff_factor: left factor not polynomial");
    for (const auto& f : st.B.e)
        if (auto e = f.max_exp(); e && *e > 0)
            throw std::logic_error("birkhoff_factor: right factor not co-polynomial");
    for (const auto* m : {&st.A, &st.B}) {
        auto u = lp_unit_part(lmat_det(*m));
        if (!u || u->first != 0 || ring.is_zero(u->second))
            throw std::logic_error("birkhoff_factor: outer factor determinant not constant");
    }
    return BirkhoffFactorization<R>{std::move(st.A), std::move(exps), std::move(st.B)};
}

/// Splitting type read off the factorization exponents.  The orientation is
/// calibrated so diagonal transition matrices map to their own twists.
template <Field R>
SplittingType splitting_type_birkhoff(const LaurentMatrix<R>& M) {
    auto f = birkhoff_factor(M);
    return make_type(f.exponents);
}

}  // namespace pp1

#endif
