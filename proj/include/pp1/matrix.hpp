#ifndef PP1_MATRIX_HPP
#define PP1_MATRIX_HPP

#include "pp1/rings.hpp"

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

namespace pp1 {

/// Dense matrix over an exact field, row-major.
template <Field R>
struct ExactMatrix {
    using Elem = typename R::Elem;

    R ring;
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> entries;

    ExactMatrix() = default;
    ExactMatrix(R r, std::size_t nr, std::size_t nc)
        : ring(r), rows(nr), cols(nc), entries(nr * nc, r.zero()) {}

    Elem& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static ExactMatrix identity(R r, std::size_t n) {
        ExactMatrix m(r, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = r.one();
        return m;
    }
};

template <Field R>
std::vector<typename R::Elem> mat_vec(const ExactMatrix<R>& A,
                                      const std::vector<typename R::Elem>& x) {
    if (x.size() != A.cols) throw std::domain_error("mat_vec: dimension mismatch");
    std::vector<typename R::Elem> y(A.rows, A.ring.zero());
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            y[i] = A.ring.add(y[i], A.ring.mul(A.at(i, j), x[j]));
    return y;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <Field R>
typename R::Elem det_exact(const ExactMatrix<R>& M) {
    if (M.rows != M.cols) throw std::domain_error("det_exact: matrix is not square");
    const R& ring = M.ring;
    const std::size_t n = M.rows;
    if (n == 0) return ring.one();
    ExactMatrix<R> a = M;
    typename R::Elem prev = ring.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // first nonzero pivot in column order
        std::size_t piv = k;
        while (piv < n && ring.is_zero(a.at(piv, k))) ++piv;
        if (piv == n) return ring.zero();
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = ring.sub(ring.mul(a.at(i, j), a.at(k, k)),
                                    ring.mul(a.at(i, k), a.at(k, j)));
                a.at(i, j) = ring.div(num, prev);
            }
            a.at(i, k) = ring.zero();
        }
        prev = a.at(k, k);
    }
    auto d = a.at(n - 1, n - 1);
    return negate ? ring.neg(d) : d;
}

enum class SolKind { unique, parametrized, empty };

/// Complete solution set of an affine system: a particular solution plus a
/// nullspace basis.  Empty iff the system is inconsistent.
template <Field R>
struct SolutionSet {
    SolKind kind = SolKind::empty;
    std::vector<typename R::Elem> particular;
    std::vector<std::vector<typename R::Elem>> nullspace;
};

template <Field R>
SolutionSet<R> solve_affine(const ExactMatrix<R>& A, const std::vector<typename R::Elem>& b) {
    if (b.size() != A.rows) throw std::domain_error("solve_affine: dimension mismatch");
    const R& ring = A.ring;
    const std::size_t m = A.rows, n = A.cols;

    // reduced row echelon form of [A | b]
    ExactMatrix<R> w(ring, m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = A.at(i, j);
        w.at(i, n) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && ring.is_zero(w.at(piv, c))) ++piv;
        if (piv == m) continue;
        if (piv != r)
            for (std::size_t j = 0; j <= n; ++j) std::swap(w.at(r, j), w.at(piv, j));
        auto s = ring.inv(w.at(r, c));
        for (std::size_t j = c; j <= n; ++j) w.at(r, j) = ring.mul(w.at(r, j), s);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || ring.is_zero(w.at(i, c))) continue;
            auto f = w.at(i, c);
            for (std::size_t j = c; j <= n; ++j)
                w.at(i, j) = ring.sub(w.at(i, j), ring.mul(f, w.at(r, j)));
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (!ring.is_zero(w.at(i, n))) return SolutionSet<R>{};  // inconsistent

    SolutionSet<R> sol;
    sol.particular.assign(n, ring.zero());
    for (std::size_t i = 0; i < pivot_col.size(); ++i) sol.particular[pivot_col[i]] = w.at(i, n);

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<typename R::Elem> v(n, ring.zero());
        v[f] = ring.one();
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = ring.neg(w.at(i, f));
        sol.nullspace.push_back(std::move(v));
    }
    sol.kind = sol.nullspace.empty() ? SolKind::unique : SolKind::parametrized;
    return sol;
}

enum class PickStatus { found, not_found, inconclusive };

template <Field R>
struct PickResult {
    PickStatus status = PickStatus::not_found;
    std::vector<typename R::Elem> value;
};

/// Searches the solution set for a member whose coordinates at unit_positions
/// are all nonzero.  Exhaustive (hence definitive) over a finite field;
/// bounded-heuristic over Q, where exhaustion reports inconclusive.
template <Field R>
PickResult<R> pick_solution(const R& ring, const SolutionSet<R>& S,
                            const std::vector<std::size_t>& unit_positions) {
    if (S.kind == SolKind::empty)
        throw std::invalid_argument("pick_solution: empty solution set");
    auto ok = [&](const std::vector<typename R::Elem>& v) {
        for (auto pos : unit_positions)
            if (ring.is_zero(v[pos])) return false;
        return true;
    };
    if (S.kind == SolKind::unique) {
        if (ok(S.particular)) return {PickStatus::found, S.particular};
        return {PickStatus::not_found, {}};
    }

    const std::size_t n = S.particular.size();
    auto combine = [&](const std::vector<typename R::Elem>& coeffs) {
        std::vector<typename R::Elem> v = S.particular;
        for (std::size_t t = 0; t < S.nullspace.size(); ++t)
            for (std::size_t i = 0; i < n; ++i)
                v[i] = ring.add(v[i], ring.mul(coeffs[t], S.nullspace[t][i]));
        return v;
    };

    if (auto card = ring.cardinality()) {
        // finite field: enumerate every member in lexicographic coefficient order
        const std::uint64_t p = *card;
        std::vector<std::uint64_t> ctr(S.nullspace.size(), 0);
        while (true) {
            std::vector<typename R::Elem> coeffs;
            coeffs.reserve(ctr.size());
            for (auto c : ctr) coeffs.push_back(ring.from_int(static_cast<long long>(c)));
            auto v = combine(coeffs);
            if (ok(v)) return {PickStatus::found, std::move(v)};
            std::size_t t = 0;
            while (t < ctr.size() && ++ctr[t] == p) ctr[t++] = 0;
            if (t == ctr.size()) break;
        }
        return {PickStatus::not_found, {}};
    }

    // Q: particular, then particular + each basis vector, then bounded random
    // small-integer combinations
    if (ok(S.particular)) return {PickStatus::found, S.particular};
    for (std::size_t t = 0; t < S.nullspace.size(); ++t) {
        std::vector<typename R::Elem> coeffs(S.nullspace.size(), ring.zero());
        coeffs[t] = ring.one();
        auto v = combine(coeffs);
        if (ok(v)) return {PickStatus::found, std::move(v)};
    }
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<typename R::Elem> coeffs;
        coeffs.reserve(S.nullspace.size());
        for (std::size_t t = 0; t < S.nullspace.size(); ++t)
            coeffs.push_back(ring.from_int(dist(rng)));
        auto v = combine(coeffs);
        if (ok(v)) return {PickStatus::found, std::move(v)};
    }
    return {PickStatus::inconclusive, {}};
}

}  // namespace pp1

#endif
