#ifndef PP1_TRANSITION_HPP
#define PP1_TRANSITION_HPP

#include "pp1/jets.hpp"
#include "pp1/laurent.hpp"
#include "pp1/rings.hpp"

#include <algorithm>
#include <stdexcept>

namespace pp1 {

template <Field R>
struct TransitionMatrix {
    int k = 0;
    int n = 0;
    Side side = Side::left;
    LaurentMatrix<R> matrix;
};

/// Structure matrix of the left module: column p, row j.
///
///   n < 0      : (-1)^j binom(j-n-1, p-n-1) t^(n-p-j),  j = p..k
///   n >= k     : (-1)^p binom(n-p, j-p)     t^(n-p-j),  j = p..k
///   0 <= n < k : the second form for p <= n (rows up to n),
///                the first form for p > n.
template <Field R>
TransitionMatrix<R> transition_left(R ring, int k, int n) {
    if (k < 1) throw std::out_of_range("transition_left: k must be >= 1");
    LaurentMatrix<R> m(ring, static_cast<std::size_t>(k) + 1, 't');
    auto low_entry = [&](int j, int p) {  // (-1)^j binom(j-n-1, p-n-1)
        BigInt c = binom(j - n - 1, p - n - 1);
        if (j % 2 != 0) c = -c;
        return c;
    };
    auto high_entry = [&](int j, int p) {  // (-1)^p binom(n-p, j-p)
        BigInt c = binom(n - p, j - p);
        if (p % 2 != 0) c = -c;
        return c;
    };
    for (int p = 0; p <= k; ++p) {
        const bool low_form = n < 0 || (n < k && p > n);
        const int j_hi = low_form ? k : std::min(n, k);  // n-indexed rows terminate
        for (int j = p; j <= j_hi; ++j) {
            BigInt c = low_form ? low_entry(j, p) : high_entry(j, p);
            m.at(j, p) = lp_monomial(ring, n - p - j, ring.from_bigint(c));
        }
    }
    return TransitionMatrix<R>{k, n, Side::left, std::move(m)};
}

/// Structure matrix of the right module: column 0 is (u^n, 0, ..., 0);
/// column p >= 1, row j = p..k carries (-1)^j binom(j-1, p-1) u^(n-p-j).
template <Field R>
TransitionMatrix<R> transition_right(R ring, int k, int n) {
    if (k < 1) throw std::out_of_range("transition_right: k must be >= 1");
    LaurentMatrix<R> m(ring, static_cast<std::size_t>(k) + 1, 'u');
    m.at(0, 0) = lp_monomial(ring, n, ring.one());
    for (int p = 1; p <= k; ++p)
        for (int j = p; j <= k; ++j) {
            BigInt c = binom(j - 1, p - 1);
            if (j % 2 != 0) c = -c;
            m.at(j, p) = lp_monomial(ring, n - p - j, ring.from_bigint(c));
        }
    return TransitionMatrix<R>{k, n, Side::right, std::move(m)};
}

template <Field R>
TransitionMatrix<R> transition_matrix(R ring, int k, int n, Side side) {
    return side == Side::left ? transition_left(ring, k, n) : transition_right(ring, k, n);
}

inline long long det_degree(int k, int n) {
    return static_cast<long long>(k + 1) * n - static_cast<long long>(k) * (k + 1);
}

struct CocycleReport {
    bool formula_matches_oracle = false;
    bool cocycle_identity = false;
    bool det_is_unit_of_expected_degree = false;
    long long det_exponent_expected = 0;
    bool all_pass() const {
        return formula_matches_oracle && cocycle_identity && det_is_unit_of_expected_degree;
    }
};

/// Three consistency checks: closed form equals the jet oracle entrywise;
/// T times the chart-swapped oracle (variable inverted) is the identity; and
/// det T is +-1 times the variable to the expected power.
template <Field R>
CocycleReport check_cocycle(R ring, int k, int n, Side side) {
    CocycleReport rep;
    rep.det_exponent_expected = det_degree(k, n);

    auto T = transition_matrix(ring, k, n, side);
    auto oracle = oracle_transition(ring, k, n, side);
    rep.formula_matches_oracle = (T.matrix == oracle);

    // The expansion with chart roles swapped has the same coordinates as a
    // function of the dual variable; invert to compare in this chart.
    auto swapped = oracle;
    swapped.var = dual_variable(oracle.var);
    auto prod = lmat_mul(T.matrix, lmat_invert_var(swapped));
    rep.cocycle_identity = (prod == lmat_identity(ring, T.matrix.dim, T.matrix.var));

    auto det = lmat_det(T.matrix);
    if (auto unit = lp_unit_part(det)) {
        bool coeff_pm1 = (unit->second == ring.one()) || (unit->second == ring.neg(ring.one()));
        rep.det_is_unit_of_expected_degree =
            coeff_pm1 && unit->first == rep.det_exponent_expected;
    }
    return rep;
}

}  // namespace pp1

#endif
