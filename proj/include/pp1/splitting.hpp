#ifndef PP1_SPLITTING_HPP
#define PP1_SPLITTING_HPP

#include "pp1/birkhoff.hpp"
#include "pp1/matrix.hpp"
#include "pp1/splitting_type.hpp"
#include "pp1/transition.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pp1 {

/// The five families of binomial linear systems whose solutions produce the
/// local splitting maps.
enum class SystemFamily {
    left_low,       // left, n < 0: unknowns x, one system per summand l = 0..k
    left_mid_unit,  // left, 0 <= n < k: unknowns y, summands of twist 0
    left_mid_tail,  // left, 0 <= n < k: unknowns z, summands of twist -k-1
    left_high,      // left, n >= k: unknowns x, same ansatz as left_low
    right_tail      // right: unknowns w, summands of twist n-k-1
};

inline const char* family_name(SystemFamily f) {
    switch (f) {
        case SystemFamily::left_low: return "left_low";
        case SystemFamily::left_mid_unit: return "left_mid_unit";
        case SystemFamily::left_mid_tail: return "left_mid_tail";
        case SystemFamily::left_high: return "left_high";
        case SystemFamily::right_tail: return "right_tail";
    }
    return "?";
}

/// Integer coefficient, sign included, of the unknown at position `pos` in
/// the family's combination value at row j.  Position p corresponds to the
/// unknown with subscript index-p (so the last position is the unit slot).
inline BigInt scheme_coeff(SystemFamily fam, int n, int j, int pos) {
    switch (fam) {
        case SystemFamily::left_low:
            return binom(j - n - 1, pos - n - 1);
        case SystemFamily::left_mid_unit:
        case SystemFamily::left_high: {
            BigInt c = binom(n - pos, j - pos);
            return (pos % 2 != 0) ? BigInt(-c) : c;
        }
        case SystemFamily::left_mid_tail:
            return binom(j - n - 1, pos);
        case SystemFamily::right_tail:
            return binom(j - 1, pos);
    }
    return 0;
}

template <Field R>
struct SplittingSystem {
    SystemFamily family;
    int k = 0, n = 0;
    int index = 0;  // the summand index (l or m)
    ExactMatrix<R> matrix;
    std::vector<typename R::Elem> rhs;  // unit vector e_1
    std::vector<std::string> unknown_names;
    int first_row = 0;  // value of j for the first constraint row
};

namespace detail {

template <Field R>
SplittingSystem<R> make_system(R ring, SystemFamily fam, int k, int n, int index, int j_lo,
                               int j_hi, char letter) {
    const int size = index + 1;
    SplittingSystem<R> sys{fam, k, n, index, ExactMatrix<R>(ring, static_cast<std::size_t>(size),
                                                            static_cast<std::size_t>(size)),
                           {}, {}, j_lo};
    if (j_hi - j_lo + 1 != size)
        throw std::logic_error("make_system: non-square constraint block");
    for (int r = 0; r < size; ++r)
        for (int pos = 0; pos < size; ++pos)
            sys.matrix.at(static_cast<std::size_t>(r), static_cast<std::size_t>(pos)) =
                ring.from_bigint(scheme_coeff(fam, n, j_lo + r, pos));
    sys.rhs.assign(static_cast<std::size_t>(size), ring.zero());
    sys.rhs[0] = ring.one();
    for (int pos = 0; pos < size; ++pos)
        sys.unknown_names.push_back(std::string(1, letter) + "^" + std::to_string(index) + "_" +
                                    std::to_string(index - pos));
    return sys;
}

}  // namespace detail

/// Builds the binomial systems whose simultaneous solvability (with unit last
/// coordinates) produces a splitting certificate for (k, n, side).
template <Field R>
std::vector<SplittingSystem<R>> build_systems(R ring, int k, int n, Side side) {
    if (k < 1) throw std::out_of_range("build_systems: k must be >= 1");
    std::vector<SplittingSystem<R>> out;
    if (side == Side::right) {
        for (int l = 0; l <= k - 1; ++l)
            out.push_back(detail::make_system(ring, SystemFamily::right_tail, k, n, l, k - l, k, 'w'));
        return out;
    }
    if (n < 0) {
        for (int l = 0; l <= k; ++l)
            out.push_back(detail::make_system(ring, SystemFamily::left_low, k, n, l, k - l, k, 'x'));
    } else if (n >= k) {
        for (int l = 0; l <= k; ++l)
            out.push_back(detail::make_system(ring, SystemFamily::left_high, k, n, l, k - l, k, 'x'));
    } else {
        for (int l = 0; l <= n; ++l)
            out.push_back(
                detail::make_system(ring, SystemFamily::left_mid_unit, k, n, l, n - l, n, 'y'));
        for (int m = 0; m <= k - n - 1; ++m)
            out.push_back(
                detail::make_system(ring, SystemFamily::left_mid_tail, k, n, m, k - m, k, 'z'));
    }
    return out;
}

enum class FailureReason { none, system_empty, unit_not_found, inconclusive, gluing_failed };

inline const char* failure_reason_name(FailureReason r) {
    switch (r) {
        case FailureReason::none: return "none";
        case FailureReason::system_empty: return "SystemEmpty";
        case FailureReason::unit_not_found: return "UnitNotFound";
        case FailureReason::inconclusive: return "Inconclusive";
        case FailureReason::gluing_failed: return "GluingFailed";
    }
    return "?";
}

template <Field R>
struct SolutionBundle {
    std::vector<std::vector<typename R::Elem>> solutions;  // one per system, in build order
};

struct SolveFailure {
    int system_index = -1;
    FailureReason reason = FailureReason::none;
};

/// Solves every system and picks a member with the unit slot (the last
/// coordinate) nonzero; fails on the first system that is inconsistent or
/// admits no unit representative.
template <Field R>
std::variant<SolutionBundle<R>, SolveFailure> solve_systems(
    const std::vector<SplittingSystem<R>>& systems, R ring) {
    SolutionBundle<R> bundle;
    for (std::size_t i = 0; i < systems.size(); ++i) {
        auto sol = solve_affine(systems[i].matrix, systems[i].rhs);
        if (sol.kind == SolKind::empty)
            return SolveFailure{static_cast<int>(i), FailureReason::system_empty};
        std::vector<std::size_t> unit_pos{systems[i].matrix.cols - 1};
        auto pick = pick_solution(ring, sol, unit_pos);
        if (pick.status == PickStatus::not_found)
            return SolveFailure{static_cast<int>(i), FailureReason::unit_not_found};
        if (pick.status == PickStatus::inconclusive)
            return SolveFailure{static_cast<int>(i), FailureReason::inconclusive};
        bundle.solutions.push_back(std::move(pick.value));
    }
    return bundle;
}

/// A self-validating witness of a splitting: source twists plus the two local
/// matrices, with the solved coefficients they were assembled from.
template <Field R>
struct SplittingCertificate {
    int k = 0, n = 0;
    Side side = Side::left;
    R ring;
    std::vector<int> source_twists;  // per column
    LaurentMatrix<R> phi0;           // chart-0 map, variable t (left) or u (right)
    LaurentMatrix<R> phi1;           // chart-1 map, variable s (left) or v (right)
    std::vector<std::vector<typename R::Elem>> solutions;
};

/// The characteristic-zero splitting type.
inline SplittingType splitting_type_char0(int k, int n, Side side) {
    if (k < 1) throw std::out_of_range("splitting_type_char0: k must be >= 1");
    std::vector<int> tw;
    if (side == Side::right) {
        tw.push_back(n);
        for (int i = 0; i < k; ++i) tw.push_back(n - k - 1);
    } else if (n < 0 || n >= k) {
        tw.assign(static_cast<std::size_t>(k) + 1, n - k);
    } else {
        for (int i = 0; i <= n; ++i) tw.push_back(0);
        for (int i = 0; i < k - n; ++i) tw.push_back(-k - 1);
    }
    return make_type(std::move(tw));
}

namespace detail {

/// Combination value of a solved system at row j (the scheme sum).
template <Field R>
typename R::Elem combo_value(R ring, SystemFamily fam, int n,
                             const std::vector<typename R::Elem>& sol, int j) {
    auto acc = ring.zero();
    for (int pos = 0; pos < static_cast<int>(sol.size()); ++pos)
        acc = ring.add(acc, ring.mul(sol[static_cast<std::size_t>(pos)],
                                     ring.from_bigint(scheme_coeff(fam, n, j, pos))));
    return acc;
}

}  // namespace detail

/// Assembles the two local matrices from the solved coefficient bundle.
template <Field R>
SplittingCertificate<R> assemble_certificate(R ring, int k, int n, Side side,
                                             const SolutionBundle<R>& bundle) {
    const std::size_t dim = static_cast<std::size_t>(k) + 1;
    SplittingCertificate<R> cert;
    cert.k = k;
    cert.n = n;
    cert.side = side;
    cert.ring = ring;
    cert.solutions = bundle.solutions;

    auto expect = [&](std::size_t want) {
        if (bundle.solutions.size() != want)
            throw std::invalid_argument("assemble_certificate: incomplete bundle");
    };

    if (side == Side::right) {
        expect(static_cast<std::size_t>(k));
        cert.phi0 = LaurentMatrix<R>(ring, dim, 'u');
        cert.phi1 = LaurentMatrix<R>(ring, dim, 'v');
        cert.source_twists.assign(dim, n - k - 1);
        cert.source_twists[0] = n;
        cert.phi0.at(0, 0) = lp_const(ring, ring.one());
        cert.phi1.at(0, 0) = lp_const(ring, ring.one());
        for (int l = 0; l <= k - 1; ++l) {
            const auto& sol = bundle.solutions[static_cast<std::size_t>(l)];
            const std::size_t col = static_cast<std::size_t>(l) + 1;
            for (int j = 1; j <= k - l; ++j) {
                auto f = detail::combo_value(ring, SystemFamily::right_tail, n, sol, j);
                if (j % 2 != 0) f = ring.neg(f);
                cert.phi0.at(static_cast<std::size_t>(j), col) =
                    lp_monomial(ring, k - l - j, f);
            }
            for (int i = 0; i <= l; ++i)
                cert.phi1.at(static_cast<std::size_t>(i) + 1, col) =
                    lp_monomial(ring, l - i, sol[static_cast<std::size_t>(i)]);
        }
        return cert;
    }

    cert.phi0 = LaurentMatrix<R>(ring, dim, 't');
    cert.phi1 = LaurentMatrix<R>(ring, dim, 's');

    if (n < 0 || n >= k) {
        expect(dim);
        const auto fam = n < 0 ? SystemFamily::left_low : SystemFamily::left_high;
        cert.source_twists.assign(dim, n - k);
        for (int l = 0; l <= k; ++l) {
            const auto& sol = bundle.solutions[static_cast<std::size_t>(l)];
            const std::size_t col = static_cast<std::size_t>(l);
            for (int j = 0; j <= k - l; ++j) {
                auto c = detail::combo_value(ring, fam, n, sol, j);
                if (n < 0 && j % 2 != 0) c = ring.neg(c);
                cert.phi0.at(static_cast<std::size_t>(j), col) =
                    lp_monomial(ring, k - l - j, c);
            }
            for (int p = 0; p <= l; ++p)
                cert.phi1.at(static_cast<std::size_t>(p), col) =
                    lp_monomial(ring, l - p, sol[static_cast<std::size_t>(p)]);
        }
        return cert;
    }

    // 0 <= n < k: n+1 columns of twist 0 and k-n columns of twist -k-1
    expect(static_cast<std::size_t>(k) + 1);
    cert.source_twists.assign(dim, -k - 1);
    for (int l = 0; l <= n; ++l) cert.source_twists[static_cast<std::size_t>(l)] = 0;
    for (int l = 0; l <= n; ++l) {
        const auto& sol = bundle.solutions[static_cast<std::size_t>(l)];
        const std::size_t col = static_cast<std::size_t>(l);
        for (int j = 0; j <= n - l; ++j) {
            auto d = detail::combo_value(ring, SystemFamily::left_mid_unit, n, sol, j);
            cert.phi0.at(static_cast<std::size_t>(j), col) = lp_monomial(ring, n - l - j, d);
        }
        for (int p = 0; p <= l; ++p)
            cert.phi1.at(static_cast<std::size_t>(p), col) =
                lp_monomial(ring, l - p, sol[static_cast<std::size_t>(p)]);
    }
    for (int m = 0; m <= k - n - 1; ++m) {
        const auto& sol = bundle.solutions[static_cast<std::size_t>(n + 1 + m)];
        const std::size_t col = static_cast<std::size_t>(n + 1 + m);
        for (int j = n + 1; j <= k - m; ++j) {
            auto e = detail::combo_value(ring, SystemFamily::left_mid_tail, n, sol, j);
            if (j % 2 != 0) e = ring.neg(e);
            cert.phi0.at(static_cast<std::size_t>(j), col) = lp_monomial(ring, k - m - j, e);
        }
        for (int i = 0; i <= m; ++i)
            cert.phi1.at(static_cast<std::size_t>(n + 1 + i), col) =
                lp_monomial(ring, m - i, sol[static_cast<std::size_t>(i)]);
    }
    return cert;
}

struct VerificationReport {
    bool det0_unit = false;
    bool det1_unit = false;
    bool gluing = false;
    bool verified() const { return det0_unit && det1_unit && gluing; }
};

/// Exact verification: both local determinants are nonzero constants, and the
/// gluing identity phi0 = T * phi1(1/t) * diag(t^(-m_col)) holds entrywise.
template <Field R>
VerificationReport verify_certificate(const SplittingCertificate<R>& cert,
                                      const TransitionMatrix<R>& T) {
    if (cert.k != T.k || cert.n != T.n || cert.side != T.side)
        throw std::invalid_argument("verify_certificate: metadata mismatch");
    const R& ring = cert.ring;
    VerificationReport rep;

    auto is_const_unit = [&](const LaurentPoly<R>& det) {
        auto u = lp_unit_part(det);
        return u && u->first == 0 && !ring.is_zero(u->second);
    };
    rep.det0_unit = is_const_unit(lmat_det(cert.phi0));
    rep.det1_unit = is_const_unit(lmat_det(cert.phi1));

    std::vector<int> neg;
    neg.reserve(cert.source_twists.size());
    for (int m : cert.source_twists) neg.push_back(-m);
    auto rhs = lmat_mul(lmat_mul(T.matrix, lmat_invert_var(cert.phi1)),
                        lmat_diag_monomials(ring, T.matrix.var, neg));
    rep.gluing = (rhs == cert.phi0);
    return rep;
}

enum class OutcomeKind { certified, birkhoff_fallback, anomaly };

inline const char* outcome_name(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::certified: return "certified";
        case OutcomeKind::birkhoff_fallback: return "birkhoff_fallback";
        case OutcomeKind::anomaly: return "anomaly";
    }
    return "?";
}

template <Field R>
struct SplittingOutcome {
    OutcomeKind kind = OutcomeKind::anomaly;
    SplittingType type;
    std::optional<SplittingCertificate<R>> certificate;
    VerificationReport report;
    FailureReason reason = FailureReason::none;
    int failed_system = -1;
};

/// Full decision procedure: build, solve, assemble, verify.  Over a prime
/// field any failure falls back to the Birkhoff oracle; over Q a failure is
/// an anomaly (it would contradict the characteristic-zero theorems).
template <Field R>
SplittingOutcome<R> splitting_search(R ring, int k, int n, Side side) {
    SplittingOutcome<R> out;
    const bool finite = ring.cardinality().has_value();

    auto fallback = [&](FailureReason why, int sys_index) {
        out.reason = why;
        out.failed_system = sys_index;
        if (!finite) {
            out.kind = OutcomeKind::anomaly;
            return;
        }
        auto T = transition_matrix(ring, k, n, side);
        out.kind = OutcomeKind::birkhoff_fallback;
        out.type = splitting_type_birkhoff(T.matrix);
    };

    auto solved = solve_systems(build_systems(ring, k, n, side), ring);
    if (auto* fail = std::get_if<SolveFailure>(&solved)) {
        fallback(fail->reason, fail->system_index);
        return out;
    }
    auto cert = assemble_certificate(ring, k, n, side, std::get<SolutionBundle<R>>(solved));
    auto T = transition_matrix(ring, k, n, side);
    out.report = verify_certificate(cert, T);
    if (!out.report.verified()) {
        fallback(FailureReason::gluing_failed, -1);
        return out;
    }
    out.kind = OutcomeKind::certified;
    out.type = make_type(cert.source_twists);
    out.certificate = std::move(cert);
    return out;
}

}  // namespace pp1

#endif
