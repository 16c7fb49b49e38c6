#ifndef PP1_DETLEMMAS_HPP
#define PP1_DETLEMMAS_HPP

#include "pp1/matrix.hpp"
#include "pp1/rings.hpp"

#include <stdexcept>

namespace pp1 {

/// The two binomial matrix shapes whose closed-form determinants are checked
/// against direct exact computation.
struct BinomialMatrixSpec {
    enum class Lemma { det1, det2 };
    Lemma lemma = Lemma::det1;
    long long a = 0, b = 0, l = 1;  // b unused for det2

    static BinomialMatrixSpec det1(long long a, long long b, long long l) {
        if (b > a || l < 1)
            throw std::invalid_argument("BinomialMatrixSpec: det1 needs b <= a and l >= 1");
        return {Lemma::det1, a, b, l};
    }
    static BinomialMatrixSpec det2(long long a, long long l) {
        if (a < 0 || l < 0)
            throw std::invalid_argument("BinomialMatrixSpec: det2 needs a >= 0 and l >= 0");
        return {Lemma::det2, a, 0, l};
    }
};

/// det1: entry (i, j) = binom(a+i, b+j).  det2: entry (i, j) = binom(a-j, a-j-i).
/// Both are (l+1) x (l+1).
template <Field R>
ExactMatrix<R> build_matrix(R ring, const BinomialMatrixSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.l) + 1;
    ExactMatrix<R> m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ii = static_cast<long long>(i), jj = static_cast<long long>(j);
            BigInt e = spec.lemma == BinomialMatrixSpec::Lemma::det1
                           ? binom(spec.a + ii, spec.b + jj)
                           : binom(spec.a - jj, spec.a - jj - ii);
            m.at(i, j) = ring.from_bigint(e);
        }
    return m;
}

/// Closed form for the det1 determinant:
/// prod_i binom(a+i, b+i) / prod_i binom(a-b+i, i), i = 0..l.
inline Rational det1_formula(long long a, long long b, long long l) {
    if (b > a || l < 1)
        throw std::invalid_argument("det1_formula: needs b <= a and l >= 1");
    Rational num = 1, den = 1;
    for (long long i = 0; i <= l; ++i) {
        num *= Rational(binom(a + i, b + i));
        den *= Rational(binom(a - b + i, i));
    }
    return num / den;
}

/// Ground truth is the direct determinant; the claimed value and the variant
/// with alternating column signs are evaluated and compared, never assumed.
struct Det2Report {
    long long a = 0, l = 0;
    Rational direct;          // det of the plain matrix
    Rational claimed;         // (-1)^(l+1)
    Rational signed_variant;  // det with column j scaled by (-1)^j
    bool direct_matches_claim = false;
    bool signed_matches_claim = false;
};

inline Det2Report det2_check(long long a, long long l) {
    if (l < 0 || a < 2 * l)
        throw std::invalid_argument("det2_check: needs l >= 0 and a >= 2l");
    QQ ring;
    Det2Report rep;
    rep.a = a;
    rep.l = l;
    auto m = build_matrix(ring, BinomialMatrixSpec::det2(a, l));
    rep.direct = det_exact(m);
    rep.claimed = (l % 2 == 0) ? Rational(-1) : Rational(1);
    auto ms = m;
    for (std::size_t j = 0; j < ms.cols; ++j)
        if (j % 2 == 1)
            for (std::size_t i = 0; i < ms.rows; ++i) ms.at(i, j) = -ms.at(i, j);
    rep.signed_variant = det_exact(ms);
    rep.direct_matches_claim = (rep.direct == rep.claimed);
    rep.signed_matches_claim = (rep.signed_variant == rep.claimed);
    return rep;
}

}  // namespace pp1

#endif
