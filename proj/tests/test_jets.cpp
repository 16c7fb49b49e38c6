#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pp1/jets.hpp"
#include "test_util.hpp"

using namespace pp1;

namespace {

QQ q;

LaurentPoly<QQ> poly(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentPoly<QQ> f(q);
    for (auto [e, c] : terms) f.set(e, Rational(c));
    return f;
}

/// Ring inverse of a jet whose degree-zero part is an invertible monomial,
/// computed by the triangular recurrence -- no series formula involved.
JetElement<QQ> jet_inverse(const JetElement<QQ>& a) {
    auto u0 = lp_unit_part(a.coords[0]);
    REQUIRE(u0.has_value());
    auto inv0 = lp_monomial(q, -u0->first, q.inv(u0->second));
    JetElement<QQ> w(q, a.order, a.var);
    w.coords[0] = inv0;
    for (int j = 1; j <= a.order; ++j) {
        LaurentPoly<QQ> s(q);
        for (int i = 1; i <= j; ++i) s = lp_add(s, lp_mul(a.coords[i], w.coords[j - i]));
        w.coords[j] = lp_neg(lp_mul(inv0, s));
    }
    return w;
}

JetElement<QQ> coordinate_jet(int k, char var) {
    // t + dt (resp. u + du) as a truncated ring element
    JetElement<QQ> u(q, k, var);
    u.coords[0] = poly({{1, 1}});
    u.coords[1] = lp_const(q, q.one());
    return u;
}

}  // namespace

TEST_CASE("trunc_pow windows") {
    CHECK(trunc_pow(-2, 2) == std::vector<BigInt>{1, -2, 3});
    CHECK(trunc_pow(3, 2) == std::vector<BigInt>{1, 3, 3});
    CHECK(trunc_pow(0, 4) == std::vector<BigInt>{1, 0, 0, 0, 0});
}

TEST_CASE("opposite-coordinate powers match honest truncated-ring exponentiation") {
    for (int k = 1; k <= 5; ++k) {
        auto u = coordinate_jet(k, 't');
        auto uinv = jet_inverse(u);
        // u * u^-1 == 1 in the truncated ring
        auto prod = jet_mul(u, uinv);
        CHECK(prod.coords[0] == lp_const(q, q.one()));
        for (int j = 1; j <= k; ++j) CHECK(prod.coords[j].is_zero());

        for (int m = -6; m <= 6; ++m) {
            JetElement<QQ> pow(q, k, 't');
            pow.coords[0] = lp_const(q, q.one());
            const auto& base = m >= 0 ? u : uinv;
            for (int i = 0; i < std::abs(m); ++i) pow = jet_mul(pow, base);
            CHECK(pow == jet_opposite_coord_pow(q, k, 't', m));
        }
    }
}

TEST_CASE("jet_expand_left examples") {
    auto e = jet_expand_left(q, 1, -1, 0);
    CHECK(e.coords[0] == poly({{-1, 1}}));
    CHECK(e.coords[1] == poly({{-2, -1}}));

    e = jet_expand_left(q, 2, 1, 0);  // u^1 = t + dt
    CHECK(e.coords[0] == poly({{1, 1}}));
    CHECK(e.coords[1] == lp_const(q, q.one()));
    CHECK(e.coords[2].is_zero());

    CHECK_THROWS_AS((void)jet_expand_left(q, 2, 0, 3), std::out_of_range);
}

TEST_CASE("top-order left expansion collapses to a single term") {
    for (int k = 1; k <= 4; ++k)
        for (int n = -3; n <= 3; ++n) {
            auto e = jet_expand_left(q, k, n, k);
            for (int j = 0; j < k; ++j) CHECK(e.coords[j].is_zero());
            Rational c = (k % 2 != 0) ? -1 : 1;
            CHECK(e.coords[k] == lp_monomial(q, n - 2 * k, c));
        }
}

TEST_CASE("jet_expand_right examples") {
    for (int n : {-2, 0, 3}) {
        auto e = jet_expand_right(q, 3, n, 0);
        CHECK(e.coords[0] == poly({{n, 1}}));
        for (int j = 1; j <= 3; ++j) CHECK(e.coords[j].is_zero());
    }
    auto e = jet_expand_right(q, 1, 0, 1);
    CHECK(e.coords[0].is_zero());
    CHECK(e.coords[1] == poly({{-2, -1}}));

    e = jet_expand_right(q, 2, 0, 1);
    CHECK(e.coords[0].is_zero());
    CHECK(e.coords[1] == poly({{-2, -1}}));
    CHECK(e.coords[2] == poly({{-3, 1}}));
}

TEST_CASE("oracle_transition assembles expansion columns") {
    auto m = oracle_transition(q, 1, -1, Side::left);
    CHECK(m.at(0, 0) == poly({{-1, 1}}));
    CHECK(m.at(1, 0) == poly({{-2, -1}}));
    CHECK(m.at(0, 1).is_zero());
    CHECK(m.at(1, 1) == poly({{-3, -1}}));

    for (int n : {-2, 0, 3}) {
        auto r = oracle_transition(q, 1, n, Side::right);
        CHECK(r.at(0, 0) == poly({{n, 1}}));
        CHECK(r.at(1, 1) == poly({{n - 2, -1}}));
        CHECK(r.at(0, 1).is_zero());
        CHECK(r.at(1, 0).is_zero());
    }

    auto d = oracle_transition(q, 1, 0, Side::left);
    CHECK(d.at(0, 0) == lp_const(q, q.one()));
    CHECK(d.at(1, 1) == poly({{-2, -1}}));

    CHECK_THROWS_AS((void)oracle_transition(q, 0, 0, Side::left), std::out_of_range);
}

TEST_CASE("right oracle column zero is (u^n, 0, ..., 0) on a window") {
    for (int k = 1; k <= 6; ++k)
        for (int n = -8; n <= 8; ++n) {
            auto m = oracle_transition(q, k, n, Side::right);
            CHECK(m.at(0, 0) == poly({{n, 1}}));
            for (int j = 1; j <= k; ++j) CHECK(m.at(j, 0).is_zero());
        }
}

TEST_CASE("oracle matrices are lower triangular in the filtration order") {
    for (int k = 1; k <= 6; ++k)
        for (int n = -8; n <= 8; ++n)
            for (auto side : {Side::left, Side::right}) {
                auto m = oracle_transition(q, k, n, side);
                for (int j = 0; j <= k; ++j)
                    for (int p = j + 1; p <= k; ++p) CHECK(m.at(j, p).is_zero());
            }
}

TEST_CASE("jet expansions work over prime fields") {
    GFp f3(3);
    auto e = jet_expand_left(f3, 2, -1, 0);
    // 1/(t+dt) over F_3: coefficients 1, -1, 1 -> 1, 2, 1
    CHECK(e.coords[0] == lp_monomial(f3, -1, 1u));
    CHECK(e.coords[1] == lp_monomial(f3, -2, 2u));
    CHECK(e.coords[2] == lp_monomial(f3, -3, 1u));
}
