#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pp1/matrix.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

using namespace pp1;

namespace {

template <Field R>
ExactMatrix<R> from_rows(R ring, std::vector<std::vector<long long>> rows) {
    ExactMatrix<R> m(ring, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = ring.from_int(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("det_exact small cases") {
    QQ q;
    CHECK(det_exact(from_rows(q, {{1, 1}, {5, 4}})) == Rational(-1));
    CHECK(det_exact(ExactMatrix<QQ>::identity(q, 3)) == Rational(1));
    auto m = from_rows(q, {{2, 1}, {3, 3}});
    CHECK(det_exact(m) == test::cofactor_det(m));
    CHECK(det_exact(m) == Rational(3));
    CHECK_THROWS_AS(det_exact(from_rows(q, {{1, 2, 3}, {4, 5, 6}})), std::domain_error);
}

TEST_CASE("det_exact agrees with cofactor expansion on random matrices") {
    auto rng = test::make_rng(7);
    QQ q;
    int cases = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (int it = 0; it < 220; ++it) {
            auto m = test::random_matrix(q, rng, n, n);
            CHECK(det_exact(m) == test::cofactor_det(m));
            ++cases;
        }
    CHECK(cases >= 1000);
    GFp f3(3);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int it = 0; it < 50; ++it) {
            auto m = test::random_matrix(f3, rng, n, n, 0, 2);
            CHECK(det_exact(m) == test::cofactor_det(m));
        }
}

TEST_CASE("solve_affine unique, inconsistent and parametrized shapes") {
    QQ q;
    auto id = ExactMatrix<QQ>::identity(q, 2);
    auto s = solve_affine(id, {Rational(1), Rational(0)});
    CHECK(s.kind == SolKind::unique);
    CHECK(s.particular == std::vector<Rational>{1, 0});

    // the l = 1 system at (k, n) = (1, -1): x^1_1 = 1, x^1_1 + x^1_0 = 0
    auto sys = from_rows(q, {{1, 0}, {1, 1}});
    auto sol = solve_affine(sys, {Rational(1), Rational(0)});
    CHECK(sol.kind == SolKind::unique);
    CHECK(sol.particular == std::vector<Rational>{1, -1});

    GFp f2(2);
    auto bad = from_rows(f2, {{1, 1}, {1, 1}});
    CHECK(solve_affine(bad, {f2.one(), f2.zero()}).kind == SolKind::empty);

    auto wide = from_rows(q, {{0, 1}});
    auto par = solve_affine(wide, {Rational(1)});
    CHECK(par.kind == SolKind::parametrized);
    CHECK(par.nullspace.size() == 1);
    CHECK_THROWS_AS(solve_affine(wide, {Rational(1), Rational(2)}), std::domain_error);
}

TEST_CASE("solution sets satisfy A*particular = b and A*v = 0 (random)") {
    auto rng = test::make_rng(11);
    QQ q;
    GFp f3(3);
    auto run = [&](auto ring) {
        for (int it = 0; it < 120; ++it) {
            std::uniform_int_distribution<std::size_t> d(1, 4);
            auto rows = d(rng), cols = d(rng);
            auto A = test::random_matrix(ring, rng, rows, cols, -3, 3);
            std::vector<typename decltype(ring)::Elem> b;
            for (std::size_t i = 0; i < rows; ++i) b.push_back(test::random_elem(ring, rng, -3, 3));
            auto s = solve_affine(A, b);
            if (s.kind == SolKind::empty) continue;
            CHECK(mat_vec(A, s.particular) == b);
            std::vector<typename decltype(ring)::Elem> zero(rows, ring.zero());
            for (const auto& v : s.nullspace) CHECK(mat_vec(A, v) == zero);
        }
    };
    run(q);
    run(f3);
}

TEST_CASE("over F_p the solution set has p^nullity members (enumeration)") {
    auto rng = test::make_rng(13);
    for (std::uint32_t p : {2u, 3u}) {
        GFp f(p);
        for (int it = 0; it < 60; ++it) {
            std::uniform_int_distribution<std::size_t> d(1, 3);
            auto rows = d(rng), cols = d(rng);
            auto A = test::random_matrix(f, rng, rows, cols, 0, static_cast<int>(p) - 1);
            std::vector<GFp::Elem> b;
            for (std::size_t i = 0; i < rows; ++i)
                b.push_back(test::random_elem(f, rng, 0, static_cast<int>(p) - 1));
            // enumerate all of F_p^cols
            std::size_t count = 0;
            std::vector<GFp::Elem> x(cols, 0);
            for (;;) {
                if (mat_vec(A, x) == b) ++count;
                std::size_t t = 0;
                while (t < cols && ++x[t] == p) x[t++] = 0;
                if (t == cols) break;
            }
            auto s = solve_affine(A, b);
            if (s.kind == SolKind::empty) {
                CHECK(count == 0);
            } else {
                std::size_t expect = 1;
                for (std::size_t i = 0; i < s.nullspace.size(); ++i) expect *= p;
                CHECK(count == expect);
            }
        }
    }
}

TEST_CASE("pick_solution on unique sets") {
    QQ q;
    SolutionSet<QQ> s;
    s.kind = SolKind::unique;
    s.particular = {Rational(1), Rational(-1)};
    auto r = pick_solution(q, s, {1});
    CHECK(r.status == PickStatus::found);
    CHECK(r.value == s.particular);

    s.particular = {Rational(1), Rational(0)};
    CHECK(pick_solution(q, s, {1}).status == PickStatus::not_found);

    SolutionSet<QQ> empty;
    CHECK_THROWS_AS(pick_solution(q, empty, {0}), std::invalid_argument);
}

TEST_CASE("pick_solution enumerates parametrized sets over F_p") {
    GFp f3(3);
    // x_2 = 1 with x_1 free: particular (0,1), nullspace {(1,0)}
    SolutionSet<GFp> s;
    s.kind = SolKind::parametrized;
    s.particular = {0, 1};
    s.nullspace = {{1, 0}};
    auto r = pick_solution(f3, s, {1});
    CHECK(r.status == PickStatus::found);
    CHECK(r.value[1] != 0);
    // oracle: enumerate all three members and check the returned one is among
    // those with a nonzero slot 1
    std::vector<std::vector<GFp::Elem>> satisfying;
    for (GFp::Elem c = 0; c < 3; ++c) {
        std::vector<GFp::Elem> member{f3.mul(c, s.nullspace[0][0]), s.particular[1]};
        if (member[1] != 0) satisfying.push_back(member);
    }
    CHECK(satisfying.size() == 3);
    CHECK(std::find(satisfying.begin(), satisfying.end(), r.value) != satisfying.end());

    // no member of {(a, 0)} has slot-1 nonzero: definitive not_found
    SolutionSet<GFp> t;
    t.kind = SolKind::parametrized;
    t.particular = {0, 0};
    t.nullspace = {{1, 0}};
    CHECK(pick_solution(f3, t, {1}).status == PickStatus::not_found);
}

TEST_CASE("pick_solution over Q tries particular, basis shifts, then bounded combos") {
    QQ q;
    SolutionSet<QQ> s;
    s.kind = SolKind::parametrized;
    s.particular = {Rational(0), Rational(2)};
    s.nullspace = {{Rational(1), Rational(0)}};
    auto r = pick_solution(q, s, {0, 1});
    CHECK(r.status == PickStatus::found);
    CHECK(r.value[0] != 0);
    CHECK(r.value[1] != 0);

    // constraint no member can meet: slot 1 is identically zero
    SolutionSet<QQ> t;
    t.kind = SolKind::parametrized;
    t.particular = {Rational(0), Rational(0)};
    t.nullspace = {{Rational(1), Rational(0)}};
    CHECK(pick_solution(q, t, {1}).status == PickStatus::inconclusive);
}
