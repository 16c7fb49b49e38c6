// Acceptance suite: every criterion prints exactly one PASS/FAIL line.
// Exit status is the number of failed criteria.

#include "pp1/birkhoff.hpp"
#include "pp1/detlemmas.hpp"
#include "pp1/splitting.hpp"
#include "pp1/transition.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace pp1;

namespace {

constexpr int kmax_grid = 6;
constexpr int nabs_grid = 8;

QQ q;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
};

// 1. closed forms equal the jet oracle on the whole grid, exactly
Outcome criterion_formula_oracle() {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    int comparisons = 0;
    for (int k = 1; k <= kmax_grid; ++k)
        for (int n = -nabs_grid; n <= nabs_grid; ++n)
            for (auto side : {Side::left, Side::right}) {
                if (!(transition_matrix(q, k, n, side).matrix ==
                      oracle_transition(q, k, n, side)))
                    out.fail("mismatch at k=" + std::to_string(k) + " n=" + std::to_string(n));
                ++comparisons;
            }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    if (comparisons != 204) out.fail("expected 204 comparisons");
    if (elapsed.count() >= 10.0) out.fail("took too long");
    std::ostringstream os;
    os << comparisons << " matrix comparisons in " << elapsed.count() << " s";
    out.detail = out.pass ? os.str() : out.detail;
    return out;
}

// 2. cocycle identity and determinant degree on the same grid
Outcome criterion_cocycle() {
    Outcome out;
    for (int k = 1; k <= kmax_grid; ++k)
        for (int n = -nabs_grid; n <= nabs_grid; ++n)
            for (auto side : {Side::left, Side::right}) {
                auto rep = check_cocycle(q, k, n, side);
                if (!rep.cocycle_identity || !rep.det_is_unit_of_expected_degree)
                    out.fail("failure at k=" + std::to_string(k) + " n=" + std::to_string(n) +
                             " side=" + side_name(side));
            }
    if (out.pass) out.detail = "T*Tbar = I and det exponent (k+1)n - k(k+1) on the grid";
    return out;
}

// 3. splitting certificates over Q reproduce the classification
Outcome criterion_certificates() {
    Outcome out;
    for (int k = 1; k <= kmax_grid; ++k)
        for (int n = -nabs_grid; n <= nabs_grid; ++n)
            for (auto side : {Side::left, Side::right}) {
                auto o = splitting_search(q, k, n, side);
                std::string at = " at k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                 " side=" + side_name(side);
                if (o.kind != OutcomeKind::certified) out.fail("not certified" + at);
                else if (!o.report.verified()) out.fail("certificate checks failed" + at);
                else if (!(o.type == splitting_type_char0(k, n, side)))
                    out.fail("type mismatch" + at);
                else if (o.type.degree_sum() != det_degree(k, n))
                    out.fail("degree sum violated" + at);
            }
    if (out.pass) out.detail = "all 204 points certified with the characteristic-zero type";
    return out;
}

// 4. the Birkhoff oracle agrees, with exact re-multiplication
Outcome criterion_birkhoff() {
    Outcome out;
    for (int k = 1; k <= kmax_grid; ++k)
        for (int n = -nabs_grid; n <= nabs_grid; ++n)
            for (auto side : {Side::left, Side::right}) {
                std::string at = " at k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                 " side=" + side_name(side);
                auto M = transition_matrix(q, k, n, side).matrix;
                auto f = birkhoff_factor(M);
                auto D = lmat_diag_monomials(q, M.var, f.exponents);
                if (!(lmat_mul(lmat_mul(f.A, D), f.B) == M))
                    out.fail("re-multiplication failed" + at);
                else if (!(make_type(f.exponents) == splitting_type_char0(k, n, side)))
                    out.fail("exponent mismatch" + at);
            }
    if (out.pass) out.detail = "factorization type equals the certificate type on the grid";
    return out;
}

// 5. the first determinant identity, exactly, on its sweep window
Outcome criterion_det1() {
    Outcome out;
    int cases = 0;
    for (long long a = 0; a <= 8; ++a)
        for (long long b = 0; b <= a; ++b)
            for (long long l = 1; l <= 5; ++l) {
                auto direct = det_exact(build_matrix(q, BinomialMatrixSpec::det1(a, b, l)));
                if (direct != det1_formula(a, b, l))
                    out.fail("mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                             " l=" + std::to_string(l));
                ++cases;
            }
    if (out.pass) out.detail = std::to_string(cases) + " determinants equal the closed form";
    return out;
}

// 6. the second lemma's claimed sign fails exactly where the direct
//    determinant says it does; the full table is produced
Outcome criterion_det2() {
    Outcome out;
    auto r51 = det2_check(5, 1);
    if (!(r51.direct == Rational(-1) && r51.claimed == Rational(1) && !r51.direct_matches_claim))
        out.fail("(a, l) = (5, 1) should be a flagged mismatch with direct -1");
    auto r52 = det2_check(5, 2);
    if (!(r52.direct == Rational(-1) && r52.direct_matches_claim))
        out.fail("(a, l) = (5, 2) should match with value -1");

    int rows = 0, expected_rows = 0, mismatches = 0;
    std::printf("    det2 table (l, a, direct, claimed, match):\n");
    for (long long l = 0; l <= 6; ++l)
        for (long long a = 2 * l; a <= 12; ++a) {
            ++expected_rows;
            auto rep = det2_check(a, l);
            if (!(rep.direct == Rational(1) || rep.direct == Rational(-1)))
                out.fail("direct determinant is not a sign");
            ++rows;
            if (!rep.direct_matches_claim) ++mismatches;
            if (a == 2 * l || a == 12)  // table excerpt: the sweep is a-independent
                std::printf("      l=%lld a=%-2lld direct=%2lld claimed=%2lld %s\n", l, a,
                            static_cast<long long>(numerator(rep.direct)),
                            static_cast<long long>(numerator(rep.claimed)),
                            rep.direct_matches_claim ? "match" : "MISMATCH");
        }
    if (rows != expected_rows) out.fail("incomplete table");
    if (mismatches == 0) out.fail("expected mismatches were not detected");
    if (out.pass)
        out.detail = std::to_string(rows) + " rows, " + std::to_string(mismatches) +
                     " mismatches; claimed sign not reproducible as stated";
    return out;
}

// 7. unit-condition lemma: over Q every solved system has a nonzero unit slot
Outcome criterion_unit_lemma() {
    Outcome out;
    int systems = 0;
    for (int k = 1; k <= kmax_grid; ++k)
        for (int n = -nabs_grid; n <= nabs_grid; ++n)
            for (auto side : {Side::left, Side::right}) {
                auto built = build_systems(q, k, n, side);
                auto res = solve_systems(built, q);
                auto* bundle = std::get_if<SolutionBundle<QQ>>(&res);
                if (bundle == nullptr) {
                    out.fail("system unsolvable over Q at k=" + std::to_string(k) +
                             " n=" + std::to_string(n));
                    continue;
                }
                for (const auto& sol : bundle->solutions) {
                    if (sol.back() == 0)
                        out.fail("zero unit slot at k=" + std::to_string(k) +
                                 " n=" + std::to_string(n) + " side=" + side_name(side));
                    ++systems;
                }
            }
    if (out.pass) out.detail = std::to_string(systems) + " solved systems, unit slot nonzero";
    return out;
}

// 8. characteristic-p property suite with a deterministic failure summary
Outcome criterion_char_p() {
    Outcome out;
    auto run_once = [&](std::ostringstream& summary) {
        int points = 0, certified = 0, fallbacks = 0;
        for (std::uint32_t p : {2u, 3u}) {
            GFp f(p);
            for (int k = 1; k <= 4; ++k)
                for (int n = -4; n <= 4; ++n)
                    for (auto side : {Side::left, Side::right}) {
                        ++points;
                        std::string at = "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                         " n=" + std::to_string(n) +
                                         " side=" + side_name(side);
                        SplittingOutcome<GFp> o;
                        try {
                            o = splitting_search(f, k, n, side);
                        } catch (const std::exception& e) {
                            out.fail("search did not complete at " + at + ": " + e.what());
                            continue;
                        }
                        if (o.type.degree_sum() != det_degree(k, n))
                            out.fail("degree sum violated at " + at);
                        if (o.kind == OutcomeKind::certified) {
                            ++certified;
                            if (!o.report.verified()) out.fail("bad certificate at " + at);
                        } else if (o.kind == OutcomeKind::birkhoff_fallback) {
                            ++fallbacks;
                            auto M = transition_matrix(f, k, n, side).matrix;
                            auto fac = birkhoff_factor(M);
                            auto D = lmat_diag_monomials(f, M.var, fac.exponents);
                            if (!(lmat_mul(lmat_mul(fac.A, D), fac.B) == M))
                                out.fail("fallback re-multiplication failed at " + at);
                            summary << "      " << at << ": "
                                    << failure_reason_name(o.reason) << " (system "
                                    << o.failed_system << "), type";
                            for (int t : o.type.twists) summary << " " << t;
                            summary << "\n";
                        } else {
                            out.fail("anomaly outcome at " + at);
                        }
                    }
        }
        return std::tuple{points, certified, fallbacks};
    };

    std::ostringstream s1, s2;
    auto [points, certified, fallbacks] = run_once(s1);
    run_once(s2);
    if (s1.str() != s2.str()) out.fail("failure summary is not deterministic");
    std::printf("    certificate-path failures over F_2 and F_3:\n%s", s1.str().c_str());
    if (out.pass) {
        std::ostringstream os;
        os << points << " points, " << certified << " certified, " << fallbacks
           << " classified fallbacks, summary deterministic";
        out.detail = os.str();
    }
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"1. formula equals jet oracle on the grid", criterion_formula_oracle},
        {"2. cocycle identity and determinant degree", criterion_cocycle},
        {"3. certified splittings reproduce the characteristic-zero types", criterion_certificates},
        {"4. Birkhoff factorization agrees with the certificate route", criterion_birkhoff},
        {"5. first determinant identity on the sweep window", criterion_det1},
        {"6. second determinant lemma discrepancy detection", criterion_det2},
        {"7. unit-condition lemma over Q", criterion_unit_lemma},
        {"8. characteristic-p property suite", criterion_char_p},
    };

    int failures = 0;
    for (const auto& e : entries) {
        auto out = e.fn();
        std::printf("%s  %s%s%s\n", out.pass ? "PASS" : "FAIL", e.name,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        if (!out.pass) ++failures;
    }
    return failures;
}
