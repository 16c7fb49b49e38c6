#ifndef PP1_SERIALIZE_HPP
#define PP1_SERIALIZE_HPP

#include "pp1/detlemmas.hpp"
#include "pp1/laurent.hpp"
#include "pp1/rings.hpp"
#include "pp1/splitting.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace pp1 {

using Json = nlohmann::ordered_json;

// Rationals are serialized as exact decimal strings, never floats.

inline std::string to_decimal(const BigInt& x) { return x.str(); }
inline std::string to_decimal(const Rational& x) {
    auto d = denominator(x);
    return d == 1 ? numerator(x).str() : numerator(x).str() + "/" + d.str();
}

inline Json ring_to_json(const RingSpec& spec) {
    Json j;
    j["ring"] = spec.kind == RingSpec::Kind::rationals ? "q" : "fp";
    if (spec.kind == RingSpec::Kind::prime_field) j["p"] = spec.p;
    return j;
}

template <Field R>
Json poly_to_json(const R& ring, const LaurentPoly<R>& f) {
    const bool finite = ring.cardinality().has_value();
    Json arr = Json::array();
    for (const auto& [e, c] : f.terms) {  // map order: ascending exponent
        Json term;
        term["exp"] = e;
        if (finite) {
            std::ostringstream os;
            os << c;
            term["num"] = os.str();
        } else {
            Rational r(c);
            term["num"] = numerator(r).str();
            term["den"] = denominator(r).str();
        }
        arr.push_back(std::move(term));
    }
    return arr;
}

template <Field R>
LaurentPoly<R> poly_from_json(const R& ring, const Json& j) {
    LaurentPoly<R> f(ring);
    for (const auto& term : j) {
        int e = term.at("exp").get<int>();
        BigInt num(term.at("num").get<std::string>());
        auto c = ring.from_bigint(num);
        if (term.contains("den")) {
            BigInt den(term.at("den").get<std::string>());
            c = ring.div(c, ring.from_bigint(den));
        }
        f.set(e, c);
    }
    return f;
}

template <Field R>
Json matrix_to_json(const LaurentMatrix<R>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim; ++j) row.push_back(poly_to_json(m.ring, m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Field R>
LaurentMatrix<R> matrix_from_json(const R& ring, const Json& j, char var) {
    LaurentMatrix<R> m(ring, j.size(), var);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t c = 0; c < m.dim; ++c) m.at(i, c) = poly_from_json(ring, j[i][c]);
    return m;
}

template <Field R>
Json certificate_to_json(const SplittingCertificate<R>& cert, const VerificationReport& rep) {
    Json j;
    j["k"] = cert.k;
    j["n"] = cert.n;
    j["side"] = side_name(cert.side);
    j["ring"] = cert.ring.spec().name();
    j["twists"] = cert.source_twists;
    j["phi0"] = matrix_to_json(cert.phi0);
    j["phi1"] = matrix_to_json(cert.phi1);
    j["checks"] = Json{{"det0", rep.det0_unit}, {"det1", rep.det1_unit}, {"gluing", rep.gluing}};
    return j;
}

template <Field R>
SplittingCertificate<R> certificate_from_json(const R& ring, const Json& j) {
    SplittingCertificate<R> cert;
    cert.k = j.at("k").get<int>();
    cert.n = j.at("n").get<int>();
    cert.side = j.at("side").get<std::string>() == "left" ? Side::left : Side::right;
    cert.ring = ring;
    cert.source_twists = j.at("twists").get<std::vector<int>>();
    cert.phi0 = matrix_from_json(ring, j.at("phi0"), cert.side == Side::left ? 't' : 'u');
    cert.phi1 = matrix_from_json(ring, j.at("phi1"), cert.side == Side::left ? 's' : 'v');
    return cert;
}

inline Json det1_report_to_json(long long a, long long b, long long l, const Rational& direct,
                                const Rational& claimed) {
    Json j;
    j["lemma"] = "det1";
    j["params"] = Json{{"a", a}, {"b", b}, {"l", l}};
    j["direct"] = to_decimal(direct);
    j["claimed"] = to_decimal(claimed);
    j["match"] = (direct == claimed);
    return j;
}

inline Json det2_report_to_json(const Det2Report& rep) {
    Json j;
    j["lemma"] = "det2";
    j["params"] = Json{{"a", rep.a}, {"l", rep.l}};
    j["direct"] = to_decimal(rep.direct);
    j["claimed"] = to_decimal(rep.claimed);
    j["match"] = rep.direct_matches_claim;
    j["signed_variant"] = to_decimal(rep.signed_variant);
    j["signed_match"] = rep.signed_matches_claim;
    return j;
}

// ---------------------------------------------------------------------------
// plain-text rendering

template <Field R>
std::string elem_to_string(const R& ring, const typename R::Elem& c) {
    if constexpr (std::is_same_v<R, QQ>) {
        (void)ring;
        return to_decimal(c);
    } else {
        (void)ring;
        return std::to_string(c);
    }
}

template <Field R>
std::string poly_to_string(const LaurentPoly<R>& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {  // descending exponent
        const auto& [e, c] = *it;
        std::string cs = elem_to_string(f.ring, c);
        bool negative = !cs.empty() && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        std::string coeff = (mag == "1" && e != 0) ? "" : mag;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += coeff;
        if (e != 0) {
            if (!coeff.empty()) out += "*";
            out += std::string(1, var);
            if (e != 1) out += "^" + std::to_string(e);
        }
        first = false;
    }
    return out;
}

template <Field R>
std::string matrix_to_string(const LaurentMatrix<R>& m) {
    std::vector<std::vector<std::string>> cells(m.dim, std::vector<std::string>(m.dim));
    std::vector<std::size_t> width(m.dim, 0);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) {
            cells[i][j] = poly_to_string(m.at(i, j), m.var);
            width[j] = std::max(width[j], cells[i][j].size());
        }
    std::string out;
    for (std::size_t i = 0; i < m.dim; ++i) {
        out += "[ ";
        for (std::size_t j = 0; j < m.dim; ++j) {
            out += cells[i][j];
            out.append(width[j] - cells[i][j].size() + (j + 1 < m.dim ? 2 : 0), ' ');
        }
        out += " ]\n";
    }
    return out;
}

}  // namespace pp1

#endif
