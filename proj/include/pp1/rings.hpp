#ifndef PP1_RINGS_HPP
#define PP1_RINGS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pp1 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the vanishing convention: zero for b < 0,
/// falling factorial over b! otherwise.  The upper index may be any integer,
/// so binom(-2, 1) == -2 and binom(3, 5) == 0.
inline BigInt binom(long long a, long long b) {
    if (b < 0) return 0;
    BigInt r = 1;
    for (long long i = 0; i < b; ++i) {
        r *= BigInt(a - i);
        r /= BigInt(i + 1);  // exact: r is a binomial after each step
    }
    return r;
}

/// Coefficient of x^i in (1+x)^m, valid for any integer m (the geometric-type
/// expansion when m < 0).
inline BigInt series_coeff(long long m, long long i) {
    if (i < 0) throw std::invalid_argument("series_coeff: i must be nonnegative");
    if (m >= 0) return binom(m, i);
    BigInt c = binom(i - m - 1, -m - 1);
    return (i % 2 != 0) ? BigInt(-c) : c;
}

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Runtime description of the coefficient field: the rationals or a prime field.
struct RingSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static RingSpec rationals() { return RingSpec{Kind::rationals, 0}; }
    static RingSpec prime_field(std::uint32_t p) {
        if (!is_prime_u32(p))
            throw std::invalid_argument("RingSpec: " + std::to_string(p) + " is not prime");
        return RingSpec{Kind::prime_field, p};
    }

    bool operator==(const RingSpec&) const = default;

    std::string name() const {
        return kind == Kind::rationals ? std::string("Q") : "F_" + std::to_string(p);
    }
};

/// The field of rational numbers.  Elements are exact normalized fractions
/// (gcd(|num|, den) == 1, den >= 1, zero is 0/1).
struct QQ {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("QQ: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_bigint(const BigInt& x) const { return Rational(x); }
    Elem from_int(long long x) const { return Rational(x); }

    /// Number of field elements, when finite (used for exhaustive searches).
    std::optional<std::uint64_t> cardinality() const { return std::nullopt; }

    RingSpec spec() const { return RingSpec::rationals(); }
    bool operator==(const QQ&) const = default;
};

/// A prime field F_p with p checked prime at construction.  Elements are
/// residues stored in [0, p).
struct GFp {
    std::uint32_t p = 2;

    using Elem = std::uint32_t;

    GFp() = default;
    explicit GFp(std::uint32_t prime) : p(prime) {
        if (!is_prime_u32(p))
            throw std::invalid_argument("GFp: " + std::to_string(p) + " is not prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return Elem(s >= p ? s - p : s);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return Elem((std::uint64_t(a) * b) % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("GFp: inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        std::int64_t res = t % p;
        if (res < 0) res += p;
        return Elem(res);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    Elem from_bigint(const BigInt& x) const {
        BigInt m = x % p;
        if (m < 0) m += p;
        return Elem(m.convert_to<std::uint32_t>());
    }
    Elem from_int(long long x) const { return from_bigint(BigInt(x)); }

    std::optional<std::uint64_t> cardinality() const { return p; }

    RingSpec spec() const { return RingSpec{RingSpec::Kind::prime_field, p}; }
    bool operator==(const GFp&) const = default;
};

template <class R>
concept Field = requires(const R r, const typename R::Elem a, const typename R::Elem b) {
    { r.zero() } -> std::convertible_to<typename R::Elem>;
    { r.one() } -> std::convertible_to<typename R::Elem>;
    { r.add(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.sub(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.mul(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.neg(a) } -> std::convertible_to<typename R::Elem>;
    { r.inv(a) } -> std::convertible_to<typename R::Elem>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.from_bigint(BigInt()) } -> std::convertible_to<typename R::Elem>;
    { r.spec() } -> std::convertible_to<RingSpec>;
};

/// Calls f with the field object described by the runtime ring choice.
template <class F>
decltype(auto) with_field(const RingSpec& spec, F&& f) {
    if (spec.kind == RingSpec::Kind::rationals) return f(QQ{});
    return f(GFp{spec.p});
}

}  // namespace pp1

#endif
