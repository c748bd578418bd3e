#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalar fields: GMP rationals and prime fields with a
 *        compile-time modulus below 2^31.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sela {

using Rational = mpq_class;

template <std::uint32_t P>
struct ModP {
    static_assert(P > 2 && P < (1u << 31), "modulus must fit in 31 bits");
    static constexpr std::uint32_t modulus = P;

    std::uint32_t v = 0;

    constexpr ModP() = default;
    constexpr ModP(long long x)
        : v(static_cast<std::uint32_t>(((x % static_cast<long long>(P)) + P) % P)) {}

    static constexpr ModP raw(std::uint32_t x) {
        ModP r;
        r.v = x;
        return r;
    }

    friend constexpr ModP operator+(ModP a, ModP b) {
        std::uint32_t s = a.v + b.v;
        return raw(s >= P ? s - P : s);
    }
    friend constexpr ModP operator-(ModP a, ModP b) {
        return raw(a.v >= b.v ? a.v - b.v : a.v + P - b.v);
    }
    friend constexpr ModP operator*(ModP a, ModP b) {
        return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % P));
    }
    constexpr ModP operator-() const { return raw(v == 0 ? 0 : P - v); }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }

    constexpr ModP& operator+=(ModP b) { return *this = *this + b; }
    constexpr ModP& operator-=(ModP b) { return *this = *this - b; }
    constexpr ModP& operator*=(ModP b) { return *this = *this * b; }
    ModP& operator/=(ModP b) { return *this = *this / b; }

    friend constexpr bool operator==(ModP a, ModP b) { return a.v == b.v; }
    friend constexpr bool operator!=(ModP a, ModP b) { return a.v != b.v; }

    constexpr ModP pow(std::uint64_t e) const {
        ModP r = raw(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    ModP inverse() const {
        if (v == 0) throw std::domain_error("division by zero in prime field");
        return pow(P - 2);
    }
};

inline constexpr std::uint32_t kPrimeA = 2147483629u;
inline constexpr std::uint32_t kPrimeB = 2147483587u;
using FpA = ModP<kPrimeA>;
using FpB = ModP<kPrimeB>;

/// Uniform interface over the supported fields.
template <class F>
struct Field;

template <>
struct Field<Rational> {
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational from_rational(const Rational& q) { return q; }
    static std::string name() { return "Q"; }
    static std::string to_string(const Rational& x) {
        return x.get_num().get_str() + "/" + x.get_den().get_str();
    }
    static std::uint32_t characteristic() { return 0; }
};

template <std::uint32_t P>
struct Field<ModP<P>> {
    static bool is_zero(ModP<P> x) { return x.v == 0; }
    static ModP<P> from_rational(const Rational& q) {
        mpz_class n = q.get_num() % P;
        mpz_class d = q.get_den() % P;
        if (n < 0) n += P;
        if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(P));
        return ModP<P>::raw(static_cast<std::uint32_t>(n.get_ui())) /
               ModP<P>::raw(static_cast<std::uint32_t>(d.get_ui()));
    }
    static std::string name() { return "F_" + std::to_string(P); }
    static std::string to_string(ModP<P> x) { return std::to_string(x.v); }
    static std::uint32_t characteristic() { return P; }
};

template <class F>
inline bool is_zero(const F& x) { return Field<F>::is_zero(x); }

template <class F>
inline F from_rational(const Rational& q) { return Field<F>::from_rational(q); }

template <class F>
inline std::string to_string(const F& x) { return Field<F>::to_string(x); }

/// Parses "p", "p/q" or "-p/q" into a canonical rational.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

enum class ScalarMode { rational, prime };

template <class F>
struct FieldTag {
    using type = F;
};

/// Runs fn(FieldTag<F>{}) for the field selected at run time.
template <class Fn>
decltype(auto) with_field(ScalarMode mode, std::uint32_t prime, Fn&& fn) {
    if (mode == ScalarMode::rational) return fn(FieldTag<Rational>{});
    if (prime == kPrimeA) return fn(FieldTag<FpA>{});
    if (prime == kPrimeB) return fn(FieldTag<FpB>{});
    throw std::invalid_argument("unsupported prime " + std::to_string(prime) + " (supported: " +
                                std::to_string(kPrimeA) + ", " + std::to_string(kPrimeB) + ")");
}

}  // namespace sela
