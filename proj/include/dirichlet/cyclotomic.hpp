#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact roots of unity e^{2 pi i a/n} stored as reduced fractions a/n mod 1.
 *
 * All character values live here, so equality, products and conjugates are
 * exact. Sums of roots are decided symbolically by cancelling complete
 * prime-order orbits; see sum_roots().
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"

namespace dirichlet {

class RootOfUnity {
public:
    constexpr RootOfUnity() = default;

    /// e^{2 pi i num/den}; any integer numerator, den >= 1.
    RootOfUnity(std::int64_t num, std::int64_t den) {
        if (den < 1) throw domain_error("RootOfUnity: denominator must be >= 1");
        num = mod_reduce(num, den);
        std::int64_t g = gcd(num, den);
        if (num == 0) {
            num_ = 0;
            den_ = 1;
        } else {
            num_ = num / g;
            den_ = den / g;
        }
    }

    static RootOfUnity one() { return {}; }
    /// e^{2 pi i/n}, the canonical primitive n-th root.
    static RootOfUnity primitive(std::int64_t n) { return {1, n}; }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    /// Multiplicative order, which is the reduced denominator.
    std::int64_t order() const { return den_; }

    bool is_one() const { return num_ == 0; }
    bool is_real() const { return den_ <= 2; }

    std::complex<double> to_complex() const {
        if (num_ == 0) return {1.0, 0.0};
        // Exact values on the axes keep real characters free of rounding.
        if (den_ == 2) return {-1.0, 0.0};
        if (den_ == 4) return num_ == 1 ? std::complex<double>{0.0, 1.0}
                                        : std::complex<double>{0.0, -1.0};
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) /
                             static_cast<double>(den_);
        return {std::cos(angle), std::sin(angle)};
    }

    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses the "a/n" form; the input need not be reduced.
    static RootOfUnity parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) throw domain_error("RootOfUnity: expected a/n, got '" + text + "'");
        try {
            return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
        } catch (const std::logic_error&) {
            throw domain_error("RootOfUnity: expected a/n, got '" + text + "'");
        }
    }

    friend RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y) {
        const std::int64_t den = lcm(x.den_, y.den_);
        return {x.num_ * (den / x.den_) + y.num_ * (den / y.den_), den};
    }

    RootOfUnity& operator*=(const RootOfUnity& y) { return *this = *this * y; }

    RootOfUnity conj() const { return {den_ - num_, den_}; }

    /// x^e for any integer e; negative powers are conjugate powers.
    RootOfUnity pow(std::int64_t e) const {
        return {mul_mod(num_, mod_reduce(e, den_), den_), den_};
    }

    /// Exponent of this root as a multiple of e^{2 pi i/n}; n must be a multiple of order().
    std::int64_t exponent_over(std::int64_t n) const {
        if (n % den_ != 0) throw domain_error("RootOfUnity: order does not divide " + std::to_string(n));
        return num_ * (n / den_);
    }

    bool operator==(const RootOfUnity&) const = default;
    auto operator<=>(const RootOfUnity&) const = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline RootOfUnity root_mul(const RootOfUnity& x, const RootOfUnity& y) { return x * y; }
inline RootOfUnity root_conj(const RootOfUnity& x) { return x.conj(); }
inline RootOfUnity root_pow(const RootOfUnity& x, std::int64_t e) { return x.pow(e); }
inline bool is_real(const RootOfUnity& x) { return x.is_real(); }
inline std::complex<double> to_complex(const RootOfUnity& x) { return x.to_complex(); }

inline std::ostream& operator<<(std::ostream& os, const RootOfUnity& x) {
    return os << x.to_string();
}

/// Value of a Dirichlet character: zero off the units, a root of unity on them.
class CharacterValue {
public:
    constexpr CharacterValue() = default;
    CharacterValue(RootOfUnity root) : root_(root), zero_(false) {}  // NOLINT: implicit by design of the value domain

    static CharacterValue zero() { return {}; }

    bool is_zero() const { return zero_; }
    /// Precondition: !is_zero().
    const RootOfUnity& root() const { return root_; }

    std::complex<double> to_complex() const {
        return zero_ ? std::complex<double>{0.0, 0.0} : root_.to_complex();
    }

    /// "a/n" or "0".
    std::string to_string() const { return zero_ ? "0" : root_.to_string(); }

    static CharacterValue parse(const std::string& text) {
        if (text == "0") return zero();
        return RootOfUnity::parse(text);
    }

    friend CharacterValue operator*(const CharacterValue& x, const CharacterValue& y) {
        if (x.zero_ || y.zero_) return zero();
        return x.root_ * y.root_;
    }

    CharacterValue conj() const { return zero_ ? zero() : CharacterValue(root_.conj()); }

    bool operator==(const CharacterValue&) const = default;

private:
    RootOfUnity root_{};
    bool zero_ = true;
};

inline std::ostream& operator<<(std::ostream& os, const CharacterValue& x) {
    return os << x.to_string();
}

/**
 * Result of summing character values.
 *
 * `exact` is set when the sum was decided symbolically: every root cancelled
 * inside complete orbits, leaving `integer_part` copies of 1. Otherwise
 * `value` holds the floating-point sum, and `numerically_zero` flags a
 * residue below 1e-9 that could not be certified.
 */
struct RootSum {
    bool exact = true;
    std::int64_t integer_part = 0;
    std::complex<double> value{0.0, 0.0};
    bool numerically_zero = false;

    bool is_exact_zero() const { return exact && integer_part == 0; }
    bool is_exact_integer(std::int64_t n) const { return exact && integer_part == n; }
};

namespace detail {

/// Coefficients c[j] of e^{2 pi i j/N}; cancels every complete orbit
/// {r, r + N/p, ..., r + (p-1)N/p} for primes p | N, largest orbits first.
inline void cancel_prime_orbits(std::vector<std::int64_t>& coeff) {
    const auto n = static_cast<std::int64_t>(coeff.size());
    if (n <= 1) return;
    auto primes = factorize(n).factors;
    for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
        const std::int64_t p = it->prime;
        const std::int64_t stride = n / p;
        for (std::int64_t r = 0; r < stride; ++r) {
            std::int64_t m = coeff[static_cast<std::size_t>(r)];
            for (std::int64_t t = 1; t < p && m > 0; ++t) {
                m = std::min(m, coeff[static_cast<std::size_t>(r + t * stride)]);
            }
            if (m == 0) continue;
            for (std::int64_t t = 0; t < p; ++t) coeff[static_cast<std::size_t>(r + t * stride)] -= m;
        }
    }
}

} // namespace detail

/// Sum of a multiset of roots given as exponents over a common order N.
inline RootSum sum_exponents(std::span<const std::int64_t> exponents, std::int64_t order) {
    if (order < 1) throw domain_error("sum_exponents: order must be >= 1");
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(order), 0);
    for (auto e : exponents) ++coeff[static_cast<std::size_t>(mod_reduce(e, order))];
    detail::cancel_prime_orbits(coeff);

    RootSum out;
    out.integer_part = coeff[0];
    for (std::size_t j = 1; j < coeff.size(); ++j) {
        if (coeff[j] != 0) {
            out.exact = false;
            break;
        }
    }
    if (out.exact) {
        out.value = {static_cast<double>(out.integer_part), 0.0};
        return out;
    }
    for (std::size_t j = 0; j < coeff.size(); ++j) {
        if (coeff[j] == 0) continue;
        out.value += static_cast<double>(coeff[j]) *
                     RootOfUnity(static_cast<std::int64_t>(j), order).to_complex();
    }
    out.numerically_zero = std::abs(out.value) < 1e-9;
    return out;
}

/// Exact-where-possible sum of character values; Zero entries contribute nothing.
inline RootSum sum_roots(std::span<const CharacterValue> values) {
    std::int64_t order = 1;
    for (const auto& v : values) {
        if (!v.is_zero()) order = lcm(order, v.root().order());
    }
    std::vector<std::int64_t> exps;
    exps.reserve(values.size());
    for (const auto& v : values) {
        if (!v.is_zero()) exps.push_back(v.root().exponent_over(order));
    }
    return sum_exponents(exps, order);
}

inline RootSum sum_roots(std::initializer_list<CharacterValue> values) {
    return sum_roots(std::span<const CharacterValue>(values.begin(), values.size()));
}

} // namespace dirichlet
