#pragma once

/**
 * @file arith.hpp
 * @brief Integer building blocks: gcd, modular powers, trial-division
 * factorization, Euler phi and the Chinese remainder theorem.
 *
 * Moduli and factorized values are limited to 2^31; intermediate products
 * are formed in 128-bit arithmetic so everything below 2^62 is exact.
 * Inputs beyond those limits raise dirichlet::domain_error.
 */

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dirichlet {

inline constexpr std::int64_t max_modulus = std::int64_t{1} << 31;
inline constexpr std::int64_t max_product = std::int64_t{1} << 62;

struct PrimePower {
    std::int64_t prime;
    int exponent;

    std::int64_t value() const {
        std::int64_t v = 1;
        for (int i = 0; i < exponent; ++i) v *= prime;
        return v;
    }

    bool operator==(const PrimePower&) const = default;
};

/// n = product of prime^exponent over `factors`, primes strictly increasing.
struct Factorization {
    std::int64_t value = 1;
    std::vector<PrimePower> factors;

    bool operator==(const Factorization&) const = default;
};

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

/// Least nonnegative residue of `a` modulo `m` (m >= 1).
inline std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(
        static_cast<__int128>(mod_reduce(a, m)) * mod_reduce(b, m) % m);
}

inline std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t modulus) {
    if (modulus < 1) throw domain_error("mod_pow: modulus must be >= 1");
    if (modulus > max_product) throw domain_error("mod_pow: modulus exceeds 2^62");
    std::int64_t result = 1 % modulus;
    std::int64_t b = mod_reduce(base, modulus);
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, b, modulus);
        b = mul_mod(b, b, modulus);
        exp >>= 1U;
    }
    return result;
}

/// Deterministic trial division; n must lie in [0, 2^31].
inline bool is_prime(std::int64_t n) {
    if (n > max_modulus) throw domain_error("is_prime: argument exceeds 2^31");
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

inline Factorization factorize(std::int64_t n) {
    if (n < 1) throw domain_error("factorize: argument must be >= 1");
    if (n > max_modulus) throw domain_error("factorize: argument exceeds 2^31");
    Factorization f{n, {}};
    auto take = [&](std::int64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.factors.push_back({p, e});
    };
    take(2);
    take(3);
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        take(d);
        take(d + 2);
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

inline std::int64_t euler_phi(const Factorization& f) {
    std::int64_t phi = f.value;
    for (const auto& pp : f.factors) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

inline std::int64_t euler_phi(std::int64_t k) {
    return euler_phi(factorize(k));
}

/// Inverse of a modulo m; throws not_a_unit_error when gcd(a, m) != 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 1) throw domain_error("mod_inverse: modulus must be >= 1");
    std::int64_t old_r = mod_reduce(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1 && m != 1) {
        throw not_a_unit_error("mod_inverse: " + std::to_string(a) + " is not a unit mod " +
                               std::to_string(m));
    }
    return mod_reduce(old_s, m);
}

struct Congruence {
    std::int64_t residue;
    std::int64_t modulus;
};

/// Unique x in [0, prod m_i) with x = r_i (mod m_i); moduli pairwise coprime.
inline std::int64_t crt_combine(std::span<const Congruence> system) {
    std::int64_t x = 0;
    std::int64_t m = 1;
    for (const auto& c : system) {
        if (c.modulus < 1) throw domain_error("crt_combine: modulus must be >= 1");
        if (gcd(m, c.modulus) != 1) throw domain_error("crt_combine: moduli are not pairwise coprime");
        if (static_cast<__int128>(m) * c.modulus > max_product) {
            throw domain_error("crt_combine: product of moduli exceeds 2^62");
        }
        // x + m*t = r (mod c.modulus)
        std::int64_t r = mod_reduce(c.residue, c.modulus);
        std::int64_t diff = mod_reduce(r - x % c.modulus, c.modulus);
        std::int64_t t = mul_mod(diff, mod_inverse(m % c.modulus, c.modulus), c.modulus);
        x += m * t;
        m *= c.modulus;
    }
    return m == 1 ? 0 : x;
}

inline std::int64_t crt_combine(std::initializer_list<Congruence> system) {
    return crt_combine(std::span<const Congruence>(system.begin(), system.size()));
}

/// Multiplicative order of a unit `a` modulo m, given phi(m)'s factorization.
inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
    if (m == 1) return 1;
    if (gcd(a, m) != 1) throw not_a_unit_error("multiplicative_order: not a unit");
    std::int64_t order = euler_phi(m);
    for (const auto& pp : factorize(order).factors) {
        for (int i = 0; i < pp.exponent && order % pp.prime == 0; ++i) {
            if (mod_pow(a, static_cast<std::uint64_t>(order / pp.prime), m) != 1) break;
            order /= pp.prime;
        }
    }
    return order;
}

} // namespace dirichlet
