#pragma once

/**
 * @file l_series.hpp
 * @brief Numerical L(s, chi), zeta, Euler products and the log expansion
 * that isolates primes in one residue class.
 *
 * Every evaluation carries a bound on what truncation left out. Arithmetic
 * is double precision; exact character values are converted at the
 * boundary.
 *
 * l_direct() sums n <= N and adds the tail analytically: splitting n by its
 * residue a mod k, the tail is k^{-s} sum_a chi(a) zeta(s, (N + a)/k) with a
 * Hurwitz zeta tail from Euler-Maclaurin. For t^{-s} every even derivative
 * is positive, so the remainder is bounded by the first omitted term.
 */

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "arith.hpp"
#include "characters.hpp"
#include "primes.hpp"

namespace dirichlet {

using complex = std::complex<double>;

struct LSeriesEvaluation {
    complex s;
    std::int64_t modulus = 1;
    std::vector<std::int64_t> tuple;
    complex value;
    /// Number of terms N, or the prime bound P for products.
    std::int64_t truncation = 0;
    double tail_bound = 0.0;
};

namespace detail {

/// Neumaier compensated sum.
class KahanSum {
public:
    void add(complex x) {
        add_part(re_, cre_, x.real());
        add_part(im_, cim_, x.imag());
        abs_total_ += std::abs(x);
    }
    complex value() const { return {re_ + cre_, im_ + cim_}; }
    /// Rounding error bound for the accumulated sum.
    double error_bound() const { return 4.0 * std::numeric_limits<double>::epsilon() * abs_total_; }

private:
    static void add_part(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0, abs_total_ = 0;
};

/// Complex values of chi over one period.
inline std::vector<complex> period_values(const DirichletCharacter& chi) {
    std::vector<complex> out;
    out.reserve(chi.table().size());
    for (const auto& v : chi.table()) out.push_back(v.to_complex());
    return out;
}

struct HurwitzTail {
    double value;
    double error;
};

/// sum_{m >= 0} (m + x)^{-s} for real s > 1 and x >= 8, by Euler-Maclaurin with 6 Bernoulli terms.
inline HurwitzTail hurwitz_tail(double s, double x) {
    // B_{2j} / (2j)!
    static constexpr std::array<double, 7> bernoulli_ratio = {
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
        1.0 / 74724249600.0,
    };
    double sum = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
    // rising = s (s+1) ... (s + 2j - 2); power = x^{-s-2j+1}
    double rising = s;
    double power = std::pow(x, -s - 1.0);
    for (std::size_t j = 0; j < 6; ++j) {
        sum += bernoulli_ratio[j] * rising * power;
        rising *= (s + 2.0 * static_cast<double>(j) + 1.0) * (s + 2.0 * static_cast<double>(j) + 2.0);
        power /= x * x;
    }
    const double omitted = std::abs(bernoulli_ratio[6] * rising * power);
    return {sum, omitted + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(sum)};
}

inline void require_real_s_above_one(double s, const char* what) {
    if (!(s > 1.0)) throw domain_error(std::string(what) + ": requires s > 1");
}

} // namespace detail

/// sum_{n <= N} n^{-s}, tail bounded by N^{1-s}/(s-1).
inline LSeriesEvaluation zeta_partial(double s, std::int64_t terms) {
    detail::require_real_s_above_one(s, "zeta_partial");
    if (terms < 1) throw domain_error("zeta_partial: N must be >= 1");
    double sum = 0.0;
    for (std::int64_t n = terms; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    const double tail = std::pow(static_cast<double>(terms), 1.0 - s) / (s - 1.0);
    return {{s, 0.0}, 1, {}, {sum, 0.0}, terms, tail};
}

/// L(s, chi) for real s > 1, to within `tol`.
inline LSeriesEvaluation l_direct(double s, const DirichletCharacter& chi, double tol = 1e-10) {
    if (!(s > 1.0)) throw domain_error("l_direct: requires s > 1; use l_at_one for s = 1");
    const std::int64_t k = chi.modulus();
    const auto values = detail::period_values(chi);
    const auto kd = static_cast<double>(k);

    std::int64_t blocks = std::max<std::int64_t>(64, (2048 + k - 1) / k);
    for (;;) {
        const std::int64_t n_max = blocks * k;
        detail::KahanSum partial;
        for (std::int64_t n = n_max; n >= 1; --n) {
            const complex c = values[static_cast<std::size_t>(n % k)];
            if (c == 0.0) continue;
            partial.add(c * std::pow(static_cast<double>(n), -s));
        }
        // n = N + a + m k with a in [1, k]: tail = k^{-s} sum_a chi(a) zeta(s, (N + a)/k).
        detail::KahanSum tail;
        double tail_err = 0.0;
        const double scale = std::pow(kd, -s);
        for (std::int64_t a = 1; a <= k; ++a) {
            const complex c = values[static_cast<std::size_t>(a % k)];
            if (c == 0.0) continue;
            const auto h = detail::hurwitz_tail(s, static_cast<double>(n_max + a) / kd);
            tail.add(c * scale * h.value);
            tail_err += scale * h.error;
        }
        const double bound = tail_err + partial.error_bound() + tail.error_bound();
        if (bound < tol || n_max > 100'000'000) {
            if (bound >= tol) throw resource_error("l_direct: tolerance not reachable");
            return {{s, 0.0}, k, exponent_tuple(chi), partial.value() + tail.value(), n_max, bound};
        }
        blocks *= 4;
    }
}

/// L(s, chi) for complex s with Re(s) > 1 by plain truncation; N from N^{1-sigma}/(sigma-1) < tol.
inline LSeriesEvaluation l_direct(complex s, const DirichletCharacter& chi, double tol = 1e-8) {
    const double sigma = s.real();
    if (!(sigma > 1.0)) throw domain_error("l_direct: requires Re(s) > 1; use l_at_one for s = 1");
    const double n_real = std::ceil(std::pow(tol * (sigma - 1.0), 1.0 / (1.0 - sigma)));
    if (!(n_real <= 1e8)) throw resource_error("l_direct: truncation for this tolerance exceeds 10^8 terms");
    const auto n_max = std::max<std::int64_t>(1, static_cast<std::int64_t>(n_real));
    const auto values = detail::period_values(chi);
    const std::int64_t k = chi.modulus();
    detail::KahanSum partial;
    for (std::int64_t n = n_max; n >= 1; --n) {
        const complex c = values[static_cast<std::size_t>(n % k)];
        if (c == 0.0) continue;
        partial.add(c * std::exp(-s * std::log(static_cast<double>(n))));
    }
    const double tail = std::pow(static_cast<double>(n_max), 1.0 - sigma) / (sigma - 1.0);
    return {s, k, exponent_tuple(chi), partial.value(), n_max, tail + partial.error_bound()};
}

/**
 * prod_{q <= P, q not dividing k} (1 - chi(q) q^{-s})^{-1}.
 *
 * With B = P^{1-s} / ((s-1)(1 - P^{-s})) bounding the log of the omitted
 * factors, the reported tail is |product| (e^B - 1).
 */
inline LSeriesEvaluation euler_product(double s, const DirichletCharacter& chi, std::span<const std::int64_t> primes,
                                       std::int64_t prime_bound) {
    detail::require_real_s_above_one(s, "euler_product");
    const std::int64_t k = chi.modulus();
    complex product = 1.0;
    for (auto q : primes) {
        if (q > prime_bound) break;
        const auto v = chi(q);
        if (v.is_zero()) continue;
        product /= 1.0 - v.to_complex() * std::pow(static_cast<double>(q), -s);
    }
    double tail = 0.0;
    if (prime_bound >= 2) {
        const auto p = static_cast<double>(prime_bound);
        const double b = std::pow(p, 1.0 - s) / ((s - 1.0) * (1.0 - std::pow(p, -s)));
        tail = std::abs(product) * std::expm1(b);
    } else {
        tail = std::numeric_limits<double>::infinity();
    }
    return {{s, 0.0}, k, exponent_tuple(chi), product, prime_bound, tail};
}

inline LSeriesEvaluation euler_product(double s, const DirichletCharacter& chi, std::int64_t prime_bound) {
    if (prime_bound < 2) {
        detail::require_real_s_above_one(s, "euler_product");
        return {{s, 0.0}, chi.modulus(), exponent_tuple(chi), 1.0, prime_bound,
                std::numeric_limits<double>::infinity()};
    }
    const auto primes = PrimeTable(prime_bound).primes();
    return euler_product(s, chi, primes, prime_bound);
}

struct LogExpansion {
    /// sum_{q <= P, q not dividing k} chi(q) q^{-s}
    complex main_term;
    /// sum_{q <= P, 2 <= j <= J} chi(q^j) / (j q^{js})
    complex higher_terms;
};

inline LogExpansion log_l_expansion(double s, const DirichletCharacter& chi, std::span<const std::int64_t> primes,
                                    std::int64_t prime_bound, int max_power) {
    detail::require_real_s_above_one(s, "log_l_expansion");
    if (max_power < 2) throw domain_error("log_l_expansion: J must be >= 2");
    detail::KahanSum main;
    detail::KahanSum higher;
    for (auto q : primes) {
        if (q > prime_bound) break;
        const auto v = chi(q);
        if (v.is_zero()) continue;
        const auto& root = v.root();
        const double base = std::pow(static_cast<double>(q), -s);
        main.add(root.to_complex() * base);
        double weight = base;
        for (int j = 2; j <= max_power; ++j) {
            weight *= base;
            if (weight == 0.0) break;
            higher.add(root.pow(j).to_complex() * (weight / j));
        }
    }
    return {main.value(), higher.value()};
}

inline LogExpansion log_l_expansion(double s, const DirichletCharacter& chi, std::int64_t prime_bound, int max_power) {
    if (prime_bound < 2) {
        detail::require_real_s_above_one(s, "log_l_expansion");
        if (max_power < 2) throw domain_error("log_l_expansion: J must be >= 2");
        return {0.0, 0.0};
    }
    const auto primes = PrimeTable(prime_bound).primes();
    return log_l_expansion(s, chi, primes, prime_bound, max_power);
}

struct IdentityCheck {
    complex lhs;
    double rhs;
    double residual;
};

/**
 * Both sides of
 *   sum_chi conj(chi(m)) sum_{q <= P, j <= J} chi(q^j)/(j q^{js})
 *     = phi(k) sum_{q <= P, j <= J, q^j = m (mod k)} q^{-js}/j,
 * which holds term by term through orthogonality at any truncation.
 */
inline IdentityCheck fundamental_identity_check(std::span<const DirichletCharacter> chars, std::int64_t m, double s,
                                                std::span<const std::int64_t> primes, std::int64_t prime_bound,
                                                int max_power) {
    detail::require_real_s_above_one(s, "fundamental_identity_check");
    if (chars.empty()) throw domain_error("fundamental_identity_check: no characters");
    if (max_power < 1) throw domain_error("fundamental_identity_check: J must be >= 1");
    const std::int64_t k = chars.front().modulus();
    if (gcd(m, k) != 1) throw not_a_unit_error("fundamental_identity_check: m must be a unit mod k");

    detail::KahanSum lhs;
    for (const auto& chi : chars) {
        detail::KahanSum inner;
        for (auto q : primes) {
            if (q > prime_bound) break;
            const auto v = chi(q);
            if (v.is_zero()) continue;
            const double base = std::pow(static_cast<double>(q), -s);
            double weight = 1.0;
            for (int j = 1; j <= max_power; ++j) {
                weight *= base;
                if (weight == 0.0) break;
                inner.add(v.root().pow(j).to_complex() * (weight / j));
            }
        }
        lhs.add(std::conj(chi(m).to_complex()) * inner.value());
    }

    const std::int64_t target = mod_reduce(m, k);
    detail::KahanSum rhs;
    for (auto q : primes) {
        if (q > prime_bound) break;
        const double base = std::pow(static_cast<double>(q), -s);
        double weight = 1.0;
        std::int64_t power = 1 % k;
        for (int j = 1; j <= max_power; ++j) {
            weight *= base;
            power = mul_mod(power, q, k);
            if (weight == 0.0) break;
            if (power == target) rhs.add(weight / j);
        }
    }
    const double rhs_value = static_cast<double>(chars.size()) * rhs.value().real();
    return {lhs.value(), rhs_value, std::abs(lhs.value() - rhs_value)};
}

inline IdentityCheck fundamental_identity_check(std::int64_t k, std::int64_t m, double s, std::int64_t prime_bound,
                                                int max_power) {
    if (k < 1) throw domain_error("fundamental_identity_check: modulus must be >= 1");
    if (gcd(m, k) != 1) throw not_a_unit_error("fundamental_identity_check: m must be a unit mod k");
    const auto chars = enumerate_characters(k);
    const auto primes = prime_bound >= 2 ? PrimeTable(prime_bound).primes() : std::vector<std::int64_t>{};
    return fundamental_identity_check(chars, m, s, primes, prime_bound, max_power);
}

struct LAtOne {
    complex value;
    std::int64_t truncation;
    double error_bound;
    /// max_x |sum_{n <= x} chi(n)| over one period.
    double max_partial_sum;
    /// |value| > 10 * error_bound.
    bool nonzero_certified;
};

/**
 * L(1, chi) = sum chi(n)/n for non-principal chi.
 *
 * N is a multiple of k, so the partial sum S(N) vanishes and Abel summation
 * bounds the tail by H/(N+1), H the largest |S(x)|.
 */
inline LAtOne l_at_one(const DirichletCharacter& chi, double tol = 1e-7) {
    if (classify(chi) == CharacterClass::Principal) {
        throw domain_error("l_at_one: L(s, chi0) has a simple pole at s = 1");
    }
    if (!(tol > 0.0)) throw domain_error("l_at_one: tolerance must be positive");
    const std::int64_t k = chi.modulus();
    const auto values = detail::period_values(chi);

    double h = 0.0;
    complex running = 0.0;
    for (std::int64_t x = 1; x <= k; ++x) {
        running += values[static_cast<std::size_t>(x % k)];
        h = std::max(h, std::abs(running));
    }
    const double needed = std::ceil(h / tol);
    if (needed > 1e9) throw resource_error("l_at_one: tolerance needs more than 10^9 terms");
    const auto periods = std::max<std::int64_t>(1, (static_cast<std::int64_t>(needed) + k - 1) / k);
    const std::int64_t n_max = periods * k;

    detail::KahanSum sum;
    for (std::int64_t n = n_max; n >= 1; --n) {
        const complex c = values[static_cast<std::size_t>(n % k)];
        if (c == 0.0) continue;
        sum.add(c / static_cast<double>(n));
    }
    const double bound = h / static_cast<double>(n_max + 1) + sum.error_bound();
    const complex value = sum.value();
    return {value, n_max, bound, h, std::abs(value) > 10.0 * bound};
}

struct ProfileRow {
    double s;
    double value;
    std::int64_t truncation;
    /// sum_{q > P} q^{-s} <= P^{1-s}/(s-1)
    double tail_bound;
};

/// sum_{q <= P, q = m (mod k)} q^{-s} for each s.
inline std::vector<ProfileRow> divergence_profile(std::int64_t k, std::int64_t m, std::span<const double> s_values,
                                                  std::span<const std::int64_t> primes, std::int64_t prime_bound) {
    if (k < 1) throw domain_error("divergence_profile: modulus must be >= 1");
    const std::int64_t r = mod_reduce(m, k);
    std::vector<ProfileRow> rows;
    for (double s : s_values) {
        detail::require_real_s_above_one(s, "divergence_profile");
        double sum = 0.0;
        // Largest primes first to keep the sum accurate.
        for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
            if (*it > prime_bound || *it % k != r) continue;
            sum += std::pow(static_cast<double>(*it), -s);
        }
        const double tail = prime_bound >= 1
                                ? std::pow(static_cast<double>(std::max<std::int64_t>(prime_bound, 1)), 1.0 - s) / (s - 1.0)
                                : std::numeric_limits<double>::infinity();
        rows.push_back({s, sum, prime_bound, tail});
    }
    return rows;
}

inline std::vector<ProfileRow> divergence_profile(std::int64_t k, std::int64_t m, std::span<const double> s_values,
                                                  std::int64_t prime_bound) {
    const auto primes = prime_bound >= 2 ? PrimeTable(prime_bound).primes() : std::vector<std::int64_t>{};
    return divergence_profile(k, m, s_values, primes, prime_bound);
}

/// True when the profile value strictly increases each time s decreases.
inline bool increases_as_s_decreases(std::span<const ProfileRow> rows) {
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const auto& a = rows[i];
        const auto& b = rows[i + 1];
        if (b.s < a.s ? !(b.value > a.value) : !(a.value > b.value)) return false;
    }
    return true;
}

} // namespace dirichlet
