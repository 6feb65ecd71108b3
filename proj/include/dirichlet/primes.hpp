#pragma once

/**
 * @file primes.hpp
 * @brief Sieve of Eratosthenes, prime counts in arithmetic progressions and
 * the search for the next prime in a residue class.
 *
 * PrimeTable stores odd numbers only, one bit each, so a table up to 10^9
 * fits in about 60 MiB. Tables above 10^7 are built segment by segment.
 */

#include <cmath>
#include <cstdint>
#include <vector>

#include "arith.hpp"

namespace dirichlet {

inline constexpr std::int64_t max_sieve_bound = 1'000'000'000;

class PrimeTable {
public:
    explicit PrimeTable(std::int64_t bound) : bound_(bound) {
        if (bound < 2) throw domain_error("sieve: bound must be >= 2");
        if (bound > max_sieve_bound) throw resource_error("sieve: bound exceeds 10^9");
        bits_.assign(static_cast<std::size_t>(odd_count(bound) / 64 + 1), ~std::uint64_t{0});
        clear(1);
        if (bound <= segment_threshold) {
            for (std::int64_t p = 3; p * p <= bound; p += 2) {
                if (!test_odd(p)) continue;
                for (std::int64_t m = p * p; m <= bound; m += 2 * p) clear(m);
            }
        } else {
            sieve_segmented();
        }
    }

    std::int64_t bound() const { return bound_; }

    bool is_prime(std::int64_t n) const {
        if (n < 2 || n > bound_) {
            if (n > bound_) throw domain_error("PrimeTable: query beyond bound");
            return false;
        }
        if (n == 2) return true;
        if (n % 2 == 0) return false;
        return test_odd(n);
    }

    /// Primes <= x in increasing order; x <= bound().
    std::vector<std::int64_t> primes_up_to(std::int64_t x) const {
        if (x > bound_) throw domain_error("PrimeTable: query beyond bound");
        std::vector<std::int64_t> out;
        if (x >= 2) out.push_back(2);
        for (std::int64_t n = 3; n <= x; n += 2) {
            if (test_odd(n)) out.push_back(n);
        }
        return out;
    }

    std::vector<std::int64_t> primes() const { return primes_up_to(bound_); }

    std::int64_t count_up_to(std::int64_t x) const {
        if (x > bound_) throw domain_error("PrimeTable: query beyond bound");
        if (x < 2) return 0;
        std::int64_t count = 1;
        for (std::int64_t n = 3; n <= x; n += 2) count += test_odd(n) ? 1 : 0;
        return count;
    }

    /// |{q prime <= x : q = m (mod k)}|.
    std::int64_t count_in_progression(std::int64_t x, std::int64_t k, std::int64_t m) const {
        if (k < 1) throw domain_error("count_in_progression: modulus must be >= 1");
        if (x > bound_) throw domain_error("PrimeTable: query beyond bound");
        const std::int64_t r = mod_reduce(m, k);
        std::int64_t count = (x >= 2 && 2 % k == r) ? 1 : 0;
        for (std::int64_t n = 3; n <= x; n += 2) {
            if (n % k == r && test_odd(n)) ++count;
        }
        return count;
    }

    /// Counts per residue class: result[r] = |{q <= x : q = r (mod k)}|.
    std::vector<std::int64_t> counts_by_residue(std::int64_t x, std::int64_t k) const {
        if (k < 1) throw domain_error("counts_by_residue: modulus must be >= 1");
        if (x > bound_) throw domain_error("PrimeTable: query beyond bound");
        std::vector<std::int64_t> counts(static_cast<std::size_t>(k), 0);
        if (x >= 2) ++counts[static_cast<std::size_t>(2 % k)];
        for (std::int64_t n = 3; n <= x; n += 2) {
            if (test_odd(n)) ++counts[static_cast<std::size_t>(n % k)];
        }
        return counts;
    }

private:
    static constexpr std::int64_t segment_threshold = 10'000'000;
    static constexpr std::int64_t segment_span = 1 << 22;

    static std::int64_t odd_count(std::int64_t n) { return (n + 1) / 2; }
    static std::size_t slot(std::int64_t odd) { return static_cast<std::size_t>(odd / 2); }

    bool test_odd(std::int64_t n) const { return (bits_[slot(n) / 64] >> (slot(n) % 64)) & 1U; }
    void clear(std::int64_t n) { bits_[slot(n) / 64] &= ~(std::uint64_t{1} << (slot(n) % 64)); }

    void sieve_segmented() {
        const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(bound_))) + 1;
        std::vector<std::int64_t> base;
        {
            std::vector<bool> small(static_cast<std::size_t>(root + 1), true);
            for (std::int64_t p = 3; p <= root; p += 2) {
                if (!small[static_cast<std::size_t>(p)]) continue;
                base.push_back(p);
                for (std::int64_t m = p * p; m <= root; m += 2 * p) small[static_cast<std::size_t>(m)] = false;
            }
        }
        std::vector<char> seg;
        for (std::int64_t lo = 1; lo <= bound_; lo += segment_span) {
            const std::int64_t hi = std::min(bound_, lo + segment_span - 1);
            seg.assign(static_cast<std::size_t>(hi - lo + 1), 1);
            for (auto p : base) {
                if (p * p > hi) break;
                std::int64_t start = std::max(p * p, (lo + p - 1) / p * p);
                if (start % 2 == 0) start += p;
                for (std::int64_t m = start; m <= hi; m += 2 * p) seg[static_cast<std::size_t>(m - lo)] = 0;
            }
            for (std::int64_t n = lo | 1; n <= hi; n += 2) {
                if (!seg[static_cast<std::size_t>(n - lo)]) clear(n);
            }
        }
        clear(1);
    }

    std::int64_t bound_;
    std::vector<std::uint64_t> bits_;
};

inline PrimeTable sieve(std::int64_t bound) { return PrimeTable(bound); }

/// Primality of every integer in [lo, hi] via a segmented sieve; result[i] is for lo + i.
inline std::vector<bool> sieve_interval(std::int64_t lo, std::int64_t hi) {
    if (lo < 0 || hi < lo) throw domain_error("sieve_interval: need 0 <= lo <= hi");
    if (hi > max_sieve_bound) throw resource_error("sieve_interval: bound exceeds 10^9");
    std::vector<bool> prime(static_cast<std::size_t>(hi - lo + 1), true);
    for (std::int64_t n = lo; n <= std::min<std::int64_t>(hi, 1); ++n) prime[static_cast<std::size_t>(n - lo)] = false;
    const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    std::vector<bool> small(static_cast<std::size_t>(root + 1), true);
    for (std::int64_t p = 2; p <= root; ++p) {
        if (!small[static_cast<std::size_t>(p)]) continue;
        for (std::int64_t m = p * p; m <= root; m += p) small[static_cast<std::size_t>(m)] = false;
        for (std::int64_t m = std::max(p * p, (lo + p - 1) / p * p); m <= hi; m += p) {
            prime[static_cast<std::size_t>(m - lo)] = false;
        }
    }
    return prime;
}

inline std::int64_t count_in_progression(std::int64_t x, std::int64_t k, std::int64_t m) {
    if (x < 2) return 0;
    return PrimeTable(x).count_in_progression(x, k, m);
}

struct KroneckerSearchResult {
    std::int64_t prime;
    /// prime - mu: the interval length actually needed.
    std::int64_t interval;
    /// Upper end of the last sieved window.
    std::int64_t searched_to;
    int rounds;
};

/// Smallest prime q > mu with q = m (mod k). The window (mu, mu + w] starts at
/// w = max(64 k, 10^4) and doubles each round.
inline KroneckerSearchResult kronecker_search(std::int64_t mu, std::int64_t k, std::int64_t m) {
    if (k < 1) throw domain_error("kronecker_search: modulus must be >= 1");
    if (mu < 0) throw domain_error("kronecker_search: mu must be >= 0");
    if (gcd(m, k) != 1) throw not_a_unit_error("kronecker_search: m must be coprime to k");
    const std::int64_t r = mod_reduce(m, k);

    std::int64_t lo = mu + 1;
    std::int64_t width = std::max<std::int64_t>(64 * k, 10'000);
    for (int round = 1;; ++round) {
        const std::int64_t hi = mu + width;
        if (hi > max_sieve_bound) throw resource_error("kronecker_search: search exceeded 10^9");
        const auto prime = sieve_interval(lo, hi);
        // First n >= lo in the residue class.
        std::int64_t n = lo + mod_reduce(r - lo, k);
        for (; n <= hi; n += k) {
            if (prime[static_cast<std::size_t>(n - lo)]) return {n, n - mu, hi, round};
        }
        lo = hi + 1;
        width *= 2;
    }
}

/// count_in_progression(x, k, m) * phi(k) * ln(x) / x, using a caller-supplied table.
inline double pnt_ap_ratio(const PrimeTable& table, std::int64_t x, std::int64_t k, std::int64_t m) {
    if (x < 100) throw domain_error("pnt_ap_ratio: x must be >= 100");
    if (k < 1) throw domain_error("pnt_ap_ratio: modulus must be >= 1");
    if (gcd(m, k) != 1) throw not_a_unit_error("pnt_ap_ratio: m must be coprime to k");
    const auto count = static_cast<double>(table.count_in_progression(x, k, m));
    const auto xd = static_cast<double>(x);
    return count * static_cast<double>(euler_phi(k)) * std::log(xd) / xd;
}

inline double pnt_ap_ratio(std::int64_t x, std::int64_t k, std::int64_t m) {
    if (x < 100) throw domain_error("pnt_ap_ratio: x must be >= 100");
    return pnt_ap_ratio(PrimeTable(x), x, k, m);
}

} // namespace dirichlet
