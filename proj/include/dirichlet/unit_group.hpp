#pragma once

/**
 * @file unit_group.hpp
 * @brief Cyclic decomposition of (Z/kZ)^*, primitive roots and index vectors.
 *
 * The canonical structure lists the generators of the 2-part first (-1, then
 * 5 when 8 | k), followed by one primitive root per odd prime power in
 * increasing prime order. Each generator is lifted by CRT to a residue that
 * is 1 modulo every other prime-power factor.
 *
 * A structure owns a discrete-log table built once by walking all exponent
 * tuples, so index_vector() is a table lookup. It is immutable afterwards.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace dirichlet {

/// Largest unit group for which a discrete-log table is built.
inline constexpr std::int64_t max_table_units = std::int64_t{1} << 24;

struct Generator {
    std::int64_t residue;
    std::int64_t order;

    bool operator==(const Generator&) const = default;
};

/// Smallest primitive root modulo p, lifted to p^exponent (g -> g + p when g^{p-1} = 1 mod p^2).
inline std::int64_t primitive_root_mod_prime_power(std::int64_t p, int exponent) {
    if (p == 2) throw domain_error("primitive_root_mod_prime_power: p must be odd");
    if (exponent < 1) throw domain_error("primitive_root_mod_prime_power: exponent must be >= 1");
    if (!is_prime(p)) throw domain_error("primitive_root_mod_prime_power: " + std::to_string(p) + " is not prime");

    const auto phi_factors = factorize(p - 1).factors;
    std::int64_t g = 2;
    for (;; ++g) {
        bool primitive = true;
        for (const auto& q : phi_factors) {
            if (mod_pow(g, static_cast<std::uint64_t>((p - 1) / q.prime), p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) break;
    }
    if (exponent >= 2 && static_cast<__int128>(p) * p <= max_product &&
        mod_pow(g, static_cast<std::uint64_t>(p - 1), p * p) == 1) {
        g += p;
    }
    return g;
}

class UnitGroupStructure;

/// Exponents of a unit with respect to a structure's generators.
struct IndexVector {
    std::vector<std::int64_t> exponents;

    bool operator==(const IndexVector&) const = default;
};

class UnitGroupStructure {
public:
    /// Canonical structure of (Z/kZ)^*.
    explicit UnitGroupStructure(std::int64_t k) : k_(k) {
        if (k < 1) throw domain_error("structure: modulus must be >= 1");
        if (k > max_modulus) throw domain_error("structure: modulus exceeds 2^31");
        const auto f = factorize(k);
        std::vector<Congruence> base;
        for (const auto& pp : f.factors) base.push_back({1, pp.value()});

        auto lift = [&](std::size_t slot, std::int64_t residue) {
            auto system = base;
            system[slot].residue = residue;
            return crt_combine(system);
        };

        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            const auto& pp = f.factors[i];
            const std::int64_t q = pp.value();
            if (pp.prime == 2) {
                if (pp.exponent >= 2) generators_.push_back({lift(i, q - 1), 2});
                if (pp.exponent >= 3) generators_.push_back({lift(i, 5), q / 4});
            } else {
                const std::int64_t g = primitive_root_mod_prime_power(pp.prime, pp.exponent);
                generators_.push_back({lift(i, g), q / pp.prime * (pp.prime - 1)});
            }
        }
        build_table();
    }

    /// Structure from caller-chosen generators; validated against the invariants.
    UnitGroupStructure(std::int64_t k, std::vector<Generator> generators)
        : k_(k), generators_(std::move(generators)) {
        if (k < 1) throw domain_error("structure: modulus must be >= 1");
        if (k > max_modulus) throw domain_error("structure: modulus exceeds 2^31");
        std::int64_t product = 1;
        for (auto& g : generators_) {
            if (g.order < 1) throw domain_error("structure: generator order must be >= 1");
            g.residue = mod_reduce(g.residue, k);
            if (gcd(g.residue, k) != 1) throw domain_error("structure: generator is not a unit");
            if (k > 1 && multiplicative_order(g.residue, k) != g.order) {
                throw domain_error("structure: generator " + std::to_string(g.residue) +
                                   " does not have order " + std::to_string(g.order));
            }
            product *= g.order;
            if (product > max_table_units) throw resource_error("structure: group too large");
        }
        if (product != euler_phi(k)) throw domain_error("structure: orders do not multiply to phi(k)");
        // Injective on phi(k) tuples, hence bijective onto the units.
        build_table();
    }

    std::int64_t modulus() const { return k_; }
    // Temporaries hand back owned storage so range-for over structure(k).generators() cannot dangle.
    std::span<const Generator> generators() const& { return generators_; }
    std::vector<Generator> generators() && { return std::move(generators_); }
    std::size_t rank() const { return generators_.size(); }
    std::int64_t order() const { return static_cast<std::int64_t>(units_.size()); }

    /// lcm of generator orders.
    std::int64_t exponent() const {
        std::int64_t e = 1;
        for (const auto& g : generators_) e = lcm(e, g.order);
        return e;
    }

    /// Units in exponent-tuple enumeration order (last generator fastest).
    std::span<const std::int64_t> units() const& { return units_; }
    std::vector<std::int64_t> units() && { return std::move(units_); }

    bool is_unit(std::int64_t n) const { return gcd(mod_reduce(n, k_), k_) == 1; }

    IndexVector index_vector(std::int64_t n) const {
        const std::int64_t r = mod_reduce(n, k_);
        if (gcd(r, k_) != 1) {
            throw not_a_unit_error("index_vector: " + std::to_string(n) + " is not a unit mod " +
                                   std::to_string(k_));
        }
        return tuple_at(log_slot_[static_cast<std::size_t>(r)]);
    }

    std::int64_t reconstruct(const IndexVector& v) const {
        if (v.exponents.size() != generators_.size()) throw domain_error("reconstruct: wrong number of exponents");
        std::int64_t r = 1 % k_;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            const auto e = v.exponents[i];
            if (e < 0 || e >= generators_[i].order) throw domain_error("reconstruct: exponent out of range");
            r = mul_mod(r, mod_pow(generators_[i].residue, static_cast<std::uint64_t>(e), k_), k_);
        }
        return r;
    }

    /// Position of unit n in units(); the mixed-radix encoding of its index vector.
    std::int64_t log_slot(std::int64_t n) const {
        const std::int64_t r = mod_reduce(n, k_);
        const std::int64_t s = log_slot_[static_cast<std::size_t>(r)];
        if (s == unfilled) throw not_a_unit_error("log_slot: " + std::to_string(n) + " is not a unit");
        return s;
    }

    /// Decodes a mixed-radix slot into an exponent tuple.
    IndexVector tuple_at(std::int64_t slot) const {
        IndexVector v{std::vector<std::int64_t>(generators_.size(), 0)};
        for (std::size_t i = generators_.size(); i-- > 0;) {
            v.exponents[i] = slot % generators_[i].order;
            slot /= generators_[i].order;
        }
        return v;
    }

private:
    static constexpr std::int64_t unfilled = -1;

    void build_table() {
        std::int64_t total = 1;
        for (const auto& g : generators_) total *= g.order;
        if (total > max_table_units) throw resource_error("structure: unit group exceeds table limit");
        log_slot_.assign(static_cast<std::size_t>(k_), unfilled);
        units_.assign(static_cast<std::size_t>(total), 0);

        // Odometer over exponent tuples; prefix[i] = prod_{j<i} g_j^{e_j}.
        const std::size_t rank = generators_.size();
        std::vector<std::int64_t> e(rank, 0);
        std::vector<std::int64_t> prefix(rank + 1, 1 % k_);
        for (std::int64_t slot = 0; slot < total; ++slot) {
            const std::int64_t r = prefix[rank];
            units_[static_cast<std::size_t>(slot)] = r;
            auto& entry = log_slot_[static_cast<std::size_t>(r)];
            if (entry != unfilled) throw domain_error("structure: exponent map is not injective");
            entry = slot;

            std::size_t i = rank;
            while (i > 0) {
                --i;
                if (++e[i] < generators_[i].order) {
                    prefix[i + 1] = mul_mod(prefix[i + 1], generators_[i].residue, k_);
                    for (std::size_t j = i + 1; j < rank; ++j) prefix[j + 1] = prefix[j];
                    break;
                }
                e[i] = 0;
            }
        }
    }

    std::int64_t k_;
    std::vector<Generator> generators_;
    std::vector<std::int64_t> units_;
    std::vector<std::int64_t> log_slot_;
};

inline UnitGroupStructure structure(std::int64_t k) { return UnitGroupStructure(k); }

inline IndexVector index_vector(const UnitGroupStructure& s, std::int64_t n) { return s.index_vector(n); }

inline std::int64_t reconstruct(const UnitGroupStructure& s, const IndexVector& v) { return s.reconstruct(v); }

} // namespace dirichlet
