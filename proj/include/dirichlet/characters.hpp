#pragma once

/**
 * @file characters.hpp
 * @brief Dirichlet characters as exact value tables.
 *
 * A DirichletCharacter is extensional: it is its table of values over the
 * residues 0..k-1, and two characters are equal exactly when the tables
 * agree. How the table was produced (which generators, which roots of
 * unity) is not part of its identity.
 *
 * enumerate_characters() lists the phi(k) characters in lexicographic order
 * of their exponent tuples against the canonical UnitGroupStructure: tuple
 * (t_1, ..., t_r) sends generator g_i to e^{2 pi i t_i / order_i}.
 */

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "unit_group.hpp"

namespace dirichlet {

enum class CharacterClass { Principal, RealNonPrincipal, Complex };

inline std::string_view class_name(CharacterClass c) {
    switch (c) {
    case CharacterClass::Principal: return "principal";
    case CharacterClass::RealNonPrincipal: return "real";
    case CharacterClass::Complex: return "complex";
    }
    return "?";
}

class DirichletCharacter {
public:
    /// Takes a full table over residues 0..k-1 and checks the character invariants.
    DirichletCharacter(std::int64_t modulus, std::vector<CharacterValue> table)
        : k_(modulus), table_(std::move(table)) {
        if (k_ < 1) throw domain_error("character: modulus must be >= 1");
        if (static_cast<std::int64_t>(table_.size()) != k_) {
            throw domain_error("character: table must have exactly k entries");
        }
        validate();
    }

    std::int64_t modulus() const { return k_; }

    /// Value at any integer n, reduced mod k first.
    CharacterValue operator()(std::int64_t n) const {
        return table_[static_cast<std::size_t>(mod_reduce(n, k_))];
    }

    std::span<const CharacterValue> table() const& { return table_; }
    std::vector<CharacterValue> table() && { return std::move(table_); }

    bool operator==(const DirichletCharacter&) const = default;
    auto operator<=>(const DirichletCharacter& other) const {
        if (auto c = k_ <=> other.k_; c != 0) return c;
        for (std::size_t i = 0; i < table_.size(); ++i) {
            const auto& a = table_[i];
            const auto& b = other.table_[i];
            if (a.is_zero() != b.is_zero()) return a.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
            if (a.is_zero()) continue;
            if (auto c = a.root() <=> b.root(); c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

private:
    struct unchecked_t {};
    DirichletCharacter(unchecked_t, std::int64_t modulus, std::vector<CharacterValue> table)
        : k_(modulus), table_(std::move(table)) {}

    friend DirichletCharacter make_unchecked_character(std::int64_t, std::vector<CharacterValue>);

    void validate() const {
        for (std::int64_t r = 0; r < k_; ++r) {
            const bool unit = gcd(r, k_) == 1;
            if (unit == table_[static_cast<std::size_t>(r)].is_zero()) {
                throw domain_error("character: zero exactly off the units is violated at residue " + std::to_string(r));
            }
        }
        if (!table_[static_cast<std::size_t>(1 % k_)].root().is_one()) throw domain_error("character: chi(1) != 1");
        for (std::int64_t a = 1; a < k_; ++a) {
            if (gcd(a, k_) != 1) continue;
            for (std::int64_t b = a; b < k_; ++b) {
                if (gcd(b, k_) != 1) continue;
                if ((*this)(a * b) != (*this)(a) * (*this)(b)) {
                    throw domain_error("character: not multiplicative at (" + std::to_string(a) + ", " +
                                       std::to_string(b) + ")");
                }
            }
        }
    }

    std::int64_t k_;
    std::vector<CharacterValue> table_;
};

/// Skips the O(phi(k)^2) invariant check; for tables built from a known homomorphism.
inline DirichletCharacter make_unchecked_character(std::int64_t modulus, std::vector<CharacterValue> table) {
    return {DirichletCharacter::unchecked_t{}, modulus, std::move(table)};
}

inline DirichletCharacter principal_character(std::int64_t k) {
    if (k < 1) throw domain_error("principal_character: modulus must be >= 1");
    std::vector<CharacterValue> table(static_cast<std::size_t>(k));
    for (std::int64_t r = 0; r < k; ++r) {
        if (gcd(r, k) == 1) table[static_cast<std::size_t>(r)] = RootOfUnity::one();
    }
    return make_unchecked_character(k, std::move(table));
}

inline CharacterValue evaluate(const DirichletCharacter& chi, std::int64_t n) { return chi(n); }

/// Characters of the given structure, lexicographic in exponent tuples.
inline std::vector<DirichletCharacter> enumerate_characters(const UnitGroupStructure& s) {
    const std::int64_t k = s.modulus();
    const std::int64_t e = s.exponent();
    const auto gens = s.generators();
    const std::size_t rank = gens.size();
    const auto units = s.units();

    std::vector<RootOfUnity> roots;
    roots.reserve(static_cast<std::size_t>(e));
    for (std::int64_t x = 0; x < e; ++x) roots.emplace_back(x, e);

    // weight[i] = e / order_i turns a generator exponent into an exponent over e.
    std::vector<std::int64_t> weight(rank);
    for (std::size_t i = 0; i < rank; ++i) weight[i] = e / gens[i].order;

    std::vector<DirichletCharacter> out;
    out.reserve(units.size());
    std::vector<std::int64_t> t(rank, 0);
    std::vector<std::int64_t> v(rank, 0);
    for (std::size_t c = 0; c < units.size(); ++c) {
        // step[i]: exponent over e contributed by one unit of v_i under tuple t.
        std::vector<std::int64_t> step(rank);
        for (std::size_t i = 0; i < rank; ++i) step[i] = t[i] * weight[i] % e;

        std::vector<CharacterValue> table(static_cast<std::size_t>(k));
        std::fill(v.begin(), v.end(), 0);
        std::int64_t acc = 0;
        for (auto u : units) {
            table[static_cast<std::size_t>(u)] = roots[static_cast<std::size_t>(acc)];
            // Advance the odometer v and keep acc = sum v_i step_i mod e.
            for (std::size_t i = rank; i-- > 0;) {
                if (++v[i] < gens[i].order) {
                    acc = (acc + step[i]) % e;
                    break;
                }
                acc = mod_reduce(acc - (gens[i].order - 1) * step[i], e);
                v[i] = 0;
            }
        }
        out.push_back(make_unchecked_character(k, std::move(table)));

        for (std::size_t i = rank; i-- > 0;) {
            if (++t[i] < gens[i].order) break;
            t[i] = 0;
        }
    }
    return out;
}

inline std::vector<DirichletCharacter> enumerate_characters(std::int64_t k) {
    return enumerate_characters(UnitGroupStructure(k));
}

/// Exponent tuple of chi against a structure, read off the generator values.
inline std::vector<std::int64_t> exponent_tuple(const DirichletCharacter& chi, const UnitGroupStructure& s) {
    if (chi.modulus() != s.modulus()) throw domain_error("exponent_tuple: modulus mismatch");
    std::vector<std::int64_t> t;
    for (const auto& g : s.generators()) t.push_back(chi(g.residue).root().exponent_over(g.order));
    return t;
}

inline std::vector<std::int64_t> exponent_tuple(const DirichletCharacter& chi) {
    return exponent_tuple(chi, UnitGroupStructure(chi.modulus()));
}

inline DirichletCharacter char_mul(const DirichletCharacter& chi, const DirichletCharacter& psi) {
    if (chi.modulus() != psi.modulus()) throw domain_error("char_mul: moduli differ");
    std::vector<CharacterValue> table;
    table.reserve(chi.table().size());
    for (std::size_t r = 0; r < chi.table().size(); ++r) table.push_back(chi.table()[r] * psi.table()[r]);
    return make_unchecked_character(chi.modulus(), std::move(table));
}

inline DirichletCharacter char_conj(const DirichletCharacter& chi) {
    std::vector<CharacterValue> table;
    table.reserve(chi.table().size());
    for (const auto& v : chi.table()) table.push_back(v.conj());
    return make_unchecked_character(chi.modulus(), std::move(table));
}

inline CharacterClass classify(const DirichletCharacter& chi) {
    bool principal = true;
    for (const auto& v : chi.table()) {
        if (v.is_zero()) continue;
        if (!v.root().is_real()) return CharacterClass::Complex;
        if (!v.root().is_one()) principal = false;
    }
    return principal ? CharacterClass::Principal : CharacterClass::RealNonPrincipal;
}

/// sum_{n mod k} chi(n): phi(k) for the principal character, exactly 0 otherwise.
inline RootSum sum_over_group(const DirichletCharacter& chi) { return sum_roots(chi.table()); }

/// sum_chi chi(n) over the given characters.
inline RootSum sum_over_characters(std::span<const DirichletCharacter> chars, std::int64_t n) {
    std::vector<CharacterValue> vals;
    vals.reserve(chars.size());
    for (const auto& chi : chars) vals.push_back(chi(n));
    return sum_roots(vals);
}

inline RootSum sum_over_characters(std::int64_t k, std::int64_t n) {
    const auto chars = enumerate_characters(k);
    return sum_over_characters(chars, n);
}

/// sum_chi chi(g) conj(chi(h)); g and h must be units.
inline RootSum orthogonality_pair_sum(std::span<const DirichletCharacter> chars, std::int64_t g, std::int64_t h) {
    if (chars.empty()) throw domain_error("orthogonality_pair_sum: no characters");
    const std::int64_t k = chars.front().modulus();
    if (gcd(g, k) != 1 || gcd(h, k) != 1) {
        throw not_a_unit_error("orthogonality_pair_sum: arguments must be units mod " + std::to_string(k));
    }
    std::vector<CharacterValue> vals;
    vals.reserve(chars.size());
    for (const auto& chi : chars) vals.push_back(chi(g) * chi(h).conj());
    return sum_roots(vals);
}

inline RootSum orthogonality_pair_sum(std::int64_t k, std::int64_t g, std::int64_t h) {
    const auto chars = enumerate_characters(k);
    return orthogonality_pair_sum(chars, g, h);
}

/// A complex-valued function on the units mod k, keyed by residue.
using UnitFunction = std::map<std::int64_t, std::complex<double>>;

/// fhat(chi) = sum_g f(g) chi(g), one entry per character in `chars` order.
inline std::vector<std::complex<double>> fourier_transform(std::span<const DirichletCharacter> chars,
                                                           const UnitFunction& f) {
    if (chars.empty()) throw domain_error("fourier_transform: no characters");
    const std::int64_t k = chars.front().modulus();
    std::vector<std::complex<double>> fvals(static_cast<std::size_t>(k), 0.0);
    for (std::int64_t r = 0; r < k; ++r) {
        if (gcd(r, k) != 1) continue;
        auto it = f.find(r);
        if (it == f.end()) throw domain_error("fourier_transform: f undefined at unit " + std::to_string(r));
        fvals[static_cast<std::size_t>(r)] = it->second;
    }
    std::vector<std::complex<double>> out;
    out.reserve(chars.size());
    for (const auto& chi : chars) {
        std::complex<double> acc = 0.0;
        for (std::int64_t r = 0; r < k; ++r) acc += fvals[static_cast<std::size_t>(r)] * chi(r).to_complex();
        out.push_back(acc);
    }
    return out;
}

inline std::vector<std::complex<double>> fourier_transform(std::int64_t k, const UnitFunction& f) {
    const auto chars = enumerate_characters(k);
    return fourier_transform(chars, f);
}

/// Recovers f(g) = (1/phi(k)) sum_chi fhat(chi) conj(chi(g)).
inline UnitFunction fourier_invert(std::span<const DirichletCharacter> chars,
                                   std::span<const std::complex<double>> fhat) {
    if (chars.empty() || fhat.size() != chars.size()) {
        throw domain_error("fourier_invert: need one coefficient per character");
    }
    const std::int64_t k = chars.front().modulus();
    const auto h = static_cast<double>(chars.size());
    UnitFunction f;
    for (std::int64_t r = 0; r < k; ++r) {
        if (gcd(r, k) != 1) continue;
        std::complex<double> acc = 0.0;
        for (std::size_t c = 0; c < chars.size(); ++c) acc += fhat[c] * std::conj(chars[c](r).to_complex());
        f[r] = acc / h;
    }
    return f;
}

inline UnitFunction fourier_invert(std::int64_t k, std::span<const std::complex<double>> fhat) {
    const auto chars = enumerate_characters(k);
    return fourier_invert(chars, fhat);
}

/// Coefficients c_chi with f = sum_chi c_chi chi; for the indicator of m, c_chi = conj(chi(m))/phi(k).
inline std::vector<std::complex<double>> expansion_coefficients(std::span<const DirichletCharacter> chars,
                                                                const UnitFunction& f) {
    auto conj_f = f;
    for (auto& [r, v] : conj_f) v = std::conj(v);
    auto out = fourier_transform(chars, conj_f);
    const auto h = static_cast<double>(chars.size());
    for (auto& c : out) c = std::conj(c) / h;
    return out;
}

} // namespace dirichlet
