#pragma once

/**
 * @file io.hpp
 * @brief File formats: character tables (JSON, CSV) and numeric CSV rows.
 *
 * Character-table JSON:
 *   {"modulus": k,
 *    "characters": [{"index": i, "tuple": [t_1, ...], "class": "principal|real|complex",
 *                    "values": ["a/n" | "0", ... k entries, residues 0..k-1]}]}
 *
 * Values are exact strings. Numeric CSV uses 12 significant digits.
 */

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "characters.hpp"

namespace dirichlet::io {

struct CharacterRecord {
    std::int64_t index;
    std::vector<std::int64_t> tuple;
    CharacterClass cls;
    DirichletCharacter character;
};

/// Records for enumerate_characters(k), tuples against the canonical structure.
inline std::vector<CharacterRecord> character_records(std::int64_t k) {
    const UnitGroupStructure s(k);
    auto chars = enumerate_characters(s);
    std::vector<CharacterRecord> out;
    out.reserve(chars.size());
    for (std::size_t i = 0; i < chars.size(); ++i) {
        out.push_back({static_cast<std::int64_t>(i), exponent_tuple(chars[i], s), classify(chars[i]), std::move(chars[i])});
    }
    return out;
}

inline nlohmann::ordered_json to_json(std::int64_t k, std::span<const CharacterRecord> records) {
    nlohmann::ordered_json doc;
    doc["modulus"] = k;
    auto& list = doc["characters"] = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json item;
        item["index"] = rec.index;
        item["tuple"] = rec.tuple;
        item["class"] = std::string(class_name(rec.cls));
        auto values = nlohmann::ordered_json::array();
        for (const auto& v : rec.character.table()) values.push_back(v.to_string());
        item["values"] = std::move(values);
        list.push_back(std::move(item));
    }
    return doc;
}

inline CharacterClass parse_class(const std::string& name) {
    if (name == "principal") return CharacterClass::Principal;
    if (name == "real") return CharacterClass::RealNonPrincipal;
    if (name == "complex") return CharacterClass::Complex;
    throw domain_error("character table: unknown class '" + name + "'");
}

/// Parses and validates a character-table document; every table is re-checked.
inline std::vector<CharacterRecord> from_json(const nlohmann::json& doc) {
    const auto k = doc.at("modulus").get<std::int64_t>();
    std::vector<CharacterRecord> out;
    for (const auto& item : doc.at("characters")) {
        std::vector<CharacterValue> table;
        for (const auto& v : item.at("values")) table.push_back(CharacterValue::parse(v.get<std::string>()));
        std::vector<std::int64_t> tuple;
        if (item.contains("tuple")) tuple = item.at("tuple").get<std::vector<std::int64_t>>();
        DirichletCharacter chi(k, std::move(table));
        const auto cls = parse_class(item.at("class").get<std::string>());
        if (cls != classify(chi)) throw domain_error("character table: class does not match values");
        out.push_back({item.at("index").get<std::int64_t>(), std::move(tuple), cls, std::move(chi)});
    }
    return out;
}

inline std::string join_ints(std::span<const std::int64_t> xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

/// index,tuple,class,v0,...,v_{k-1}; tuple entries separated by ';'.
inline void write_csv(std::ostream& os, std::int64_t k, std::span<const CharacterRecord> records) {
    os << "index,tuple,class";
    for (std::int64_t r = 0; r < k; ++r) os << ",v" << r;
    os << '\n';
    for (const auto& rec : records) {
        os << rec.index << ',' << join_ints(rec.tuple, ';') << ',' << class_name(rec.cls);
        for (const auto& v : rec.character.table()) os << ',' << v.to_string();
        os << '\n';
    }
}

/// Aligned human-readable table.
inline void write_table(std::ostream& os, std::int64_t k, std::span<const CharacterRecord> records) {
    os << "modulus " << k << ", " << records.size() << " characters\n";
    for (const auto& rec : records) {
        std::string head = "#" + std::to_string(rec.index) + " (" + join_ints(rec.tuple, ',') + ") " +
                           std::string(class_name(rec.cls));
        os << head;
        for (std::size_t pad = head.size(); pad < 28; ++pad) os << ' ';
        for (std::size_t r = 0; r < rec.character.table().size(); ++r) {
            os << (r ? " " : "") << rec.character.table()[r].to_string();
        }
        os << '\n';
    }
}

/// Decimal with 12 significant digits.
inline std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace dirichlet::io
