#pragma once

#include "abelcover/arrangement.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace abelcover {

/// The data of an abelian (Z/p)^m Galois cover branched along an arrangement:
/// one weight vector in (Z/p)^m per line (the value of the defining
/// homomorphism on the standard loop dual to that line). Entries are kept
/// reduced mod p.
struct CharacterMap {
    std::int64_t p = 0;
    int m = 0;
    std::vector<std::vector<std::int64_t>> weights;  // weights[r-1], each of length m

    CharacterMap() = default;
    CharacterMap(std::int64_t p_, int m_, std::vector<std::vector<std::int64_t>> w);

    std::int64_t group_order() const;
    const std::vector<std::int64_t>& weight(int label) const { return weights.at(label - 1); }
    bool surjective() const;
    bool sum_is_zero() const;
};

/// A single Z/p weight vector on the lines (one cyclic quotient of the cover).
struct CharacterRow {
    std::int64_t p = 0;
    std::vector<std::int64_t> entries;

    std::int64_t sum() const;
    bool all_zero() const;
    friend bool operator==(const CharacterRow& a, const CharacterRow& b) {
        return a.p == b.p && a.entries == b.entries;
    }
    friend bool operator<(const CharacterRow& a, const CharacterRow& b) {
        return a.entries < b.entries;
    }
    std::string str() const;
};

/// Counts r_i = #{entries equal to i}, i = 0..p-1.
std::vector<std::int64_t> weight_profile(const CharacterRow& row);

/// The built-in character for the nine-line arrangement: p = 5, m = 2,
/// weights (1,1),(1,0),(1,1),(3,3),(3,0),(0,1),(0,1),(0,2),(1,1).
CharacterMap ceva_character();

struct ValidationIssue {
    std::string check;   // "surjectivity", "sum-zero", "branched-lines", "node-smoothness"
    std::string detail;
};

struct ValidationReport {
    bool surjective = false;
    bool sum_zero = false;
    bool all_lines_branched = false;
    bool nodes_smooth = false;
    int nodes_checked = 0;
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Checks that the character defines a smooth induced cover of the blown-up
/// plane: surjectivity, total weight zero, every line weighted, and at every
/// node of the branch divisor the two incident inertia weights generate a
/// subgroup of order p^2. Nodes are both (strict line, exceptional) incidences
/// at blown-up multiple points and line crossings at simple double points.
ValidationReport validate_character(const CharacterMap& c, const Arrangement& arr);

/// One index-p quotient: the p-1 scalar-related rows that define the same
/// cyclic quotient surface.
struct QuotientSubgroup {
    std::vector<std::int64_t> generator;      // generator of the corank-1 subgroup (m = 2)
    std::vector<std::int64_t> character;      // canonical character vanishing on it
    std::vector<CharacterRow> rows;           // scalar multiples t = 1..p-1 of character∘phi
    CharacterRow canonical_row;               // minimal total degree, then smallest lead entry
};

struct QuotientFamily {
    std::int64_t p = 0;
    int m = 0;
    std::vector<QuotientSubgroup> subgroups;

    std::vector<CharacterRow> all_rows() const;
};

/// Enumerates the (p^m - 1)/(p - 1) corank-1 subgroups with their row
/// families. Every nonzero character of (Z/p)^m appears in exactly one family.
/// Families are ordered colexicographically by canonical character.
QuotientFamily quotient_rows(const CharacterMap& c);

/// JSON encoding: {"p":5,"m":2,"weights":[[1,1],[1,0],...]}.
std::string character_to_json(const CharacterMap& c);
CharacterMap character_from_json(const std::string& text);

}  // namespace abelcover
