#pragma once

#include "abelcover/arrangement.hpp"
#include "abelcover/cover.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abelcover {

/// A permutation of line labels 1..n preserving the incidence structure:
/// it maps the multiple points' incident label sets bijectively to themselves.
struct LinePermutation {
    std::vector<int> image;  // image[i] is the image of label i+1

    int apply(int label) const { return image.at(label - 1); }
    bool is_identity() const;
    std::string cycles_str() const;

    friend bool operator==(const LinePermutation& a, const LinePermutation& b) {
        return a.image == b.image;
    }
    friend bool operator<(const LinePermutation& a, const LinePermutation& b) {
        return a.image < b.image;
    }
};

LinePermutation compose(const LinePermutation& first, const LinePermutation& then);

/// All incidence-preserving permutations, found by backtracking (sorted).
std::vector<LinePermutation> incidence_automorphisms(const Arrangement& arr);

/// A projective or anti-projective plane transformation inducing a given line
/// permutation. For an antiholomorphic candidate the matrix is applied after
/// coordinatewise conjugation of the line forms.
struct KleinCandidate {
    LinePermutation perm;
    bool antiholomorphic = false;
    std::array<std::array<CycloNum, 3>, 3> matrix;

    std::string describe() const;
};

/// Solves the exact proportionality system for a 3x3 matrix N with
/// N * conj^eps(form of l_i) proportional to form of l_{perm(i)} for all i,
/// anchoring four lines in general position to eliminate the scalars.
/// Returns nothing when no nondegenerate solution exists.
std::optional<KleinCandidate> realize(const LinePermutation& perm, bool antiholomorphic,
                                      const Arrangement& arr);

/// As realize(), but with an explicit anchor of four line labels in general
/// position (used to check anchor independence).
std::optional<KleinCandidate> realize_with_anchor(const LinePermutation& perm,
                                                  bool antiholomorphic, const Arrangement& arr,
                                                  const std::array<int, 4>& anchor);

/// Does the candidate send every row of the quotient table to a row of the
/// table (with the sign flip on antiholomorphic candidates)? A weight-profile
/// filter rejects cheaply before the full scan.
bool respects_covering(const KleinCandidate& cand, const QuotientFamily& fam);

struct RigidityReport {
    std::int64_t incidence_automorphisms = 0;
    std::int64_t realizable = 0;
    std::vector<KleinCandidate> survivors;
    std::int64_t deck_group_order = 0;
};

/// Enumerates every realizable candidate over both holomorphy flags and keeps
/// those respecting the covering.
RigidityReport rigidity_search(const Arrangement& arr, const CharacterMap& c);

/// All (a, b) in Z>=0 x Z>=0 with x_coeff*a + y_coeff*b = target.
std::vector<std::pair<std::int64_t, std::int64_t>> diophantine_obstruction(
    std::int64_t x_coeff, std::int64_t y_coeff, std::int64_t target);

}  // namespace abelcover
