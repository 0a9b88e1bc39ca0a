#pragma once

#include "abelcover/arrangement.hpp"
#include "abelcover/cover.hpp"
#include "abelcover/rational.hpp"

#include <cstdint>
#include <vector>

namespace abelcover {

class BlowUpSurface;

/// Rational divisor class on the blown-up plane, written over the basis
/// H, E_1, ..., E_n with intersection form diag(1, -1, ..., -1).
struct DivisorClass {
    Rational h;
    std::vector<Rational> e;

    DivisorClass() = default;
    explicit DivisorClass(std::size_t n_exceptional) : h(0), e(n_exceptional, Rational(0)) {}

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator*(const Rational& s, const DivisorClass& a);
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.h == b.h && a.e == b.e;
    }

    /// Symmetric bilinear pairing: H^2 = 1, E_i^2 = -1, mixed terms 0.
    Rational dot(const DivisorClass& other) const;
    Rational self() const { return dot(*this); }
};

/// The plane blown up at the arrangement's multiple points. The basis is the
/// line class H plus one exceptional class per blown-up point; the canonical
/// class is -3H + sum E. Multiple points of multiplicity >= 4 are rejected:
/// one blow-up does not resolve them.
class BlowUpSurface {
public:
    explicit BlowUpSurface(const Arrangement& arr);

    int center_count() const { return static_cast<int>(centers_.size()); }
    const std::vector<IncidencePoint>& centers() const { return centers_; }

    DivisorClass hyperplane() const;
    DivisorClass exceptional(int center_index) const;
    /// Strict transform L_r = H - sum of E_P over blown-up points on l_r.
    DivisorClass line_strict(int label) const;
    DivisorClass canonical() const;
    /// Branch divisor sum(L_r) + sum(E_P).
    DivisorClass branch() const;

    /// Euler characteristic 3 + #centers of the blown-up plane.
    std::int64_t euler() const { return 3 + center_count(); }

    const std::vector<int>& centers_on_line(int label) const {
        return line_centers_.at(label - 1);
    }

private:
    int line_count_;
    std::vector<IncidencePoint> centers_;
    std::vector<std::vector<int>> line_centers_;  // per line: indices into centers_
};

BlowUpSurface blow_up_model(const Arrangement& arr);

struct CoverInvariants {
    std::int64_t degree = 0;    // |G|
    std::int64_t k_squared = 0;
    std::int64_t euler = 0;
    Rational chi_holo;          // (K^2 + e)/12
    bool miyaoka_yau = false;   // K^2 == 3e
};

/// K^2 of the resolved abelian cover: |G| * (K_Y + (1 - 1/p) B)^2.
/// Requires validate_character to pass.
std::int64_t cover_k_squared(const Arrangement& arr, const CharacterMap& c);

/// Stratified Euler characteristic of the resolved cover:
/// |G| e(Y \ B) + (|G|/p) e(B_smooth) + sum over nodes |G| / |I_node|.
std::int64_t cover_euler(const Arrangement& arr, const CharacterMap& c);

CoverInvariants cover_invariants(const Arrangement& arr, const CharacterMap& c);

struct UpstairsIntersections {
    std::vector<Rational> line_self;   // C_r^2 per line
    std::vector<Rational> line_k;      // C_r . K per line
    std::vector<Rational> point_self;  // D_P^2 per blown-up point
    std::vector<Rational> point_k;     // D_P . K per blown-up point
    bool class_identity_3k = false;    // 3K = 7 sum C + 12 sum D as classes
};

/// Intersection numbers of the branch components upstairs, computed downstairs
/// via pull-back (f* L_r = p C_r, f* E_P = p D_P, K = f*(K_Y + (1-1/p)B)).
UpstairsIntersections upstairs_intersections(const Arrangement& arr, const CharacterMap& c);

/// The raw stratified count, exposed for the degenerate checks: with
/// group_order = p = 1 and unit inertia everywhere it returns e(Y) exactly.
std::int64_t stratified_euler(std::int64_t group_order, std::int64_t p,
                              std::int64_t euler_surface, std::int64_t euler_branch,
                              const std::vector<std::int64_t>& node_inertia_orders);

}  // namespace abelcover
