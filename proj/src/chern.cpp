#include "abelcover/chern.hpp"

#include <algorithm>

namespace abelcover {

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    if (a.e.size() != b.e.size()) throw DomainError("DivisorClass: basis mismatch");
    DivisorClass r = a;
    r.h += b.h;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    if (a.e.size() != b.e.size()) throw DomainError("DivisorClass: basis mismatch");
    DivisorClass r = a;
    r.h -= b.h;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
    return r;
}

DivisorClass operator*(const Rational& s, const DivisorClass& a) {
    DivisorClass r = a;
    r.h *= s;
    for (auto& c : r.e) c *= s;
    return r;
}

Rational DivisorClass::dot(const DivisorClass& other) const {
    if (e.size() != other.e.size()) throw DomainError("DivisorClass: basis mismatch");
    Rational acc = h * other.h;
    for (std::size_t i = 0; i < e.size(); ++i) acc -= e[i] * other.e[i];
    return acc;
}

BlowUpSurface::BlowUpSurface(const Arrangement& arr) : line_count_(arr.line_count()) {
    for (const auto& pt : arr.intersection_points()) {
        if (pt.multiplicity() >= 4)
            throw UnsupportedInputError(
                "BlowUpSurface: point of multiplicity " + std::to_string(pt.multiplicity()) +
                " (only double and triple points are supported)");
        if (pt.multiplicity() >= 3) centers_.push_back(pt);
    }
    line_centers_.assign(line_count_, {});
    for (std::size_t i = 0; i < centers_.size(); ++i)
        for (int l : centers_[i].lines) line_centers_[l - 1].push_back(static_cast<int>(i));
}

DivisorClass BlowUpSurface::hyperplane() const {
    DivisorClass d(centers_.size());
    d.h = Rational(1);
    return d;
}

DivisorClass BlowUpSurface::exceptional(int center_index) const {
    DivisorClass d(centers_.size());
    d.e.at(center_index) = Rational(1);
    return d;
}

DivisorClass BlowUpSurface::line_strict(int label) const {
    DivisorClass d = hyperplane();
    for (int i : line_centers_.at(label - 1)) d.e[i] = Rational(-1);
    return d;
}

DivisorClass BlowUpSurface::canonical() const {
    DivisorClass d(centers_.size());
    d.h = Rational(-3);
    for (auto& c : d.e) c = Rational(1);
    return d;
}

DivisorClass BlowUpSurface::branch() const {
    DivisorClass b(centers_.size());
    for (int r = 1; r <= line_count_; ++r) b = b + line_strict(r);
    for (int i = 0; i < center_count(); ++i) b = b + exceptional(i);
    return b;
}

BlowUpSurface blow_up_model(const Arrangement& arr) { return BlowUpSurface(arr); }

namespace {

void require_valid(const Arrangement& arr, const CharacterMap& c) {
    ValidationReport rep = validate_character(c, arr);
    if (!rep.ok()) {
        std::string msg = "invalid character:";
        for (const auto& issue : rep.issues) msg += " [" + issue.check + "] " + issue.detail;
        throw ValidationError(msg);
    }
}

Rational ramification_fraction(std::int64_t p) {
    return Rational(p - 1, p);  // 1 - 1/p
}

}  // namespace

std::int64_t stratified_euler(std::int64_t group_order, std::int64_t p,
                              std::int64_t euler_surface, std::int64_t euler_branch,
                              const std::vector<std::int64_t>& node_inertia_orders) {
    // Strata: complement of the branch divisor, smooth branch locus, nodes.
    std::int64_t nodes = static_cast<std::int64_t>(node_inertia_orders.size());
    std::int64_t smooth_branch = euler_branch - nodes;
    std::int64_t total = group_order * (euler_surface - euler_branch);
    if ((group_order * smooth_branch) % p != 0)
        throw DomainError("stratified_euler: branch stratum count not divisible by p");
    total += group_order / p * smooth_branch;
    for (std::int64_t inertia : node_inertia_orders) {
        if (group_order % inertia != 0)
            throw DomainError("stratified_euler: inertia does not divide group order");
        total += group_order / inertia;
    }
    return total;
}

std::int64_t cover_k_squared(const Arrangement& arr, const CharacterMap& c) {
    require_valid(arr, c);
    BlowUpSurface y(arr);
    DivisorClass k_cover = y.canonical() + ramification_fraction(c.p) * y.branch();
    Rational val = Rational(c.group_order()) * k_cover.self();
    if (!val.is_integer()) throw DomainError("cover_k_squared: non-integral result");
    return static_cast<std::int64_t>(val.numerator());
}

std::int64_t cover_euler(const Arrangement& arr, const CharacterMap& c) {
    require_valid(arr, c);
    BlowUpSurface y(arr);

    // Components of the branch divisor: strict transforms (one P^1 per line)
    // and exceptional curves (one P^1 per center); each node glues two of
    // their points together.
    std::int64_t nodes = 0;
    std::vector<std::int64_t> inertia;
    for (const auto& pt : arr.intersection_points()) {
        // Blown-up points contribute (line, exceptional) incidences, double
        // points a single line-line crossing. Validation guarantees every
        // node inertia has order p^2.
        nodes += pt.multiplicity() >= 3 ? pt.multiplicity() : 1;
    }
    inertia.assign(static_cast<std::size_t>(nodes), c.p * c.p);

    std::int64_t components = arr.line_count() + y.center_count();
    std::int64_t euler_branch = 2 * components - nodes;
    return stratified_euler(c.group_order(), c.p, y.euler(), euler_branch, inertia);
}

CoverInvariants cover_invariants(const Arrangement& arr, const CharacterMap& c) {
    CoverInvariants inv;
    inv.degree = c.group_order();
    inv.k_squared = cover_k_squared(arr, c);
    inv.euler = cover_euler(arr, c);
    inv.chi_holo = Rational(inv.k_squared + inv.euler, 12);
    inv.miyaoka_yau = (inv.k_squared == 3 * inv.euler);
    return inv;
}

UpstairsIntersections upstairs_intersections(const Arrangement& arr, const CharacterMap& c) {
    require_valid(arr, c);
    BlowUpSurface y(arr);
    const Rational g(c.group_order());
    const Rational p(c.p);
    const DivisorClass k_down = y.canonical() + ramification_fraction(c.p) * y.branch();

    UpstairsIntersections out;
    // f* L_r = p C_r and (f*A . f*B) = |G| (A . B), so
    // C_r . C_s = |G|/p^2 (L_r . L_s) and C_r . K = |G|/p (L_r . k_down).
    const Rational c_scale = g / (p * p);
    const Rational k_scale = g / p;
    for (int r = 1; r <= arr.line_count(); ++r) {
        DivisorClass l = y.line_strict(r);
        out.line_self.push_back(c_scale * l.self());
        out.line_k.push_back(k_scale * l.dot(k_down));
    }
    for (int i = 0; i < y.center_count(); ++i) {
        DivisorClass e = y.exceptional(i);
        out.point_self.push_back(c_scale * e.self());
        out.point_k.push_back(k_scale * e.dot(k_down));
    }

    // 3K = 7 sum C_r + 12 sum D_P pulled down to Pic(Y) (x) Q:
    // 3 k_down = (7/p) sum L_r + (12/p) sum E_P.
    DivisorClass sum_l(y.center_count());
    for (int r = 1; r <= arr.line_count(); ++r) sum_l = sum_l + y.line_strict(r);
    DivisorClass sum_e(y.center_count());
    for (int i = 0; i < y.center_count(); ++i) sum_e = sum_e + y.exceptional(i);
    DivisorClass lhs = Rational(3) * k_down;
    DivisorClass rhs = Rational(7) / p * sum_l + Rational(12) / p * sum_e;
    out.class_identity_3k = (lhs == rhs);
    return out;
}

}  // namespace abelcover
