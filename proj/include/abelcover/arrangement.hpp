#pragma once

#include "abelcover/bipoly.hpp"
#include "abelcover/cyclotomic.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace abelcover {

/// Line c1*x1 + c2*x2 + c3*x3 = 0 in the projective plane over Q(mu),
/// normalized so the first nonzero coefficient is 1. Labels are 1-based.
struct ProjLine {
    std::array<CycloNum, 3> coeffs{CycloNum(0), CycloNum(0), CycloNum(0)};
    int label = 0;

    ProjLine() = default;
    ProjLine(CycloNum c1, CycloNum c2, CycloNum c3, int lbl = 0);

    CycloNum eval(const std::array<CycloNum, 3>& x) const {
        return coeffs[0] * x[0] + coeffs[1] * x[1] + coeffs[2] * x[2];
    }

    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.coeffs == b.coeffs; }
};

/// Point (x1 : x2 : x3), normalized so the first nonzero coordinate is 1.
struct ProjPoint {
    std::array<CycloNum, 3> coords{CycloNum(0), CycloNum(0), CycloNum(0)};

    ProjPoint() = default;
    explicit ProjPoint(std::array<CycloNum, 3> x);

    bool on(const ProjLine& l) const { return l.eval(coords).is_zero(); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords == b.coords; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        for (int i = 0; i < 3; ++i) {
            if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
        }
        return false;
    }

    std::string str() const {
        return "(" + coords[0].str() + " : " + coords[1].str() + " : " + coords[2].str() + ")";
    }
};

/// Exact intersection of two non-proportional lines; throws DomainError on
/// coincident (proportional) lines.
ProjPoint intersect(const ProjLine& l1, const ProjLine& l2);

/// An intersection point together with the sorted labels of all lines through it.
struct IncidencePoint {
    ProjPoint point;
    std::vector<int> lines;
    int multiplicity() const { return static_cast<int>(lines.size()); }
};

class Arrangement {
public:
    explicit Arrangement(std::vector<ProjLine> lines);

    int line_count() const { return static_cast<int>(lines_.size()); }
    const std::vector<ProjLine>& lines() const { return lines_; }
    const ProjLine& line(int label) const { return lines_.at(label - 1); }  // 1-based

    /// Every pairwise intersection point, grouped and sorted by coordinates.
    const std::vector<IncidencePoint>& intersection_points() const { return points_; }

    /// Points lying on >= 3 lines, with their exact incident label sets.
    std::vector<IncidencePoint> multiple_points() const;

    /// Intersection points lying on exactly 2 lines.
    int simple_point_count() const;

    /// Per-line count of multiple (>= 3) points, indexed by label - 1.
    std::vector<int> incidence_profile() const;

    /// The common point of lines r and s.
    const ProjPoint& pair_point(int r, int s) const;

private:
    std::vector<ProjLine> lines_;
    std::vector<IncidencePoint> points_;
    std::map<std::pair<int, int>, std::size_t> pair_map_;  // (r, s) with r < s -> point index
};

/// The nine-line arrangement cutting out (x1^3-x2^3)(x2^3-x3^3)(x3^3-x1^3) = 0,
/// labeled l1..l9; twelve triple points and no other multiple points.
Arrangement build_ceva();

/// JSON encoding: {"lines": [[[a_num,a_den,b_num,b_den] x3], ...]} with each
/// coefficient a + b*mu stored as exact fractions. Round-trips bit-exactly.
std::string arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const std::string& text);

}  // namespace abelcover
