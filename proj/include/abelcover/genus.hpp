#pragma once

#include "abelcover/arrangement.hpp"
#include "abelcover/bipoly.hpp"
#include "abelcover/cover.hpp"
#include "abelcover/linalg.hpp"
#include "abelcover/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace abelcover {

/// An affine chart of the projective plane whose line at infinity avoids the
/// arrangement: proportional to no arrangement line and through no
/// intersection point. Dehomogenization goes through a fixed unimodular
/// integer coordinate change sending the chosen line to the zeroth coordinate.
class AffineChart {
public:
    AffineChart(ProjLine infinity, std::array<std::array<std::int64_t, 3>, 3> change);

    const ProjLine& infinity_line() const { return infinity_; }

    /// The affine equation of a line in this chart (degree exactly 1).
    BiPoly affine_line(const ProjLine& l) const;

    /// Affine coordinates of a point; throws DomainError if it lies at infinity.
    std::pair<CycloNum, CycloNum> affine_point(const ProjPoint& p) const;

    bool valid_for(const Arrangement& arr) const;

    /// Builds the chart for the line a*x1 + b*x2 + c*x3 = 0 with primitive
    /// integer coefficients, completing it to a unimodular coordinate change.
    static AffineChart from_integer_line(std::int64_t a, std::int64_t b, std::int64_t c);

private:
    ProjLine infinity_;
    std::array<std::array<std::int64_t, 3>, 3> m_;     // y = M x, first row = line
    std::array<std::array<std::int64_t, 3>, 3> minv_;  // x = M^{-1} y
};

/// Deterministic chart search: integer lines a*x1+b*x2+c*x3 with non-negative
/// coefficients <= 7 in lexicographic order, primitive, skipping any line that
/// matches an arrangement line or passes through an intersection point.
/// `seed` selects among the valid lines in search order.
AffineChart choose_chart(const Arrangement& arr, int seed = 0);

/// A singular point of one cyclic quotient's branch curve: a point on at
/// least two branch lines of the row, with r = sum of their weights there.
struct RowSingularPoint {
    ProjPoint point;
    std::vector<int> branch_lines;
    std::int64_t r = 0;
};

/// One cyclic quotient cover z^p = prod h_i^{k_i}: the row, its branch lines,
/// the integer n with sum k_i = n p, and the branch curve's singular points.
struct CyclicCoverData {
    CharacterRow row;
    std::vector<int> branch_lines;  // labels with k != 0
    std::int64_t n = 0;
    std::vector<RowSingularPoint> singular;
};

CyclicCoverData cyclic_cover_data(const Arrangement& arr, const CharacterRow& row);

// The three bound formulas for the 2-form coefficients, j = 0..p-1.
std::int64_t degree_bound_formula(std::int64_t p, std::int64_t n, int j);  // (p-j-1)n - 3
// Smallest non-negative r with p r >= (p-j-1)k - p + 1.
std::int64_t line_order_formula(std::int64_t p, std::int64_t k, int j);
// Smallest non-negative s with p s >= (p-j-1)r - 2p + 1.
std::int64_t point_order_formula(std::int64_t p, std::int64_t r, int j);

struct EigenspaceSpec {
    int j = 0;
    std::int64_t degree_bound = 0;              // may be negative: forced-zero eigenspace
    std::map<int, std::int64_t> line_order;     // branch label -> forced vanishing order
    std::vector<std::int64_t> point_order;      // aligned with CyclicCoverData::singular
};

EigenspaceSpec eigenspace_spec(const CyclicCoverData& data, int j);

struct EigenspaceResult {
    EigenspaceSpec spec;
    std::int64_t residual_degree = -1;           // degree_bound - sum of line orders
    std::vector<std::int64_t> residual_orders;   // sigma_P per singular point
    std::int64_t dimension = 0;
    std::vector<BiPoly> basis;                   // full coefficient polynomials g_j
};

/// Dimension and basis of the j-th eigenspace of regular 2-forms on the
/// cyclic quotient: polynomials g_j = (prod h_i^{r_ji}) ghat with the degree,
/// divisibility and vanishing-order constraints imposed as one exact kernel
/// computation.
EigenspaceResult eigenspace_dimension(const Arrangement& arr, const AffineChart& chart,
                                      const CyclicCoverData& data, int j);

struct CyclicGenus {
    std::vector<std::int64_t> dims;  // per j = 0..p-1
    std::int64_t pg = 0;
    std::vector<EigenspaceResult> eigenspaces;
};

CyclicGenus cyclic_genus(const Arrangement& arr, const AffineChart& chart,
                         const CyclicCoverData& data);
std::int64_t cyclic_pg(const Arrangement& arr, const AffineChart& chart,
                       const CyclicCoverData& data);

struct QuotientGenus {
    std::vector<std::int64_t> subgroup_generator;
    std::vector<std::int64_t> character;
    CharacterRow row;  // canonical row used for the computation
    CyclicGenus genus;
};

struct GenusReport {
    std::vector<QuotientGenus> quotients;
    std::int64_t pg = 0;
    Rational chi_holo;
    std::int64_t q = 0;
};

/// Total geometric genus of the abelian cover as the sum of the corank-1
/// quotients' genera, plus the irregularity via Noether's formula
/// q = (K^2 + e)/12 - 1 - p_g.
GenusReport abelian_pg(const Arrangement& arr, const CharacterMap& c, const AffineChart& chart);
GenusReport abelian_pg(const Arrangement& arr, const CharacterMap& c);

}  // namespace abelcover
