#include "abelcover/genus.hpp"

#include "abelcover/chern.hpp"

#include <algorithm>
#include <numeric>

namespace abelcover {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    // b > 0; rounds toward +infinity.
    std::int64_t q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

std::int64_t det3(const std::array<std::array<std::int64_t, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<std::array<std::int64_t, 3>, 3> adjugate3(
    const std::array<std::array<std::int64_t, 3>, 3>& m) {
    std::array<std::array<std::int64_t, 3>, 3> a;
    auto cof = [&m](int r, int c) {
        int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
        int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) a[c][r] = cof(r, c);
    return a;
}

// Extended gcd: returns g, sets x, y with a x + b y = g (g >= 0).
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

AffineChart::AffineChart(ProjLine infinity, std::array<std::array<std::int64_t, 3>, 3> change)
    : infinity_(std::move(infinity)), m_(change) {
    std::int64_t d = det3(m_);
    if (d != 1 && d != -1) throw DomainError("AffineChart: coordinate change not unimodular");
    auto adj = adjugate3(m_);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) minv_[r][c] = d == 1 ? adj[r][c] : -adj[r][c];
}

AffineChart AffineChart::from_integer_line(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::array<std::array<std::int64_t, 3>, 3> m;
    if (a == 0 && b == 0) {
        if (c != 1 && c != -1) throw DomainError("AffineChart: coefficients not primitive");
        m = {{{0, 0, c}, {1, 0, 0}, {0, 1, 0}}};
    } else {
        std::int64_t u, v;
        std::int64_t g = ext_gcd(a, b, u, v);
        std::int64_t s, t;
        std::int64_t g2 = ext_gcd(g, c, s, t);
        if (g2 != 1) throw DomainError("AffineChart: coefficients not primitive");
        // W sends (a,b,c) to e1; the chart matrix is (W^{-1})^T, whose first
        // row is (a,b,c) and whose determinant is 1.
        std::array<std::array<std::int64_t, 3>, 3> v1 = {
            {{u, v, 0}, {-b / g, a / g, 0}, {0, 0, 1}}};
        std::array<std::array<std::int64_t, 3>, 3> v2 = {{{s, 0, t}, {0, 1, 0}, {-c, 0, g}}};
        std::array<std::array<std::int64_t, 3>, 3> w{};
        for (int r = 0; r < 3; ++r)
            for (int cc = 0; cc < 3; ++cc)
                for (int k = 0; k < 3; ++k) w[r][cc] += v2[r][k] * v1[k][cc];
        auto winv = adjugate3(w);  // det(w) = 1
        for (int r = 0; r < 3; ++r)
            for (int cc = 0; cc < 3; ++cc) m[r][cc] = winv[cc][r];
    }
    ProjLine line(CycloNum(a), CycloNum(b), CycloNum(c));
    return AffineChart(std::move(line), m);
}

BiPoly AffineChart::affine_line(const ProjLine& l) const {
    // Coefficients in chart coordinates: d = coeffs * M^{-1}.
    std::array<CycloNum, 3> d{CycloNum(0), CycloNum(0), CycloNum(0)};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) d[k] += l.coeffs[i] * CycloNum(minv_[i][k]);
    if (d[1].is_zero() && d[2].is_zero())
        throw DomainError("AffineChart: line coincides with the chart's infinity line");
    return BiPoly::affine(d[1], d[2], d[0]);
}

std::pair<CycloNum, CycloNum> AffineChart::affine_point(const ProjPoint& p) const {
    std::array<CycloNum, 3> y{CycloNum(0), CycloNum(0), CycloNum(0)};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) y[k] += CycloNum(m_[k][i]) * p.coords[i];
    if (y[0].is_zero())
        throw DomainError("AffineChart: point " + p.str() + " lies at infinity in this chart");
    CycloNum inv = y[0].inverse();
    return {y[1] * inv, y[2] * inv};
}

bool AffineChart::valid_for(const Arrangement& arr) const {
    for (const auto& l : arr.lines())
        if (l == infinity_) return false;
    for (const auto& pt : arr.intersection_points())
        if (pt.point.on(infinity_)) return false;
    return true;
}

AffineChart choose_chart(const Arrangement& arr, int seed) {
    constexpr std::int64_t kBound = 7;
    int found = 0;
    for (std::int64_t a = 0; a <= kBound; ++a) {
        for (std::int64_t b = 0; b <= kBound; ++b) {
            for (std::int64_t c = 0; c <= kBound; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                std::int64_t x, y;
                std::int64_t g = ext_gcd(a, b, x, y);
                std::int64_t g2 = ext_gcd(g, c, x, y);
                if (g2 != 1) continue;
                AffineChart chart = AffineChart::from_integer_line(a, b, c);
                if (!chart.valid_for(arr)) continue;
                if (found == seed) return chart;
                ++found;
            }
        }
    }
    throw DomainError("choose_chart: no valid infinity line with coefficients <= 7");
}

CyclicCoverData cyclic_cover_data(const Arrangement& arr, const CharacterRow& row) {
    if (static_cast<int>(row.entries.size()) != arr.line_count())
        throw ValidationError("cyclic_cover_data: row length != line count");
    if (row.all_zero()) throw ValidationError("cyclic_cover_data: zero row");
    if (row.sum() % row.p != 0)
        throw ValidationError("cyclic_cover_data: total branch degree not divisible by p");
    for (const auto& pt : arr.intersection_points())
        if (pt.multiplicity() >= 4)
            throw UnsupportedInputError("cyclic_cover_data: point of multiplicity " +
                                        std::to_string(pt.multiplicity()) + " unsupported");

    CyclicCoverData data;
    data.row = row;
    for (int r = 1; r <= arr.line_count(); ++r)
        if (row.entries[r - 1] != 0) data.branch_lines.push_back(r);
    data.n = row.sum() / row.p;
    for (const auto& pt : arr.intersection_points()) {
        RowSingularPoint sp;
        sp.point = pt.point;
        for (int l : pt.lines)
            if (row.entries[l - 1] != 0) sp.branch_lines.push_back(l);
        if (sp.branch_lines.size() < 2) continue;
        for (int l : sp.branch_lines) sp.r += row.entries[l - 1];
        data.singular.push_back(std::move(sp));
    }
    return data;
}

std::int64_t degree_bound_formula(std::int64_t p, std::int64_t n, int j) {
    return (p - j - 1) * n - 3;
}

std::int64_t line_order_formula(std::int64_t p, std::int64_t k, int j) {
    return std::max<std::int64_t>(0, ceil_div((p - j - 1) * k - p + 1, p));
}

std::int64_t point_order_formula(std::int64_t p, std::int64_t r, int j) {
    return std::max<std::int64_t>(0, ceil_div((p - j - 1) * r - 2 * p + 1, p));
}

EigenspaceSpec eigenspace_spec(const CyclicCoverData& data, int j) {
    const std::int64_t p = data.row.p;
    if (j < 0 || j >= p) throw DomainError("eigenspace_spec: j out of range");
    EigenspaceSpec spec;
    spec.j = j;
    spec.degree_bound = degree_bound_formula(p, data.n, j);
    for (int l : data.branch_lines)
        spec.line_order[l] = line_order_formula(p, data.row.entries[l - 1], j);
    for (const auto& sp : data.singular)
        spec.point_order.push_back(point_order_formula(p, sp.r, j));
    return spec;
}

EigenspaceResult eigenspace_dimension(const Arrangement& arr, const AffineChart& chart,
                                      const CyclicCoverData& data, int j) {
    EigenspaceResult res;
    res.spec = eigenspace_spec(data, j);

    std::int64_t forced = 0;
    for (const auto& [label, order] : res.spec.line_order) forced += order;
    res.residual_degree = res.spec.degree_bound - forced;

    for (std::size_t s = 0; s < data.singular.size(); ++s) {
        std::int64_t covered = 0;
        for (int l : data.singular[s].branch_lines) covered += res.spec.line_order.at(l);
        res.residual_orders.push_back(
            std::max<std::int64_t>(0, res.spec.point_order[s] - covered));
    }

    if (res.spec.degree_bound < 0 || res.residual_degree < 0) {
        res.dimension = 0;
        return res;
    }

    // Residual monomials x^a y^b, a + b <= residual degree.
    const std::int64_t dmax = res.residual_degree;
    std::vector<std::pair<int, int>> monomials;
    for (int a = 0; a <= dmax; ++a)
        for (int b = 0; b + a <= dmax; ++b) monomials.emplace_back(a, b);

    // Vanishing conditions: all translated Taylor coefficients of total order
    // below sigma_P vanish at each singular point.
    std::vector<std::vector<CycloNum>> rows;
    for (std::size_t s = 0; s < data.singular.size(); ++s) {
        const std::int64_t sigma = res.residual_orders[s];
        if (sigma == 0) continue;
        auto [px, py] = chart.affine_point(data.singular[s].point);
        std::vector<CycloNum> px_pow{CycloNum(1)};
        std::vector<CycloNum> py_pow{CycloNum(1)};
        for (int e = 1; e <= dmax; ++e) {
            px_pow.push_back(px_pow.back() * px);
            py_pow.push_back(py_pow.back() * py);
        }
        for (int alpha = 0; alpha < sigma; ++alpha) {
            for (int beta = 0; alpha + beta < sigma; ++beta) {
                std::vector<CycloNum> cond;
                cond.reserve(monomials.size());
                for (auto [a, b] : monomials) {
                    if (alpha > a || beta > b) {
                        cond.emplace_back(0);
                        continue;
                    }
                    CycloNum coef(binom(a, alpha) * binom(b, beta));
                    cond.push_back(coef * px_pow[a - alpha] * py_pow[b - beta]);
                }
                rows.push_back(std::move(cond));
            }
        }
    }

    ExactMatrix conditions = rows.empty() ? ExactMatrix(0, monomials.size())
                                          : ExactMatrix::from_rows(rows);
    RankKernel rk = matrix_rank_kernel(conditions);
    res.dimension = static_cast<std::int64_t>(rk.kernel.size());

    BiPoly forced_divisor = BiPoly::constant(CycloNum(1));
    for (const auto& [label, order] : res.spec.line_order) {
        if (order == 0) continue;
        forced_divisor = forced_divisor * chart.affine_line(arr.line(label)).pow(
                                              static_cast<int>(order));
    }
    for (const auto& vec : rk.kernel) {
        BiPoly residual;
        for (std::size_t i = 0; i < monomials.size(); ++i)
            residual.add_term({monomials[i].first, monomials[i].second}, vec[i]);
        res.basis.push_back(forced_divisor * residual);
    }
    return res;
}

CyclicGenus cyclic_genus(const Arrangement& arr, const AffineChart& chart,
                         const CyclicCoverData& data) {
    CyclicGenus out;
    for (int j = 0; j < data.row.p; ++j) {
        out.eigenspaces.push_back(eigenspace_dimension(arr, chart, data, j));
        out.dims.push_back(out.eigenspaces.back().dimension);
        out.pg += out.eigenspaces.back().dimension;
    }
    return out;
}

std::int64_t cyclic_pg(const Arrangement& arr, const AffineChart& chart,
                       const CyclicCoverData& data) {
    return cyclic_genus(arr, chart, data).pg;
}

GenusReport abelian_pg(const Arrangement& arr, const CharacterMap& c, const AffineChart& chart) {
    ValidationReport val = validate_character(c, arr);
    if (!val.ok()) {
        std::string msg = "abelian_pg: invalid character:";
        for (const auto& issue : val.issues) msg += " [" + issue.check + "] " + issue.detail;
        throw ValidationError(msg);
    }
    GenusReport rep;
    QuotientFamily fam = quotient_rows(c);
    for (const auto& sub : fam.subgroups) {
        QuotientGenus qg;
        qg.subgroup_generator = sub.generator;
        qg.character = sub.character;
        qg.row = sub.canonical_row;
        qg.genus = cyclic_genus(arr, chart, cyclic_cover_data(arr, sub.canonical_row));
        rep.pg += qg.genus.pg;
        rep.quotients.push_back(std::move(qg));
    }
    CoverInvariants inv = cover_invariants(arr, c);
    rep.chi_holo = inv.chi_holo;
    if (!rep.chi_holo.is_integer())
        throw DomainError("abelian_pg: (K^2 + e)/12 is not integral");
    rep.q = static_cast<std::int64_t>(rep.chi_holo.numerator()) - 1 - rep.pg;
    return rep;
}

GenusReport abelian_pg(const Arrangement& arr, const CharacterMap& c) {
    return abelian_pg(arr, c, choose_chart(arr, 0));
}

}  // namespace abelcover
