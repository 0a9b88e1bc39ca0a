#include "abelcover/arrangement.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>

namespace abelcover {

namespace {

void normalize_triple(std::array<CycloNum, 3>& v, const char* what) {
    for (auto& c : v) {
        if (!c.is_zero()) {
            CycloNum inv = c.inverse();
            for (auto& d : v) d *= inv;
            return;
        }
    }
    throw DomainError(std::string(what) + ": all coordinates zero");
}

}  // namespace

ProjLine::ProjLine(CycloNum c1, CycloNum c2, CycloNum c3, int lbl)
    : coeffs{std::move(c1), std::move(c2), std::move(c3)}, label(lbl) {
    normalize_triple(coeffs, "ProjLine");
}

ProjPoint::ProjPoint(std::array<CycloNum, 3> x) : coords(std::move(x)) {
    normalize_triple(coords, "ProjPoint");
}

ProjPoint intersect(const ProjLine& l1, const ProjLine& l2) {
    const auto& a = l1.coeffs;
    const auto& b = l2.coeffs;
    std::array<CycloNum, 3> cross{a[1] * b[2] - a[2] * b[1],
                                  a[2] * b[0] - a[0] * b[2],
                                  a[0] * b[1] - a[1] * b[0]};
    if (cross[0].is_zero() && cross[1].is_zero() && cross[2].is_zero())
        throw DomainError("intersect: coincident lines " + std::to_string(l1.label) + ", " +
                          std::to_string(l2.label));
    return ProjPoint(cross);
}

Arrangement::Arrangement(std::vector<ProjLine> lines) : lines_(std::move(lines)) {
    for (std::size_t i = 0; i < lines_.size(); ++i) lines_[i].label = static_cast<int>(i) + 1;
    for (std::size_t i = 0; i < lines_.size(); ++i)
        for (std::size_t j = i + 1; j < lines_.size(); ++j)
            if (lines_[i] == lines_[j])
                throw ValidationError("Arrangement: lines " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " coincide");

    std::map<ProjPoint, std::vector<int>> grouped;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        for (std::size_t j = i + 1; j < lines_.size(); ++j) {
            ProjPoint p = intersect(lines_[i], lines_[j]);
            auto& labs = grouped[p];
            auto push = [&labs](int l) {
                if (std::find(labs.begin(), labs.end(), l) == labs.end()) labs.push_back(l);
            };
            push(static_cast<int>(i) + 1);
            push(static_cast<int>(j) + 1);
        }
    }
    for (auto& [pt, labs] : grouped) {
        std::sort(labs.begin(), labs.end());
        points_.push_back({pt, labs});
    }
    for (std::size_t idx = 0; idx < points_.size(); ++idx) {
        const auto& labs = points_[idx].lines;
        for (std::size_t a = 0; a < labs.size(); ++a)
            for (std::size_t b = a + 1; b < labs.size(); ++b)
                pair_map_[{labs[a], labs[b]}] = idx;
    }
}

std::vector<IncidencePoint> Arrangement::multiple_points() const {
    std::vector<IncidencePoint> out;
    for (const auto& p : points_)
        if (p.multiplicity() >= 3) out.push_back(p);
    return out;
}

int Arrangement::simple_point_count() const {
    int n = 0;
    for (const auto& p : points_)
        if (p.multiplicity() == 2) ++n;
    return n;
}

std::vector<int> Arrangement::incidence_profile() const {
    std::vector<int> prof(lines_.size(), 0);
    for (const auto& p : points_) {
        if (p.multiplicity() < 3) continue;
        for (int l : p.lines) ++prof[l - 1];
    }
    return prof;
}

const ProjPoint& Arrangement::pair_point(int r, int s) const {
    if (r > s) std::swap(r, s);
    auto it = pair_map_.find({r, s});
    if (it == pair_map_.end()) throw DomainError("pair_point: no such line pair");
    return points_[it->second].point;
}

Arrangement build_ceva() {
    const CycloNum mu = CycloNum::mu();
    const CycloNum mu2 = mu * mu;  // = mu - 1
    const CycloNum one(1);
    const CycloNum zero(0);
    std::vector<ProjLine> lines;
    lines.emplace_back(one, zero, CycloNum(-1));  // x1 - x3
    lines.emplace_back(one, zero, -mu2);          // x1 - mu^2 x3
    lines.emplace_back(one, zero, mu);            // x1 + mu  x3
    lines.emplace_back(zero, one, -mu2);          // x2 - mu^2 x3
    lines.emplace_back(zero, one, CycloNum(-1));  // x2 - x3
    lines.emplace_back(zero, one, mu);            // x2 + mu  x3
    lines.emplace_back(one, mu, zero);            // x1 + mu  x2
    lines.emplace_back(one, -mu2, zero);          // x1 - mu^2 x2
    lines.emplace_back(one, CycloNum(-1), zero);  // x1 - x2
    return Arrangement(std::move(lines));
}

namespace {

// Plain integers while they fit in 64 bits, decimal strings beyond.
nlohmann::json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt json_to_bigint(const nlohmann::json& j, const char* what) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw ParseError(std::string(what) + ": expected integer or integer string");
}

}  // namespace

std::string arrangement_to_json(const Arrangement& arr) {
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& l : arr.lines()) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : l.coeffs) {
            nlohmann::json quad = nlohmann::json::array();
            quad.push_back(bigint_to_json(c.re_part().numerator()));
            quad.push_back(bigint_to_json(c.re_part().denominator()));
            quad.push_back(bigint_to_json(c.mu_part().numerator()));
            quad.push_back(bigint_to_json(c.mu_part().denominator()));
            coeffs.push_back(quad);
        }
        lines.push_back(coeffs);
    }
    nlohmann::json doc;
    doc["lines"] = lines;
    return doc.dump(2) + "\n";
}

Arrangement arrangement_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("arrangement: malformed JSON: ") + e.what());
    }
    if (!doc.contains("lines") || !doc["lines"].is_array())
        throw ParseError("arrangement: missing \"lines\" array");
    std::vector<ProjLine> lines;
    for (const auto& coeffs : doc["lines"]) {
        if (!coeffs.is_array() || coeffs.size() != 3)
            throw ParseError("arrangement: each line needs 3 coefficients");
        std::array<CycloNum, 3> c;
        for (int i = 0; i < 3; ++i) {
            const auto& quad = coeffs[i];
            if (!quad.is_array() || quad.size() != 4)
                throw ParseError("arrangement: coefficient must be [a_num,a_den,b_num,b_den]");
            c[i] = CycloNum(Rational(json_to_bigint(quad[0], "a_num"),
                                     json_to_bigint(quad[1], "a_den")),
                            Rational(json_to_bigint(quad[2], "b_num"),
                                     json_to_bigint(quad[3], "b_den")));
        }
        lines.emplace_back(c[0], c[1], c[2]);
    }
    return Arrangement(std::move(lines));
}

}  // namespace abelcover
