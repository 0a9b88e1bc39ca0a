#pragma once

#include "abelcover/cyclotomic.hpp"

#include <map>
#include <string>
#include <utility>

namespace abelcover {

/// Sparse bivariate polynomial over Q(mu). Keys are exponent pairs (i, j) for
/// x^i y^j; zero coefficients are never stored. Degree of the zero polynomial
/// is the sentinel -1.
class BiPoly {
public:
    using Monomial = std::pair<int, int>;

    BiPoly() = default;

    static BiPoly constant(CycloNum c) {
        BiPoly p;
        p.set({0, 0}, std::move(c));
        return p;
    }
    static BiPoly monomial(int i, int j, CycloNum c = CycloNum(1)) {
        BiPoly p;
        p.set({i, j}, std::move(c));
        return p;
    }
    /// c1*x + c2*y + c0
    static BiPoly affine(const CycloNum& c1, const CycloNum& c2, const CycloNum& c0) {
        BiPoly p;
        p.set({1, 0}, c1);
        p.set({0, 1}, c2);
        p.set({0, 0}, c0);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : coeffs_) d = std::max(d, m.first + m.second);
        return d;
    }
    CycloNum coefficient(int i, int j) const {
        auto it = coeffs_.find({i, j});
        return it == coeffs_.end() ? CycloNum(0) : it->second;
    }
    const std::map<Monomial, CycloNum>& terms() const { return coeffs_; }

    void set(Monomial m, CycloNum c) {
        if (c.is_zero())
            coeffs_.erase(m);
        else
            coeffs_[m] = std::move(c);
    }
    void add_term(Monomial m, const CycloNum& c) {
        auto it = coeffs_.find(m);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    friend BiPoly operator+(const BiPoly& f, const BiPoly& g) {
        BiPoly r = f;
        for (const auto& [m, c] : g.coeffs_) r.add_term(m, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& f, const BiPoly& g) {
        BiPoly r = f;
        for (const auto& [m, c] : g.coeffs_) r.add_term(m, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& f, const BiPoly& g) {
        BiPoly r;
        for (const auto& [mf, cf] : f.coeffs_)
            for (const auto& [mg, cg] : g.coeffs_)
                r.add_term({mf.first + mg.first, mf.second + mg.second}, cf * cg);
        return r;
    }
    friend BiPoly operator*(const CycloNum& c, const BiPoly& f) {
        BiPoly r;
        if (c.is_zero()) return r;
        for (const auto& [m, cf] : f.coeffs_) r.coeffs_[m] = c * cf;
        return r;
    }
    friend bool operator==(const BiPoly& f, const BiPoly& g) { return f.coeffs_ == g.coeffs_; }
    friend bool operator!=(const BiPoly& f, const BiPoly& g) { return !(f == g); }

    BiPoly pow(int e) const {
        BiPoly r = constant(CycloNum(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    CycloNum eval(const CycloNum& x, const CycloNum& y) const {
        CycloNum r(0);
        for (const auto& [m, c] : coeffs_) {
            CycloNum t = c;
            for (int i = 0; i < m.first; ++i) t *= x;
            for (int j = 0; j < m.second; ++j) t *= y;
            r += t;
        }
        return r;
    }

    /// f(x + dx, y + dy); the Taylor expansion of f around (dx, dy).
    BiPoly translated(const CycloNum& dx, const CycloNum& dy) const {
        BiPoly sx = affine(CycloNum(1), CycloNum(0), dx);
        BiPoly sy = affine(CycloNum(0), CycloNum(1), dy);
        BiPoly r;
        for (const auto& [m, c] : coeffs_) {
            r = r + c * (sx.pow(m.first) * sy.pow(m.second));
        }
        return r;
    }

    /// Order of vanishing at an affine point; degree() + 1 stands in for
    /// infinity when the polynomial is identically zero.
    int vanishing_order_at(const CycloNum& px, const CycloNum& py) const {
        if (is_zero()) return degree() + 1;
        BiPoly t = translated(px, py);
        int best = t.degree() + 1;
        for (const auto& [m, c] : t.coeffs_) best = std::min(best, m.first + m.second);
        return best;
    }

    /// Is f proportional to g by a nonzero scalar? (Both zero counts as yes.)
    friend bool proportional(const BiPoly& f, const BiPoly& g) {
        if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
        if (f.coeffs_.size() != g.coeffs_.size()) return false;
        CycloNum ratio(0);
        auto itf = f.coeffs_.begin();
        auto itg = g.coeffs_.begin();
        for (; itf != f.coeffs_.end(); ++itf, ++itg) {
            if (itf->first != itg->first) return false;
            if (ratio.is_zero())
                ratio = itf->second * itg->second.inverse();
            else if (itf->second != ratio * itg->second)
                return false;
        }
        return true;
    }

    std::string str(const char* xname = "x", const char* yname = "y") const;

private:
    std::map<Monomial, CycloNum> coeffs_;
};

inline std::string BiPoly::str(const char* xname, const char* yname) const {
    if (is_zero()) return "0";
    std::string out;
    // Highest total degree first, then lexicographic.
    std::map<std::pair<int, Monomial>, CycloNum> ordered;
    for (const auto& [m, c] : coeffs_) ordered[{-(m.first + m.second), m}] = c;
    for (const auto& [key, c] : ordered) {
        const auto& m = key.second;
        std::string cs = c.str();
        bool unit = (cs == "1" || cs == "-1") && (m.first || m.second);
        std::string term;
        if (unit) {
            if (cs == "-1") term += "-";
        } else {
            bool composite = cs.find('+') != std::string::npos ||
                             cs.find('-', 1) != std::string::npos;
            term += composite ? "(" + cs + ")" : cs;
            if (m.first || m.second) term += "*";
        }
        if (m.first) {
            term += xname;
            if (m.first > 1) term += "^" + std::to_string(m.first);
        }
        if (m.second) {
            if (m.first) term += "*";
            term += yname;
            if (m.second > 1) term += "^" + std::to_string(m.second);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

}  // namespace abelcover
