#pragma once

#include "abelcover/rational.hpp"

#include <string>
#include <utility>

namespace abelcover {

/// Element a + b*mu of Q(mu), where mu is a primitive sixth root of unity,
/// mu^2 = mu - 1. Canonical form is the coefficient pair itself, so equality
/// is componentwise and exact.
class CycloNum {
public:
    CycloNum() = default;
    CycloNum(long long n) : a_(n) {}  // NOLINT: implicit on purpose
    CycloNum(Rational a) : a_(std::move(a)) {}
    CycloNum(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static CycloNum mu() { return CycloNum(Rational(0), Rational(1)); }

    const Rational& re_part() const { return a_; }   // coefficient of 1
    const Rational& mu_part() const { return b_; }   // coefficient of mu

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    CycloNum operator-() const { return CycloNum(-a_, -b_); }

    friend CycloNum operator+(const CycloNum& x, const CycloNum& y) {
        return CycloNum(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend CycloNum operator-(const CycloNum& x, const CycloNum& y) {
        return CycloNum(x.a_ - y.a_, x.b_ - y.b_);
    }
    // (a1 + b1 mu)(a2 + b2 mu) with mu^2 = mu - 1.
    friend CycloNum operator*(const CycloNum& x, const CycloNum& y) {
        Rational bb = x.b_ * y.b_;
        return CycloNum(x.a_ * y.a_ - bb, x.a_ * y.b_ + x.b_ * y.a_ + bb);
    }
    CycloNum& operator+=(const CycloNum& y) { return *this = *this + y; }
    CycloNum& operator-=(const CycloNum& y) { return *this = *this - y; }
    CycloNum& operator*=(const CycloNum& y) { return *this = *this * y; }

    /// Field norm N(a + b mu) = a^2 + ab + b^2, zero only at zero.
    Rational norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

    /// Multiplicative inverse; throws DomainError at zero.
    CycloNum inverse() const {
        if (is_zero()) throw DomainError("CycloNum: inverse of zero");
        Rational n = norm();
        return CycloNum((a_ + b_) / n, -b_ / n);
    }
    friend CycloNum operator/(const CycloNum& x, const CycloNum& y) { return x * y.inverse(); }

    /// Complex conjugation, the field automorphism mu -> 1 - mu.
    CycloNum conj() const { return CycloNum(a_ + b_, -b_); }

    friend bool operator==(const CycloNum& x, const CycloNum& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const CycloNum& x, const CycloNum& y) { return !(x == y); }
    // Lexicographic order on (a, b); used only for deterministic sorting.
    friend bool operator<(const CycloNum& x, const CycloNum& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str();
        if (b_ == Rational(1)) {
            s += s.empty() ? "mu" : "+mu";
        } else if (b_ == Rational(-1)) {
            s += "-mu";
        } else {
            std::string bs = b_.str();
            if (!s.empty() && bs[0] != '-') s += "+";
            s += bs + "*mu";
        }
        return s;
    }

private:
    Rational a_;
    Rational b_;
};

inline CycloNum cyclo_mul(const CycloNum& x, const CycloNum& y) { return x * y; }
inline CycloNum cyclo_inv(const CycloNum& x) { return x.inverse(); }
inline CycloNum cyclo_conj(const CycloNum& x) { return x.conj(); }

}  // namespace abelcover
