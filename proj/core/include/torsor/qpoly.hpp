#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "torsor/rational.hpp"

namespace torsor {

// Polynomial in q with rational coefficients; q stands for 1/p.
class Qpoly {
  public:
    Qpoly() = default;
    Qpoly(const Rational& c) : coeffs_{c} { trim(); }          // NOLINT: implicit constant
    Qpoly(i64 c) : coeffs_{Rational(c)} { trim(); }            // NOLINT
    Qpoly(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit Qpoly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    static Qpoly q() { return Qpoly({Rational(0), Rational(1)}); }
    static Qpoly one_minus_q() { return Qpoly({Rational(1), Rational(-1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
    }

    Rational eval(const Rational& q) const;
    double eval_double(double q) const;

    Qpoly& operator+=(const Qpoly& o);
    Qpoly& operator-=(const Qpoly& o);
    Qpoly& operator*=(const Qpoly& o);

    friend Qpoly operator+(Qpoly a, const Qpoly& b) { return a += b; }
    friend Qpoly operator-(Qpoly a, const Qpoly& b) { return a -= b; }
    friend Qpoly operator*(Qpoly a, const Qpoly& b) { return a *= b; }
    friend bool operator==(const Qpoly& a, const Qpoly& b) { return a.coeffs_ == b.coeffs_; }

    Qpoly pow(int e) const;

    // Sum of |c_k| * x^(k - k0) over k >= k0; used for tail bounds.
    double abs_coeff_sum(int k0, double x) const;

    std::string to_string() const;  // e.g. "1 - 2q + q^2"

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies q^k
};

}  // namespace torsor
