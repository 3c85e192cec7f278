#include "torsor/qpoly.hpp"

#include "torsor/primes.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace torsor {

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    return Rational(num, den);
}

Rational phi_star(i64 n) {
    Rational r = 1;
    for (i64 p : prime_divisors(n)) r *= Rational(p - 1, p);
    return r;
}

Rational phi_dagger(i64 n) {
    Rational r = 1;
    for (i64 p : prime_divisors(n)) r *= Rational(p + 1, p);
    return r;
}

Rational Qpoly::eval(const Rational& q) const {
    Rational v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * q + *it;
    return v;
}

double Qpoly::eval_double(double q) const {
    double v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * q + to_double(*it);
    return v;
}

Qpoly& Qpoly::operator+=(const Qpoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Qpoly& Qpoly::operator-=(const Qpoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Qpoly& Qpoly::operator*=(const Qpoly& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Qpoly Qpoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Qpoly::pow: negative exponent");
    Qpoly r(1);
    Qpoly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

double Qpoly::abs_coeff_sum(int k0, double x) const {
    double s = 0;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= k0; --k)
        s = s * x + std::abs(to_double(coeffs_[k]));
    return s;
}

std::string Qpoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Rational c = coeffs_[k];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = c < 0 ? Rational(-c) : c;
        bool show_coeff = (a != 1) || (k == 0);
        if (show_coeff) os << rational_to_string(a);
        if (k >= 1) {
            if (show_coeff) os << "*";
            os << "q";
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace torsor
