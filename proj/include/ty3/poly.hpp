#pragma once

#include <string>
#include <vector>

#include "ty3/rational.hpp"

namespace ty3 {

// Element of Q[x] for one central variable x. Dense coefficient vector,
// no trailing zero coefficients; the zero polynomial has an empty vector.
// Degree-0 polynomials stand in for plain rationals everywhere.
class Poly {
public:
    Poly() = default;
    Poly(long n) { if (n != 0) c_.push_back(Rational(n)); }
    Poly(const Rational& r) { if (!r.isZero()) c_.push_back(r); }

    static Poly x() { return monomial(1, Rational(1)); }
    static Poly monomial(int exp, const Rational& c);

    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int exp) const {
        return (exp >= 0 && exp < static_cast<int>(c_.size())) ? c_[exp] : Rational();
    }
    // Constant term; the full value when isConstant().
    Rational constant() const { return coeff(0); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Textual form "c0 + c1*x + c2*x^2" (up to omitted zero terms); a bare
    // rational for constants. parse accepts the same.
    std::string str() const;
    static Poly parse(const std::string& s);

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace ty3
