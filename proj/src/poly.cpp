#include "ty3/poly.hpp"

#include <sstream>

namespace ty3 {

Poly Poly::monomial(int exp, const Rational& c) {
    Poly p;
    if (exp < 0) throw std::invalid_argument("Poly: negative exponent");
    if (!c.isZero()) {
        p.c_.assign(exp + 1, Rational());
        p.c_[exp] = c;
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.isZero() || b.isZero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].isZero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

std::string Poly::str() const {
    if (isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].isZero()) continue;
        if (!first) out << " + ";
        out << c_[k].str();
        if (k == 1) out << "*x";
        if (k >= 2) out << "*x^" << k;
        first = false;
    }
    return out.str();
}

Poly Poly::parse(const std::string& s) {
    Poly p;
    std::string term;
    size_t pos = 0;
    auto flush = [&p](const std::string& t) {
        if (t.empty()) return;
        size_t star = t.find('*');
        Rational c = Rational::parse(t.substr(0, star));
        int exp = 0;
        if (star != std::string::npos) {
            std::string xs = t.substr(star + 1);
            if (xs == "x") exp = 1;
            else if (xs.rfind("x^", 0) == 0) exp = std::stoi(xs.substr(2));
            else throw std::invalid_argument("Poly: bad term '" + t + "'");
        }
        p += monomial(exp, c);
    };
    while (pos < s.size()) {
        size_t plus = s.find(" + ", pos);
        if (plus == std::string::npos) {
            flush(s.substr(pos));
            break;
        }
        flush(s.substr(pos, plus - pos));
        pos = plus + 3;
    }
    return p;
}

}  // namespace ty3
