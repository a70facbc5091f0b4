#include "ty3/rational.hpp"

namespace ty3 {

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (isZero()) {
        if (e < 0) throw std::domain_error("Rational: negative power of zero");
        return Rational();
    }
    mpq_class base = e > 0 ? v_ : mpq_class(1) / v_;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
    r.canonicalize();
    return Rational(r);
}

Rational Rational::binomial(long n, long k) {
    if (k < 0 || k > n) return Rational();
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

}  // namespace ty3
