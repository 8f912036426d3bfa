#include "ufa/rational.hpp"

#include <stdexcept>

namespace ufa {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(denominator(), numerator());
}

Rational Rational::abs() const {
    Rational r = *this;
    r.v_ = ::abs(r.v_);
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return numerator().get_str();
    }
    return numerator().get_str() + "/" + denominator().get_str();
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Integer d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

unsigned long nu_p(const Integer& p, const Integer& n) {
    if (!is_prime(p)) {
        throw std::domain_error("nu_p: p must be prime");
    }
    if (sgn(n) == 0) {
        throw std::domain_error("nu_p: valuation of zero is undefined");
    }
    Integer reduced;
    return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool valuation_drop_holds(const Integer& n, const Integer& p) {
    if (n <= 0) {
        throw std::domain_error("valuation_drop_holds: n must be positive");
    }
    if (!is_prime(p)) {
        throw std::domain_error("valuation_drop_holds: p must be prime");
    }
    if (n % p != 0) {
        throw std::domain_error("valuation_drop_holds: p must divide n");
    }
    Integer c = binomial(n.get_ui(), p.get_ui());
    return nu_p(p, c) < nu_p(p, n);
}

}  // namespace ufa
