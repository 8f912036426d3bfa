#pragma once

// Exact arithmetic over Q: arbitrary-precision rationals, p-adic valuations
// and binomial coefficients. Backed by GMP.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>

namespace ufa {

using Integer = mpz_class;

/// Exact fraction, always kept in lowest terms with positive denominator.
/// Zero is 0/1, so equality of values is equality of representations.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);

    const Integer numerator() const { return v_.get_num(); }
    const Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational inverse() const;
    Rational abs() const;

    double to_double() const { return v_.get_d(); }
    std::string to_string() const;

private:
    mpq_class v_;  // kept canonical at all times
};

/// Trial-division primality test. Inputs here are tiny, so no sieve.
bool is_prime(const Integer& n);

/// p-adic valuation: the largest e with p^e | n.
/// Throws std::domain_error unless p is prime and n is nonzero.
unsigned long nu_p(const Integer& p, const Integer& n);

/// Exact C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// Checks nu_p(C(n, p)) < nu_p(n) for a prime p dividing n.
/// Throws std::domain_error unless p is prime and divides n.
bool valuation_drop_holds(const Integer& n, const Integer& p);

}  // namespace ufa
