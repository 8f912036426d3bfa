#include <doctest.h>

#include <stdexcept>

#include "support.hpp"
#include "ufa/rational.hpp"

using namespace ufa;

namespace {

// Independent valuation oracle: repeated division.
unsigned long nu_oracle(long p, Integer n) {
    unsigned long e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

// Independent binomial oracle: Pascal's recurrence.
Integer binomial_oracle(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    std::vector<Integer> row(n + 1, 0);
    row[0] = 1;
    for (unsigned long i = 1; i <= n; ++i) {
        for (unsigned long j = i; j > 0; --j) row[j] += row[j - 1];
    }
    return row[k];
}

}  // namespace

TEST_CASE("rationals are stored reduced with positive denominator") {
    Rational r(Integer(6), Integer(4));
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 2);

    Rational s(Integer(1), Integer(-2));
    CHECK(s.numerator() == -1);
    CHECK(s.denominator() == 2);

    Rational z(Integer(0), Integer(7));
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);
    CHECK(z.is_zero());

    CHECK(Rational(Integer(2), Integer(4)) == Rational(Integer(1), Integer(2)));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
    Rational a(Integer(1), Integer(2));
    Rational b(Integer(1), Integer(3));
    CHECK((a + b) == Rational(Integer(5), Integer(6)));
    CHECK((a - b) == Rational(Integer(1), Integer(6)));
    CHECK((a * b) == Rational(Integer(1), Integer(6)));
    CHECK((a / b) == Rational(Integer(3), Integer(2)));
    CHECK(a.inverse() == Rational(2));
    CHECK((-a).abs() == a);
    CHECK(b < a);
    CHECK(a.to_string() == "1/2");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("nu_p examples") {
    CHECK(nu_p(3, 1) == 0);
    CHECK(nu_p(2, 12) == 2);
    CHECK(nu_p(3, 84) == 1);
    CHECK_THROWS_AS(nu_p(4, 12), std::domain_error);
    CHECK_THROWS_AS(nu_p(3, 0), std::domain_error);
}

TEST_CASE("nu_p matches repeated division and is additive") {
    auto g = test::rng(101);
    const long primes[] = {2, 3, 5, 7};
    for (int trial = 0; trial < 200; ++trial) {
        long p = primes[test::random_int(g, 0, 3)];
        long a = test::random_int(g, 1, 5000);
        long b = test::random_int(g, 1, 5000);
        CHECK(nu_p(p, a) == nu_oracle(p, a));
        CHECK(nu_p(p, Integer(a) * b) == nu_p(p, a) + nu_p(p, b));
    }
    CHECK(nu_p(2, -12) == 2);
}

TEST_CASE("binomial examples and symmetry") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(9, 0) == 1);
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(2, 5) == 0);

    auto g = test::rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned long n = test::random_int(g, 0, 40);
        unsigned long k = test::random_int(g, 0, 45);
        CHECK(binomial(n, k) == binomial_oracle(n, k));
        if (k <= n) CHECK(binomial(n, k) == binomial(n, n - k));
    }
}

TEST_CASE("valuation drop examples") {
    CHECK(valuation_drop_holds(4, 2));   // C(4,2)=6, v2: 1 < 2
    CHECK(valuation_drop_holds(6, 2));   // C(6,2)=15, v2: 0 < 1
    CHECK(valuation_drop_holds(9, 3));   // C(9,3)=84, v3: 1 < 2
    CHECK_THROWS_AS(valuation_drop_holds(9, 2), std::domain_error);
    CHECK_THROWS_AS(valuation_drop_holds(8, 6), std::domain_error);
    CHECK_THROWS_AS(valuation_drop_holds(0, 2), std::domain_error);
}

TEST_CASE("valuation drop holds for all n <= 1000") {
    for (long n = 1; n <= 1000; ++n) {
        for (long p = 2; p <= n; ++p) {
            if (n % p != 0 || !is_prime(p)) continue;
            CHECK(valuation_drop_holds(n, p));
        }
    }
}

TEST_CASE("is_prime trial division") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(9));
    CHECK(is_prime(997));
    CHECK_FALSE(is_prime(-3));
}
