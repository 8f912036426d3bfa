#pragma once

// Univariate polynomials in x whose coefficients are MultiPoly values, and
// long division by monic divisors. Over any commutative coefficient ring the
// division process needs nothing beyond the divisor's leading coefficient
// being 1, which is exactly what UniPoly enforces.

#include <optional>
#include <string>
#include <vector>

#include "ufa/multipoly.hpp"

namespace ufa {

class UniPoly {
public:
    UniPoly() : table_(empty_table()) {}
    static UniPoly zero(VarTablePtr table);
    /// Builds from c0..cn, trimming trailing zero coefficients.
    static UniPoly from_coeffs(VarTablePtr table, std::vector<MultiPoly> coeffs);
    static UniPoly from_rationals(VarTablePtr table, const std::vector<Rational>& coeffs);
    /// c * x^power.
    static UniPoly term(VarTablePtr table, MultiPoly c, std::size_t power);
    static UniPoly x(VarTablePtr table);

    const VarTablePtr& table() const { return table_; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is "no degree" (nullopt).
    std::optional<std::size_t> degree() const;
    /// Coefficient of x^i (zero beyond the degree).
    MultiPoly coeff(std::size_t i) const;
    const MultiPoly& leading_coeff() const;

    bool is_monic() const;
    /// All coefficients are rational constants.
    bool is_numeric() const;
    Rational numeric_coeff(std::size_t i) const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scalar_mul(const MultiPoly& c) const;
    UniPoly scalar_mul(const Rational& c) const;
    /// Multiplies by x^k.
    UniPoly shifted(std::size_t k) const;
    UniPoly pow(unsigned e) const;

    /// Substitutes a ring element for x (Horner).
    MultiPoly evaluate(const MultiPoly& value) const;
    /// Numeric-only evaluation at a rational point.
    Rational evaluate(const Rational& x) const;
    double evaluate_double(double x) const;

    UniPoly derivative() const;
    UniPoly lifted_to(const VarTablePtr& target) const;

    std::string to_string() const;
    bool operator==(const UniPoly& o) const;

private:
    VarTablePtr table_;
    std::vector<MultiPoly> coeffs_;  // index = x-degree; last entry nonzero
};

struct DivisionResult {
    UniPoly quotient;
    UniPoly remainder;
};

/// Long division f = q*g + r with r = 0 or deg r < deg g. Requires g monic;
/// the pair (q, r) is then unique, and q is monic whenever f is monic with
/// deg f >= deg g.
DivisionResult long_divide(const UniPoly& f, const UniPoly& g);

/// x^k + b{k-1}*x^{k-1} + ... + b0 over the given table (constant 1 for
/// k = 0). The table must already contain the factor variables b0..b{k-1}.
UniPoly generic_monic(std::size_t k, const VarTablePtr& table);

}  // namespace ufa
