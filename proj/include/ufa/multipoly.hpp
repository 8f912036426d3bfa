#pragma once

// Sparse multivariate polynomials over Q. Terms are kept sorted strictly
// descending under the table's block order, with no zero coefficients and no
// duplicate monomials, so equal values have equal representations.

#include <map>
#include <string>
#include <vector>

#include "ufa/monomial.hpp"
#include "ufa/rational.hpp"
#include "ufa/vartable.hpp"

namespace ufa {

struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term&) const = default;
};

class MultiPoly {
public:
    MultiPoly() : table_(empty_table()) {}
    static MultiPoly zero(VarTablePtr table);
    static MultiPoly constant(VarTablePtr table, Rational c);
    static MultiPoly variable(VarTablePtr table, std::size_t index);
    static MultiPoly variable(VarTablePtr table, std::string_view name);
    /// Normalizes: combines duplicates, drops zeros, sorts.
    static MultiPoly from_terms(VarTablePtr table, std::vector<Term> terms);

    const VarTablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// The coefficient of the unit monomial (the whole value if constant).
    Rational constant_value() const;
    /// The rational coefficient of a given monomial (zero if absent).
    Rational coeff_of(const Monomial& m) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scalar_mul(const Rational& c) const;
    /// Multiplies by a single term; order-preserving, no re-sort.
    MultiPoly times_term(const Monomial& m, const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    /// Maximal term under the given order. Throws std::domain_error on zero.
    const Term& leading_term(const MonomialOrder& ord) const;

    /// Exact evaluation; the assignment must cover every variable that
    /// actually occurs (throws std::domain_error otherwise).
    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    /// Variable indices with a nonzero exponent somewhere.
    std::vector<std::size_t> variables_used() const;

    /// Re-expresses the polynomial over a table that contains all of this
    /// table's variables (matched by name).
    MultiPoly lifted_to(const VarTablePtr& target) const;

    std::string to_string() const;

    bool operator==(const MultiPoly& o) const;

private:
    VarTablePtr table_;
    std::vector<Term> terms_;
};

}  // namespace ufa
