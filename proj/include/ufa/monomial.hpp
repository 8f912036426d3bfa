#pragma once

// Monomials as exponent vectors over a VarTable, and the monomial orders
// used by the Groebner kernel.
//
// Variable precedence convention: within any comparison group, a variable
// declared later in the table is greater. Tables list b0, b1, ... in
// ascending index, so the factor block is ordered b{k-1} > ... > b0.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ufa/vartable.hpp"

namespace ufa {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
    static Monomial unit(std::size_t nvars, std::size_t var, unsigned e = 1);

    std::size_t nvars() const { return exps_.size(); }
    unsigned exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned total_degree() const;

    bool is_one() const;
    bool divides(const Monomial& m) const;
    /// Support contained in the given variable set.
    bool supported_on(std::span<const std::size_t> vars) const;

    Monomial operator*(const Monomial& o) const;
    /// Componentwise difference; requires o.divides(*this).
    Monomial operator/(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial&) const = default;

    /// Renders as `a2*b1^2`, factors in table order.
    std::string to_string(const VarTable& table) const;

private:
    std::vector<unsigned> exps_;
};

class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, Block };

    static MonomialOrder lex(VarTablePtr table);
    static MonomialOrder grevlex(VarTablePtr table);
    /// Block order: root block > factor block > coefficient block, compared
    /// group by group with grevlex inside each group. This is the order the
    /// whole quotient-algebra machinery runs under.
    static MonomialOrder block(VarTablePtr table);

    Kind kind() const { return kind_; }
    const VarTablePtr& table() const { return table_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string describe() const;

    bool operator==(const MonomialOrder& o) const;

private:
    MonomialOrder(Kind kind, VarTablePtr table);

    Kind kind_;
    VarTablePtr table_;
    // Comparison groups, highest-ranked first; each lists variable indices
    // with the greatest variable first.
    std::vector<std::vector<std::size_t>> groups_;
};

}  // namespace ufa
