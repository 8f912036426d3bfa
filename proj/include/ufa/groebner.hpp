#pragma once

// Buchberger's algorithm over Q, normal forms, reduced bases and standard
// monomials. Pair selection follows the normal strategy (lowest lcm degree
// first, ties broken by insertion order) with Buchberger's coprime-product
// criterion; the chain criterion is available behind an option.

#include <optional>
#include <span>
#include <vector>

#include "ufa/multipoly.hpp"

namespace ufa {

struct BuchbergerOptions {
    bool use_chain_criterion = false;
};

/// A reduced Groebner basis: every element monic, no element's leading
/// monomial divides another's, and no term of any element is divisible by
/// another element's leading monomial. Elements are stored descending by
/// leading monomial, which makes the representation canonical for a fixed
/// order and ideal.
class GroebnerBasis {
public:
    GroebnerBasis(MonomialOrder order, std::vector<MultiPoly> elements);

    const MonomialOrder& order() const { return order_; }
    const VarTablePtr& table() const { return order_.table(); }
    const std::vector<MultiPoly>& elements() const { return elements_; }
    const std::vector<Monomial>& leading_monomials() const { return leading_; }
    bool empty() const { return elements_.empty(); }

    /// True iff the basis is {1}, i.e. the ideal is the whole ring.
    bool is_unit_ideal() const;

private:
    MonomialOrder order_;
    std::vector<MultiPoly> elements_;
    std::vector<Monomial> leading_;
};

/// Reduced Groebner basis of the ideal generated by `generators`. An empty
/// generator list (or all-zero generators) yields the empty basis of the
/// zero ideal. Deterministic for a fixed order and input sequence.
GroebnerBasis buchberger(const std::vector<MultiPoly>& generators,
                         const MonomialOrder& order,
                         const BuchbergerOptions& opts = {});

/// Fully reduces p: no term of the result is divisible by any basis leading
/// monomial, and p - result lies in the ideal. Idempotent.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

/// Monomials supported on `vars` divisible by no basis leading monomial,
/// sorted ascending under the basis order. nullopt when infinitely many.
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb,
                                                        std::span<const std::size_t> vars);

/// Convenience overload: restrict to one block, or to all variables.
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb,
                                                        std::optional<Block> block = std::nullopt);

/// True when every basis leading monomial is supported on `vars`. This is
/// the certificate that the standard monomials on `vars` form a module basis
/// of the quotient over the ring generated by the remaining variables.
bool leading_monomials_within(const GroebnerBasis& gb, std::span<const std::size_t> vars);

}  // namespace ufa
