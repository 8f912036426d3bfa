#pragma once

// Presented algebras and the universal factorization constructions: the
// quotient R_{f,k} of R[b0..b{k-1}] by the remainder coefficients of f upon
// division by the generic monic degree-k divisor, root adjunctions R_{f,1},
// and the S1/S2 algebras whose dimensions certify the binomial formula.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ufa/groebner.hpp"
#include "ufa/unipoly.hpp"

namespace ufa {

struct Dimension {
    enum class Kind { Finite, Infinite, NotCertified };
    Kind kind = Kind::Finite;
    std::size_t value = 0;

    static Dimension finite(std::size_t n) { return {Kind::Finite, n}; }
    static Dimension infinite() { return {Kind::Infinite, 0}; }
    static Dimension not_certified() { return {Kind::NotCertified, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    std::string to_string() const;
    bool operator==(const Dimension&) const = default;
};

/// A quotient of a polynomial ring over Q by finitely many generators, with
/// lazily computed (and cached) reduced Groebner basis, standard-monomial
/// basis and dimension. Coefficient-block variables are treated as the base
/// ring R; the quotiented variables are the factor and root blocks.
class PresentedAlgebra {
public:
    static PresentedAlgebra polynomial_ring(VarTablePtr table);
    PresentedAlgebra(VarTablePtr table, std::vector<MultiPoly> generators);

    const VarTablePtr& table() const { return table_; }
    const std::vector<MultiPoly>& generators() const { return generators_; }
    const MonomialOrder& order() const { return order_; }

    const GroebnerBasis& groebner() const;

    /// True when every Groebner leading monomial lives in the quotiented
    /// variables; only then do the standard monomials certify a free module
    /// basis over the base ring.
    bool basis_certified() const;

    /// Standard monomials of the quotiented variables, when finitely many
    /// and certified.
    std::optional<std::vector<Monomial>> basis() const;

    /// Rank over the base ring: the F-dimension when there are no symbolic
    /// coefficients.
    Dimension dimension() const;

    bool is_zero_ring() const;

    /// Extends the table with a root-block variable and adds the relation
    /// f(root) = 0. f must be monic of degree >= 1 over this table.
    PresentedAlgebra adjoin_root(const UniPoly& f, const std::string& name = "alpha") const;

private:
    VarTablePtr table_;
    std::vector<MultiPoly> generators_;
    MonomialOrder order_;

    struct Cache {
        std::mutex mutex;
        std::optional<GroebnerBasis> gb;
        std::optional<std::optional<std::vector<Monomial>>> basis;
        std::optional<Dimension> dim;
    };
    std::shared_ptr<Cache> cache_;
};

/// Free-function spellings used by reports and tests.
Dimension algebra_dimension(const PresentedAlgebra& a);
bool is_zero_ring(const PresentedAlgebra& a);

/// The record of dividing f by the generic monic degree-k divisor g: the
/// cofactor h, the remainder r, and the quotient algebra presented by the
/// x-coefficients of r.
struct FactorizationRecord {
    UniPoly divisor;
    UniPoly cofactor;
    UniPoly remainder;
    PresentedAlgebra algebra;
};

/// Builds R_{f,k}. f must be monic, over coefficient-block variables only
/// (or numeric); the table is extended with b0..b{k-1}. For k = 0 the
/// generator list is empty and the algebra is the base ring itself.
FactorizationRecord build_universal_factor_algebra(const UniPoly& f, std::size_t k);

/// Builds R_{f,1} in the root convention: adjoins a root symbol and divides
/// by x - root, leaving the single relation f(root) = 0.
PresentedAlgebra build_root_adjunction(const UniPoly& f);

/// The two algebras of the dimension-count induction: S1 adjoins a root of
/// the generic degree-k divisor g over R_{f,k}; S2 adjoins a root of the
/// cofactor h' over R_{f,k-1}. Requires numeric f and 1 <= k <= deg f.
std::pair<PresentedAlgebra, PresentedAlgebra> build_s1_s2(const UniPoly& f, std::size_t k);

/// For a monic cubic f with constant coefficient c0: the "remainder" of the
/// modified division b0*f - (b0*x + c0)*g by g = x^2 + b1*x + b0, whose
/// linear coefficient is the third relation of the cubic's ideal up to sign.
UniPoly third_relation_difference(const UniPoly& f);

/// The x^1 coefficient of the modified-division difference.
MultiPoly third_relation_shortcut(const UniPoly& f);

}  // namespace ufa
