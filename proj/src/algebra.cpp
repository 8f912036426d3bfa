#include "ufa/algebra.hpp"

#include <stdexcept>

namespace ufa {

std::string Dimension::to_string() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(value);
        case Kind::Infinite: return "infinite";
        case Kind::NotCertified: return "not certified";
    }
    return "?";
}

PresentedAlgebra PresentedAlgebra::polynomial_ring(VarTablePtr table) {
    return PresentedAlgebra(std::move(table), {});
}

PresentedAlgebra::PresentedAlgebra(VarTablePtr table, std::vector<MultiPoly> generators)
    : table_(std::move(table)),
      generators_(std::move(generators)),
      order_(MonomialOrder::block(table_)),
      cache_(std::make_shared<Cache>()) {
    for (const auto& g : generators_) {
        if (!same_table(g.table(), table_)) {
            throw std::invalid_argument("generator over a different variable table");
        }
    }
}

const GroebnerBasis& PresentedAlgebra::groebner() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->gb) {
        cache_->gb = buchberger(generators_, order_);
    }
    return *cache_->gb;
}

bool PresentedAlgebra::basis_certified() const {
    auto quotient = table_->quotient_indices();
    return leading_monomials_within(groebner(), quotient);
}

std::optional<std::vector<Monomial>> PresentedAlgebra::basis() const {
    const GroebnerBasis& gb = groebner();
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->basis) {
        auto quotient = table_->quotient_indices();
        if (!leading_monomials_within(gb, quotient)) {
            cache_->basis = std::optional<std::vector<Monomial>>{};
        } else {
            cache_->basis = standard_monomials(gb, quotient);
        }
    }
    return *cache_->basis;
}

Dimension PresentedAlgebra::dimension() const {
    const GroebnerBasis& gb = groebner();
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (cache_->dim) return *cache_->dim;
    }
    Dimension d;
    auto quotient = table_->quotient_indices();
    if (!leading_monomials_within(gb, quotient)) {
        d = Dimension::not_certified();
    } else {
        auto sm = standard_monomials(gb, quotient);
        d = sm ? Dimension::finite(sm->size()) : Dimension::infinite();
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->dim) cache_->dim = d;
    return *cache_->dim;
}

bool PresentedAlgebra::is_zero_ring() const {
    return groebner().is_unit_ideal();
}

PresentedAlgebra PresentedAlgebra::adjoin_root(const UniPoly& f, const std::string& name) const {
    if (!same_table(f.table(), table_)) {
        throw std::invalid_argument("adjoin_root: polynomial over a different table");
    }
    if (!f.is_monic() || *f.degree() < 1) {
        throw std::invalid_argument("adjoin_root: polynomial must be monic of degree >= 1");
    }
    if (table_->index_of(name)) {
        throw std::invalid_argument("adjoin_root: variable already present: " + name);
    }
    VarTablePtr bigger = extend_table(table_, {{name, Block::Root}});
    std::vector<MultiPoly> gens;
    gens.reserve(generators_.size() + 1);
    for (const auto& g : generators_) gens.push_back(g.lifted_to(bigger));
    MultiPoly root = MultiPoly::variable(bigger, name);
    gens.push_back(f.lifted_to(bigger).evaluate(root));
    return PresentedAlgebra(std::move(bigger), std::move(gens));
}

Dimension algebra_dimension(const PresentedAlgebra& a) { return a.dimension(); }

bool is_zero_ring(const PresentedAlgebra& a) { return a.is_zero_ring(); }

namespace {

void require_coefficient_base(const UniPoly& f, const char* who) {
    if (!f.is_monic()) {
        throw std::invalid_argument(std::string(who) + ": f must be monic");
    }
    for (const auto& v : f.table()->vars()) {
        if (v.block != Block::Coefficient) {
            throw std::invalid_argument(std::string(who) +
                                        ": base table must contain only coefficient variables");
        }
    }
}

}  // namespace

FactorizationRecord build_universal_factor_algebra(const UniPoly& f, std::size_t k) {
    require_coefficient_base(f, "build_universal_factor_algebra");
    VarTablePtr table = extend_table(f.table(), factor_vars(k));
    UniPoly fl = f.lifted_to(table);
    UniPoly g = generic_monic(k, table);
    DivisionResult div = long_divide(fl, g);
    std::vector<MultiPoly> gens;
    for (std::size_t i = 0; i < k; ++i) {
        MultiPoly c = div.remainder.coeff(i);
        if (!c.is_zero()) gens.push_back(std::move(c));
    }
    PresentedAlgebra algebra(table, std::move(gens));
    return {std::move(g), std::move(div.quotient), std::move(div.remainder),
            std::move(algebra)};
}

PresentedAlgebra build_root_adjunction(const UniPoly& f) {
    require_coefficient_base(f, "build_root_adjunction");
    if (*f.degree() < 1) {
        throw std::invalid_argument("build_root_adjunction: degree must be >= 1");
    }
    return PresentedAlgebra::polynomial_ring(f.table()).adjoin_root(f);
}

std::pair<PresentedAlgebra, PresentedAlgebra> build_s1_s2(const UniPoly& f, std::size_t k) {
    if (!f.is_numeric()) {
        throw std::invalid_argument("build_s1_s2: f must have numeric coefficients");
    }
    if (!f.is_monic()) {
        throw std::invalid_argument("build_s1_s2: f must be monic");
    }
    if (k < 1 || k > *f.degree()) {
        throw std::domain_error("build_s1_s2: k must satisfy 1 <= k <= deg f");
    }
    FactorizationRecord top = build_universal_factor_algebra(f, k);
    PresentedAlgebra s1 = top.algebra.adjoin_root(top.divisor);
    FactorizationRecord below = build_universal_factor_algebra(f, k - 1);
    PresentedAlgebra s2 = below.algebra.adjoin_root(below.cofactor);
    return {std::move(s1), std::move(s2)};
}

UniPoly third_relation_difference(const UniPoly& f) {
    require_coefficient_base(f, "third_relation_difference");
    if (f.degree() != std::optional<std::size_t>{3}) {
        throw std::domain_error("third_relation_difference: f must be a cubic");
    }
    VarTablePtr table = extend_table(f.table(), factor_vars(2));
    UniPoly fl = f.lifted_to(table);
    UniPoly g = generic_monic(2, table);
    MultiPoly b0 = MultiPoly::variable(table, "b0");
    // The "quotient" b0*x + c0 matches both the top and the constant term of
    // b0*f, so the difference has no x^3 or x^0 part.
    UniPoly q1 = UniPoly::from_coeffs(table, {fl.coeff(0), b0});
    return fl.scalar_mul(b0) - q1 * g;
}

MultiPoly third_relation_shortcut(const UniPoly& f) {
    return third_relation_difference(f).coeff(1);
}

}  // namespace ufa
