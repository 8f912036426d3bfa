#include <doctest.h>

#include <stdexcept>

#include "support.hpp"
#include "ufa/algebra.hpp"
#include "ufa/parse.hpp"

using namespace ufa;

namespace {

VarTablePtr coeff_table() {
    return make_table({{"a0", Block::Coefficient},
                       {"a1", Block::Coefficient},
                       {"a2", Block::Coefficient}});
}

}  // namespace

TEST_CASE("universal factor algebra of the generic cubic at k = 2") {
    UniPoly f = parse_unipoly("x^3 + a2*x^2 + a1*x + a0", coeff_table());
    auto rec = build_universal_factor_algebra(f, 2);
    const auto& t = rec.algebra.table();

    CHECK(rec.divisor == parse_unipoly("x^2 + b1*x + b0", t));
    CHECK(rec.cofactor == parse_unipoly("x + (a2 - b1)", t));
    REQUIRE(rec.algebra.generators().size() == 2);
    CHECK(rec.algebra.generators()[0] == parse_multipoly("a0 - a2*b0 + b0*b1", t));
    CHECK(rec.algebra.generators()[1] == parse_multipoly("a1 - b0 - a2*b1 + b1^2", t));

    // f = h*g + r identically in the extended ring.
    CHECK(rec.cofactor * rec.divisor + rec.remainder == f.lifted_to(t));

    // Certified free R-basis {1, b0, b1}.
    CHECK(rec.algebra.basis_certified());
    CHECK(rec.algebra.dimension() == Dimension::finite(3));
    auto basis = rec.algebra.basis();
    REQUIRE(basis.has_value());
    REQUIRE(basis->size() == 3);
    CHECK((*basis)[0].is_one());
    CHECK((*basis)[1] == parse_multipoly("b0", t).terms()[0].mono);
    CHECK((*basis)[2] == parse_multipoly("b1", t).terms()[0].mono);
}

TEST_CASE("k = 0 leaves the base ring untouched") {
    UniPoly f = parse_unipoly("x^3 + a2*x^2 + a1*x + a0", coeff_table());
    auto rec = build_universal_factor_algebra(f, 0);
    CHECK(rec.divisor == parse_unipoly("1", rec.algebra.table()));
    CHECK(rec.cofactor == f.lifted_to(rec.algebra.table()));
    CHECK(rec.remainder.is_zero());
    CHECK(rec.algebra.generators().empty());
    CHECK(rec.algebra.dimension() == Dimension::finite(1));  // rank 1 over R
    CHECK_FALSE(rec.algebra.is_zero_ring());
}

TEST_CASE("degree smaller than k forces the zero ring") {
    UniPoly f = parse_unipoly("x", empty_table());
    auto rec = build_universal_factor_algebra(f, 2);
    CHECK(rec.algebra.is_zero_ring());
    CHECK(rec.algebra.dimension() == Dimension::finite(0));
}

TEST_CASE("build preconditions") {
    auto t = coeff_table();
    CHECK_THROWS_AS(build_universal_factor_algebra(parse_unipoly("2*x + 1", t), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_root_adjunction(parse_unipoly("a0", t)), std::invalid_argument);
    auto mixed = make_table({{"b0", Block::Factor}});
    CHECK_THROWS_AS(build_universal_factor_algebra(parse_unipoly("x + b0", mixed), 1),
                    std::invalid_argument);
}

TEST_CASE("root adjunction in the alpha convention") {
    UniPoly f = parse_unipoly("x^2 + 1", empty_table());
    PresentedAlgebra a = build_root_adjunction(f);
    const auto& t = a.table();
    REQUIRE(a.generators().size() == 1);
    CHECK(a.generators()[0] == parse_multipoly("alpha^2 + 1", t));
    CHECK(a.dimension() == Dimension::finite(2));
    auto basis = a.basis();
    REQUIRE(basis.has_value());
    CHECK(basis->size() == 2);

    // Degree-1 adjunction collapses to the base field.
    PresentedAlgebra lin = build_root_adjunction(parse_unipoly("x - 5", empty_table()));
    CHECK(lin.dimension() == Dimension::finite(1));

    // Symbolic cubic: free R-basis {1, alpha, alpha^2}.
    PresentedAlgebra cub =
        build_root_adjunction(parse_unipoly("x^3 + a2*x^2 + a1*x + a0", coeff_table()));
    CHECK(cub.basis_certified());
    CHECK(cub.dimension() == Dimension::finite(3));
    auto cb = cub.basis();
    REQUIRE(cb.has_value());
    CHECK((*cb)[0].is_one());
    CHECK((*cb)[1] == parse_multipoly("alpha", cub.table()).terms()[0].mono);
    CHECK((*cb)[2] == parse_multipoly("alpha^2", cub.table()).terms()[0].mono);
}

TEST_CASE("adjoin_root guards") {
    PresentedAlgebra a = build_root_adjunction(parse_unipoly("x^2 + 1", empty_table()));
    UniPoly over = parse_unipoly("x^2 + 1", a.table());
    CHECK_THROWS_AS(a.adjoin_root(over), std::invalid_argument);  // alpha already taken
    CHECK_THROWS_AS(
        PresentedAlgebra::polynomial_ring(empty_table())
            .adjoin_root(parse_unipoly("2*x + 1", empty_table())),
        std::invalid_argument);
}

TEST_CASE("S1 and S2 have equal dimensions") {
    auto t = empty_table();

    auto [s1a, s2a] = build_s1_s2(parse_unipoly("x^2 + 1", t), 1);
    CHECK(s1a.dimension() == Dimension::finite(2));
    CHECK(s2a.dimension() == Dimension::finite(2));

    auto [s1b, s2b] = build_s1_s2(parse_unipoly("x^3 - 2*x^2 + 3*x - 5", t), 2);
    CHECK(s1b.dimension() == Dimension::finite(6));
    CHECK(s2b.dimension() == Dimension::finite(6));

    auto [s1c, s2c] = build_s1_s2(parse_unipoly("x", t), 1);
    CHECK(s1c.dimension() == Dimension::finite(1));
    CHECK(s2c.dimension() == Dimension::finite(1));
}

TEST_CASE("S1/S2 equality across small degrees and all k") {
    auto t = empty_table();
    auto g = test::rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = test::random_int(g, 1, 3);
        UniPoly f = test::random_numeric(g, t, n, -2, 2, true);
        for (std::size_t k = 1; k <= n; ++k) {
            auto [s1, s2] = build_s1_s2(f, k);
            auto d1 = s1.dimension();
            auto d2 = s2.dimension();
            REQUIRE(d1.is_finite());
            CHECK(d1 == d2);
            CHECK(Integer(static_cast<long>(d1.value)) ==
                  Integer(static_cast<long>(k)) * binomial(n, k));
        }
    }
}

TEST_CASE("build_s1_s2 rejects bad input") {
    auto t = empty_table();
    UniPoly f = parse_unipoly("x^2 + 1", t);
    CHECK_THROWS_AS(build_s1_s2(f, 0), std::domain_error);
    CHECK_THROWS_AS(build_s1_s2(f, 3), std::domain_error);
    CHECK_THROWS_AS(build_s1_s2(parse_unipoly("x^2 + a0", coeff_table()), 1),
                    std::invalid_argument);
}

TEST_CASE("the modified-division shortcut recovers the third relation") {
    UniPoly f = parse_unipoly("x^3 + a2*x^2 + a1*x + a0", coeff_table());
    auto rec = build_universal_factor_algebra(f, 2);
    const auto& t = rec.algebra.table();

    UniPoly diff = third_relation_difference(f);
    CHECK(diff.coeff(2) == parse_multipoly("a2*b0 - b0*b1 - a0", t));
    // The quadratic coefficient is minus the low remainder generator.
    CHECK(diff.coeff(2) == -rec.algebra.generators()[0]);
    CHECK(diff.coeff(3).is_zero());
    CHECK(diff.coeff(0).is_zero());

    MultiPoly third = third_relation_shortcut(f);
    CHECK(third == parse_multipoly("a1*b0 - b0^2 - a0*b1", t));
    CHECK(normal_form(third, rec.algebra.groebner()).is_zero());

    CHECK_THROWS_AS(third_relation_shortcut(parse_unipoly("x^2 + a0", coeff_table())),
                    std::domain_error);
}

TEST_CASE("a symbolic leading coefficient is reported as not certified") {
    auto t = make_table({{"a0", Block::Coefficient}, {"b0", Block::Factor}});
    PresentedAlgebra a(t, {parse_multipoly("a0*b0 - 1", t)});
    CHECK_FALSE(a.basis_certified());
    CHECK(a.dimension() == Dimension::not_certified());
    CHECK_FALSE(a.basis().has_value());
}

TEST_CASE("polynomial ring over factor variables has infinite dimension") {
    auto t = make_table({{"b0", Block::Factor}});
    CHECK(PresentedAlgebra::polynomial_ring(t).dimension() == Dimension::infinite());
}
