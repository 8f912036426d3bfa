#include <doctest.h>

#include "support.hpp"
#include "ufa/parse.hpp"

using namespace ufa;

TEST_CASE("simple polynomials parse to exact coefficients") {
    auto t = empty_table();
    UniPoly p = parse_unipoly("x^2 + 1", t);
    REQUIRE(p.degree() == std::optional<std::size_t>{2});
    CHECK(p.numeric_coeff(0) == Rational(1));
    CHECK(p.numeric_coeff(1) == Rational(0));
    CHECK(p.numeric_coeff(2) == Rational(1));

    UniPoly q = parse_unipoly("3/2*x - 1/3", t);
    CHECK(q.numeric_coeff(1) == Rational(Integer(3), Integer(2)));
    CHECK(q.numeric_coeff(0) == Rational(Integer(-1), Integer(3)));
}

TEST_CASE("parsing matches hand-built polynomials") {
    auto t = make_table({{"a0", Block::Coefficient},
                         {"a1", Block::Coefficient},
                         {"a2", Block::Coefficient}});
    UniPoly parsed = parse_unipoly("x^3 + a2*x^2 + a1*x + a0", t);
    UniPoly built = UniPoly::from_coeffs(
        t, {MultiPoly::variable(t, "a0"), MultiPoly::variable(t, "a1"),
            MultiPoly::variable(t, "a2"), MultiPoly::constant(t, Rational(1))});
    CHECK(parsed == built);

    MultiPoly m = parse_multipoly("2*a1^2*a0 - 3", t);
    MultiPoly mb = MultiPoly::variable(t, "a1").pow(2) * MultiPoly::variable(t, "a0");
    mb = mb.scalar_mul(Rational(2)) - MultiPoly::constant(t, Rational(3));
    CHECK(m == mb);
}

TEST_CASE("errors carry positions") {
    auto t = empty_table();
    CHECK_THROWS_WITH_AS(parse_unipoly("x^^2", t), "expected a number at offset 2",
                         ParseError);
    try {
        parse_unipoly("x^-2", t);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(std::string(e.what()).find("negative exponent") == 0);
    }
    CHECK_THROWS_AS(parse_unipoly("x + ", t), ParseError);
    CHECK_THROWS_AS(parse_unipoly("(x + 1", t), ParseError);
    CHECK_THROWS_AS(parse_unipoly("x + c", t), ParseError);  // unknown variable
    CHECK_THROWS_AS(parse_unipoly("1/0", t), ParseError);
    CHECK_THROWS_AS(parse_multipoly("x + 1", t), ParseError);
}

TEST_CASE("variable scanning and table inference") {
    auto vars = scan_variables("x^3 + a2*x^2 + b0*b1 + alpha");
    auto t = build_parse_table(vars);
    REQUIRE(t->size() == 4);
    CHECK(t->var(0).name == "a2");
    CHECK(t->var(0).block == Block::Coefficient);
    CHECK(t->var(1).name == "b0");
    CHECK(t->var(1).block == Block::Factor);
    CHECK(t->var(2).name == "b1");
    CHECK(t->var(3).name == "alpha");
    CHECK(t->var(3).block == Block::Root);

    CHECK_THROWS_AS(scan_variables("x + q0"), ParseError);

    // Declared descriptors take precedence over scanned ones.
    auto declared = std::vector<VarDescriptor>{{"c", Block::Factor}};
    auto scanned = scan_variables("x + a1");
    declared.insert(declared.end(), scanned.begin(), scanned.end());
    auto t2 = build_parse_table(declared);
    CHECK(t2->index_of("c").has_value());
    CHECK(t2->var(*t2->index_of("c")).block == Block::Factor);
}

TEST_CASE("round trip over generated polynomials") {
    auto t = make_table({{"a0", Block::Coefficient},
                         {"a1", Block::Coefficient},
                         {"b0", Block::Factor},
                         {"b1", Block::Factor}});
    auto g = test::rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t deg = test::random_int(g, 0, 4);
        std::vector<MultiPoly> cs;
        for (std::size_t i = 0; i <= deg; ++i) {
            cs.push_back(test::random_multipoly(g, t, 4, 3));
        }
        UniPoly p = UniPoly::from_coeffs(t, cs);
        CHECK(parse_unipoly(p.to_string(), t) == p);
    }
}
