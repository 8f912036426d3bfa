#pragma once

// Shared generators and checkers for the test suites. Everything here is
// deliberately independent of the code paths under test: s-polynomials are
// rebuilt from the public arithmetic, random polynomials use fixed seeds.

#include <random>
#include <vector>

#include "ufa/groebner.hpp"
#include "ufa/parse.hpp"
#include "ufa/unipoly.hpp"

namespace ufa::test {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int random_int(std::mt19937_64& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline Rational random_rational(std::mt19937_64& g, int lo = -9, int hi = 9) {
    return Rational(random_int(g, lo, hi));
}

inline UniPoly random_numeric(std::mt19937_64& g, const VarTablePtr& table,
                              std::size_t deg, int lo, int hi, bool monic) {
    std::vector<Rational> cs;
    for (std::size_t i = 0; i < deg; ++i) cs.push_back(random_rational(g, lo, hi));
    if (monic) {
        cs.push_back(Rational(1));
    } else {
        Rational lead = random_rational(g, lo, hi);
        if (lead.is_zero()) lead = Rational(1);
        cs.push_back(lead);
    }
    return UniPoly::from_rationals(table, cs);
}

inline Monomial random_monomial(std::mt19937_64& g, std::size_t nvars, unsigned max_exp = 4) {
    std::vector<unsigned> exps(nvars);
    for (auto& e : exps) e = static_cast<unsigned>(random_int(g, 0, static_cast<int>(max_exp)));
    return Monomial(std::move(exps));
}

inline MultiPoly random_multipoly(std::mt19937_64& g, const VarTablePtr& table,
                                  std::size_t max_terms = 5, unsigned max_exp = 3) {
    std::vector<Term> terms;
    std::size_t n = static_cast<std::size_t>(random_int(g, 0, static_cast<int>(max_terms)));
    for (std::size_t i = 0; i < n; ++i) {
        terms.push_back({random_monomial(g, table->size(), max_exp), random_rational(g, -5, 5)});
    }
    return MultiPoly::from_terms(table, std::move(terms));
}

/// S-polynomial rebuilt from public arithmetic, independent of the kernel's
/// internal one.
inline MultiPoly spoly_oracle(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
    const Term& ltf = f.leading_term(ord);
    const Term& ltg = g.leading_term(ord);
    Monomial l = Monomial::lcm(ltf.mono, ltg.mono);
    return f.times_term(l / ltf.mono, ltf.coeff.inverse()) -
           g.times_term(l / ltg.mono, ltg.coeff.inverse());
}

/// Buchberger's criterion checked exhaustively: every s-polynomial of basis
/// pairs reduces to zero, and every original generator reduces to zero.
inline bool is_groebner_basis_of(const GroebnerBasis& gb,
                                 const std::vector<MultiPoly>& generators) {
    const auto& els = gb.elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
        for (std::size_t j = i + 1; j < els.size(); ++j) {
            if (!normal_form(spoly_oracle(els[i], els[j], gb.order()), gb).is_zero()) {
                return false;
            }
        }
    }
    for (const auto& g : generators) {
        if (!normal_form(g, gb).is_zero()) return false;
    }
    return true;
}

}  // namespace ufa::test
