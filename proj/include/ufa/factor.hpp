#pragma once

// Univariate factorization over Q at desk scale: Euclidean gcd, Yun
// squarefree decomposition, Kronecker's interpolation search for irreducible
// factors, and the resulting local decomposition of the root adjunction
// F[alpha]/(f(alpha)) into F[alpha]/(p_i(alpha)^{e_i}) pieces.

#include <cstdint>
#include <utility>
#include <vector>

#include "ufa/algebra.hpp"
#include "ufa/unipoly.hpp"

namespace ufa {

struct FactorList {
    Rational unit;  // leading coefficient of the input
    std::vector<std::pair<UniPoly, unsigned>> factors;  // monic irreducible, multiplicity
};

struct LocalFactor {
    PresentedAlgebra algebra;  // Q[alpha]/(p^e)
    UniPoly residue_poly;      // p, monic irreducible
    unsigned multiplicity;     // e
    std::size_t dimension;     // e * deg p
};

struct KroneckerOptions {
    std::size_t max_degree = 8;
    std::uint64_t max_divisor_tuples = 1'000'000;
};

/// Monic gcd by the Euclidean algorithm. Requires numeric coefficients and
/// not both inputs zero.
UniPoly uni_gcd(const UniPoly& f, const UniPoly& g);

/// f = prod s_j^j with the s_j squarefree and pairwise coprime; parts with
/// s_j = 1 are omitted. Requires f monic and numeric.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f);

/// Complete factorization into monic irreducibles over Q by the Kronecker
/// evaluation/interpolation search. Factors are sorted by degree, then by
/// coefficient order. Throws std::domain_error above the degree bound and
/// std::runtime_error when the divisor-tuple budget is exceeded.
FactorList kronecker_factor(const UniPoly& f, const KroneckerOptions& opts = {});

/// The local pieces of Q[alpha]/(f(alpha)), one per irreducible factor.
/// Their dimensions sum to deg f.
std::vector<LocalFactor> crt_decompose_root_adjunction(const UniPoly& f,
                                                       const KroneckerOptions& opts = {});

}  // namespace ufa
