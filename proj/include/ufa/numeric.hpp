#pragma once

// Floating-point ingredients: the closed-form complex square root, monic
// quadratic roots via a linear shift, and real roots of odd-degree
// polynomials by sign-change bisection inside the Cauchy bound.

#include <complex>
#include <string>
#include <utility>

#include "ufa/unipoly.hpp"

namespace ufa {

using ComplexDouble = std::complex<double>;

/// Principal square root: for z = a+bi the result c+di has c >= 0, with
/// c = sqrt((a + hypot(a,b))/2) and d = b/(2c); the pure-negative-real case
/// returns (0, sqrt(-a)). The other root is the negation.
/// Throws std::domain_error on non-finite input.
ComplexDouble complex_sqrt(ComplexDouble z);

/// Roots of the monic quadratic x^2 + b*x + c, as (-b/2 + s, -b/2 - s) for
/// s = complex_sqrt(b^2/4 - c); the smaller-magnitude root is recovered from
/// the product of roots to keep residuals tight.
std::pair<ComplexDouble, ComplexDouble> quadratic_roots(ComplexDouble b, ComplexDouble c);

/// A real root of an odd-degree polynomial with rational coefficients,
/// bisected from the bracket [-M, M], M = 1 + max |a_i/a_n|, until the
/// double-precision residual drops to tol.
double odd_degree_real_root(const UniPoly& f, double tol = 1e-12);

/// Renders as `2+1i` with shortest round-trip double formatting.
std::string format_complex(ComplexDouble z);
std::string format_double(double x);

}  // namespace ufa
