#include "ufa/numeric.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ufa {

namespace {

void require_finite(ComplexDouble z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::domain_error(std::string(who) + ": non-finite input");
    }
}

}  // namespace

ComplexDouble complex_sqrt(ComplexDouble z) {
    require_finite(z, "complex_sqrt");
    const double a = z.real();
    const double b = z.imag();
    if (b == 0.0) {
        return a >= 0.0 ? ComplexDouble(std::sqrt(a), 0.0)
                        : ComplexDouble(0.0, std::sqrt(-a));
    }
    const double h = std::hypot(a, b);
    if (a >= 0.0) {
        double c = std::sqrt((a + h) / 2.0);
        return {c, b / (2.0 * c)};
    }
    // For a < 0 the sum a + h cancels; (h - a)/2 is the stable companion.
    double d = std::copysign(std::sqrt((h - a) / 2.0), b);
    return {b / (2.0 * d), d};
}

std::pair<ComplexDouble, ComplexDouble> quadratic_roots(ComplexDouble b, ComplexDouble c) {
    require_finite(b, "quadratic_roots");
    require_finite(c, "quadratic_roots");
    const ComplexDouble half_b = b / 2.0;
    const ComplexDouble s = complex_sqrt(half_b * half_b - c);
    ComplexDouble plus = -half_b + s;
    ComplexDouble minus = -half_b - s;
    // Recover the smaller root from the product x1*x2 = c; adding s to -b/2
    // can cancel catastrophically when the roots are unbalanced.
    if (std::abs(plus) >= std::abs(minus)) {
        if (std::abs(plus) > 0.0) minus = c / plus;
    } else {
        if (std::abs(minus) > 0.0) plus = c / minus;
    }
    return {plus, minus};
}

double odd_degree_real_root(const UniPoly& f, double tol) {
    if (f.is_zero() || *f.degree() % 2 == 0) {
        throw std::domain_error("odd_degree_real_root: degree must be odd");
    }
    if (!f.is_numeric()) {
        throw std::domain_error("odd_degree_real_root: coefficients must be rational constants");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("odd_degree_real_root: tol must be positive");
    }
    const std::size_t n = *f.degree();
    const Rational lead = f.numeric_coeff(n);

    // Cauchy bound: all real roots lie in [-M, M].
    double max_ratio = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        max_ratio = std::max(max_ratio, std::fabs((f.numeric_coeff(i) / lead).to_double()));
    }
    double lo = -(1.0 + max_ratio);
    double hi = 1.0 + max_ratio;

    auto value = [&](double x) { return f.evaluate_double(x); };

    // Odd degree guarantees opposite signs at the bracket ends.
    double flo = value(lo);
    if (flo == 0.0) return lo;
    if (value(hi) == 0.0) return hi;

    double mid = lo;
    for (int iter = 0; iter < 4096; ++iter) {
        mid = (lo + hi) / 2.0;
        double fm = value(mid);
        if (std::fabs(fm) <= tol) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= std::fabs(mid) * 1e-17) break;  // bracket exhausted in doubles
    }
    return mid;
}

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, end);
}

std::string format_complex(ComplexDouble z) {
    double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::string out = format_double(z.real());
    out += (im < 0.0) ? "-" : "+";
    out += format_double(std::fabs(im));
    out += "i";
    return out;
}

}  // namespace ufa
