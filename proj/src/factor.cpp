#include "ufa/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace ufa {

namespace {

// Dense ascending coefficient vectors, used internally so the search does
// not pay MultiPoly overhead per coefficient.
using QPoly = std::vector<Rational>;
using IntPoly = std::vector<Integer>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int qdeg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly to_qpoly(const UniPoly& f) {
    QPoly p;
    if (f.is_zero()) return p;
    for (std::size_t i = 0; i <= *f.degree(); ++i) p.push_back(f.numeric_coeff(i));
    return p;
}

UniPoly to_unipoly(const QPoly& p, const VarTablePtr& table) {
    return UniPoly::from_rationals(table, p);
}

QPoly qscale(QPoly p, const Rational& c) {
    for (auto& a : p) a *= c;
    qtrim(p);
    return p;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qtrim(r);
    return r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qtrim(r);
    return r;
}

std::pair<QPoly, QPoly> qdivrem(QPoly num, const QPoly& den) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    QPoly q(num.size() > den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    const Rational lead = den.back();
    while (num.size() >= den.size()) {
        Rational c = num.back() / lead;
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) {
            num[shift + i] -= c * den[i];
        }
        num.pop_back();
        qtrim(num);
        if (num.empty()) break;
    }
    qtrim(q);
    return {std::move(q), std::move(num)};
}

QPoly qderivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) {
        d.push_back(p[i] * Rational(static_cast<long>(i)));
    }
    qtrim(d);
    return d;
}

QPoly qadd(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qtrim(r);
    return r;
}

QPoly qmonic(QPoly p) {
    if (p.empty()) return p;
    const Rational inv = p.back().inverse();
    return qscale(std::move(p), inv);
}

QPoly qgcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly r = qdivrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qmonic(std::move(a));
}

QPoly qexact_divide(const QPoly& num, const QPoly& den) {
    auto [q, r] = qdivrem(num, den);
    if (!r.empty()) throw std::logic_error("expected exact polynomial division");
    return q;
}

void require_numeric(const UniPoly& f, const char* who) {
    if (!f.is_numeric()) {
        throw std::domain_error(std::string(who) + ": coefficients must be rational constants");
    }
}

// --- Kronecker machinery over Z ---

Integer ieval(const IntPoly& p, const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

IntPoly primitive_part(IntPoly p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    if (p.empty()) return p;
    Integer c = 0;
    for (const auto& a : p) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    if (sgn(p.back()) < 0) c = -c;
    for (auto& a : p) a /= c;
    return p;
}

IntPoly int_poly_of(const UniPoly& f) {
    QPoly q = to_qpoly(f);
    Integer l = 1;
    for (const auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    IntPoly p;
    p.reserve(q.size());
    for (const auto& c : q) p.push_back(c.numerator() * (l / c.denominator()));
    return primitive_part(std::move(p));
}

QPoly int_to_qpoly(const IntPoly& p) {
    QPoly q;
    q.reserve(p.size());
    for (const auto& a : p) q.push_back(Rational(a));
    return q;
}

std::optional<IntPoly> int_exact_divide(const IntPoly& num, const IntPoly& den) {
    auto [q, r] = qdivrem(int_to_qpoly(num), int_to_qpoly(den));
    if (!r.empty()) return std::nullopt;
    IntPoly out;
    out.reserve(q.size());
    for (const auto& c : q) {
        if (!c.is_integer()) return std::nullopt;
        out.push_back(c.numerator());
    }
    return out;
}

// Signed divisors of a nonzero value: 1, -1, 2, -2, ... by magnitude.
std::vector<Integer> signed_divisors(const Integer& v, bool positive_only) {
    Integer a = abs(v);
    std::vector<Integer> pos;
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            pos.push_back(d);
            if (d * d != a) pos.push_back(a / d);
        }
    }
    std::sort(pos.begin(), pos.end());
    std::vector<Integer> out;
    out.reserve(pos.size() * (positive_only ? 1 : 2));
    for (const auto& d : pos) {
        out.push_back(d);
        if (!positive_only) out.push_back(-d);
    }
    return out;
}

// Fixed evaluation-point sequence 0, 1, -1, 2, -2, ...
Integer eval_point(std::size_t i) {
    if (i == 0) return 0;
    Integer m = (i + 1) / 2;
    return (i % 2 == 1) ? m : -m;
}

QPoly lagrange_interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    QPoly acc;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        QPoly basis{Rational(1)};
        Rational denom(1);
        for (std::size_t m = 0; m < xs.size(); ++m) {
            if (m == j) continue;
            basis = qmul(basis, QPoly{Rational(-xs[m]), Rational(1)});
            denom *= Rational(xs[j] - xs[m]);
        }
        acc = qadd(acc, qscale(std::move(basis), Rational(ys[j]) / denom));
    }
    return acc;
}

// Complete factorization of a primitive integer polynomial with positive
// leading coefficient into primitive irreducible factors.
std::vector<IntPoly> factor_primitive(IntPoly p, const KroneckerOptions& opts) {
    if (p.size() <= 1) return {};  // units carry no factors
    const std::size_t deg = p.size() - 1;
    if (deg == 1) return {std::move(p)};

    // Split off roots hit by the point sequence before any interpolation
    // search uses those points.
    const std::size_t points_needed = deg / 2 + 1;
    for (std::size_t i = 0; i < points_needed; ++i) {
        Integer pt = eval_point(i);
        if (sgn(ieval(p, pt)) == 0) {
            IntPoly linear{-pt, Integer(1)};
            auto rest = int_exact_divide(p, linear);
            auto factors = factor_primitive(primitive_part(std::move(*rest)), opts);
            factors.insert(factors.begin(), std::move(linear));
            return factors;
        }
    }

    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::vector<Integer> xs;
        std::vector<std::vector<Integer>> divisor_sets;
        std::uint64_t tuple_count = 1;
        for (std::size_t i = 0; i <= d; ++i) {
            Integer pt = eval_point(i);
            xs.push_back(pt);
            divisor_sets.push_back(signed_divisors(ieval(p, pt), i == 0));
            tuple_count *= divisor_sets.back().size();
            if (tuple_count > opts.max_divisor_tuples) {
                throw std::runtime_error(
                    "kronecker_factor: divisor enumeration bound exceeded (" +
                    std::to_string(opts.max_divisor_tuples) + " tuples)");
            }
        }

        std::vector<std::size_t> pick(d + 1, 0);
        std::vector<Integer> ys(d + 1);
        while (true) {
            for (std::size_t i = 0; i <= d; ++i) ys[i] = divisor_sets[i][pick[i]];
            QPoly cand = lagrange_interpolate(xs, ys);
            if (qdeg(cand) == static_cast<int>(d)) {
                bool integral = true;
                IntPoly g;
                for (const auto& c : cand) {
                    if (!c.is_integer()) {
                        integral = false;
                        break;
                    }
                    g.push_back(c.numerator());
                }
                if (integral) {
                    if (auto h = int_exact_divide(p, g)) {
                        auto left = factor_primitive(primitive_part(std::move(g)), opts);
                        auto right = factor_primitive(primitive_part(std::move(*h)), opts);
                        left.insert(left.end(), right.begin(), right.end());
                        return left;
                    }
                }
            }
            std::size_t i = 0;
            while (i <= d && ++pick[i] == divisor_sets[i].size()) {
                pick[i] = 0;
                ++i;
            }
            if (i > d) break;
        }
    }
    return {std::move(p)};
}

}  // namespace

UniPoly uni_gcd(const UniPoly& f, const UniPoly& g) {
    require_numeric(f, "uni_gcd");
    require_numeric(g, "uni_gcd");
    if (f.is_zero() && g.is_zero()) {
        throw std::domain_error("uni_gcd: gcd(0, 0) is undefined");
    }
    if (!same_table(f.table(), g.table())) {
        throw std::invalid_argument("uni_gcd: polynomials over different variable tables");
    }
    QPoly r = qgcd(to_qpoly(f), to_qpoly(g));
    return to_unipoly(r, f.table());
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
    require_numeric(f, "squarefree_decomposition");
    if (!f.is_monic()) {
        throw std::invalid_argument("squarefree_decomposition: f must be monic");
    }
    std::vector<std::pair<UniPoly, unsigned>> out;
    QPoly p = to_qpoly(f);
    if (qdeg(p) == 0) return out;

    // Yun's algorithm; exact over Q.
    QPoly g = qgcd(p, qderivative(p));
    QPoly b = qexact_divide(p, g);
    QPoly c = qexact_divide(qderivative(p), g);
    QPoly d = qsub(c, qderivative(b));
    unsigned i = 1;
    while (qdeg(b) > 0) {
        QPoly a = qgcd(b, d);
        if (qdeg(a) > 0) {
            out.emplace_back(to_unipoly(a, f.table()), i);
        }
        b = qexact_divide(b, a);
        c = qexact_divide(d, a);
        d = qsub(c, qderivative(b));
        ++i;
    }
    return out;
}

FactorList kronecker_factor(const UniPoly& f, const KroneckerOptions& opts) {
    require_numeric(f, "kronecker_factor");
    if (!f.is_monic()) {
        throw std::invalid_argument("kronecker_factor: f must be monic");
    }
    if (*f.degree() > opts.max_degree) {
        throw std::domain_error("kronecker_factor: degree bound exceeded (max " +
                                std::to_string(opts.max_degree) + ")");
    }
    FactorList out;
    out.unit = Rational(1);
    if (*f.degree() == 0) return out;

    std::vector<IntPoly> raw = factor_primitive(int_poly_of(f), opts);

    // Normalize to monic over Q and merge repeated factors.
    std::vector<UniPoly> monic;
    for (const auto& ip : raw) {
        QPoly q = qmonic(int_to_qpoly(ip));
        monic.push_back(to_unipoly(q, f.table()));
    }
    auto coeff_less = [](const UniPoly& a, const UniPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = *a.degree() + 1; i-- > 0;) {
            Rational ca = a.numeric_coeff(i), cb = b.numeric_coeff(i);
            if (ca != cb) return ca < cb;
        }
        return false;
    };
    std::sort(monic.begin(), monic.end(), coeff_less);
    for (auto& m : monic) {
        if (!out.factors.empty() && out.factors.back().first == m) {
            ++out.factors.back().second;
        } else {
            out.factors.emplace_back(std::move(m), 1);
        }
    }
    return out;
}

std::vector<LocalFactor> crt_decompose_root_adjunction(const UniPoly& f,
                                                       const KroneckerOptions& opts) {
    FactorList factors = kronecker_factor(f, opts);
    std::vector<LocalFactor> out;
    out.reserve(factors.factors.size());
    for (const auto& [p, e] : factors.factors) {
        UniPoly modulus = p.pow(e);
        PresentedAlgebra local = build_root_adjunction(modulus);
        out.push_back({std::move(local), p, e, e * *p.degree()});
    }
    return out;
}

}  // namespace ufa
