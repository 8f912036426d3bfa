#include "ufa/unipoly.hpp"

#include <stdexcept>

namespace ufa {

namespace {

void require_same_table(const UniPoly& a, const UniPoly& b) {
    if (!same_table(a.table(), b.table())) {
        throw std::invalid_argument("polynomials over different variable tables");
    }
}

}  // namespace

UniPoly UniPoly::zero(VarTablePtr table) {
    UniPoly p;
    p.table_ = std::move(table);
    return p;
}

UniPoly UniPoly::from_coeffs(VarTablePtr table, std::vector<MultiPoly> coeffs) {
    for (const auto& c : coeffs) {
        if (!same_table(c.table(), table)) {
            throw std::invalid_argument("coefficient over a different variable table");
        }
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    UniPoly p = zero(std::move(table));
    p.coeffs_ = std::move(coeffs);
    return p;
}

UniPoly UniPoly::from_rationals(VarTablePtr table, const std::vector<Rational>& coeffs) {
    std::vector<MultiPoly> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs) cs.push_back(MultiPoly::constant(table, c));
    return from_coeffs(table, std::move(cs));
}

UniPoly UniPoly::term(VarTablePtr table, MultiPoly c, std::size_t power) {
    std::vector<MultiPoly> cs(power, MultiPoly::zero(table));
    cs.push_back(std::move(c));
    return from_coeffs(std::move(table), std::move(cs));
}

UniPoly UniPoly::x(VarTablePtr table) {
    return term(table, MultiPoly::constant(table, Rational(1)), 1);
}

std::optional<std::size_t> UniPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

MultiPoly UniPoly::coeff(std::size_t i) const {
    if (i >= coeffs_.size()) return MultiPoly::zero(table_);
    return coeffs_[i];
}

const MultiPoly& UniPoly::leading_coeff() const {
    if (coeffs_.empty()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

bool UniPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

bool UniPoly::is_numeric() const {
    for (const auto& c : coeffs_) {
        if (!c.is_constant()) return false;
    }
    return true;
}

Rational UniPoly::numeric_coeff(std::size_t i) const {
    MultiPoly c = coeff(i);
    if (!c.is_constant()) {
        throw std::domain_error("coefficient is not a rational constant");
    }
    return c.constant_value();
}

UniPoly UniPoly::operator-() const {
    UniPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    require_same_table(*this, o);
    std::vector<MultiPoly> cs(std::max(coeffs_.size(), o.coeffs_.size()),
                              MultiPoly::zero(table_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] = cs[i] + o.coeffs_[i];
    return from_coeffs(table_, std::move(cs));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    return *this + (-o);
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    require_same_table(*this, o);
    if (is_zero() || o.is_zero()) return zero(table_);
    std::vector<MultiPoly> cs(coeffs_.size() + o.coeffs_.size() - 1,
                              MultiPoly::zero(table_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            cs[i + j] = cs[i + j] + coeffs_[i] * o.coeffs_[j];
        }
    }
    return from_coeffs(table_, std::move(cs));
}

UniPoly UniPoly::scalar_mul(const MultiPoly& c) const {
    std::vector<MultiPoly> cs;
    cs.reserve(coeffs_.size());
    for (const auto& a : coeffs_) cs.push_back(a * c);
    return from_coeffs(table_, std::move(cs));
}

UniPoly UniPoly::scalar_mul(const Rational& c) const {
    std::vector<MultiPoly> cs;
    cs.reserve(coeffs_.size());
    for (const auto& a : coeffs_) cs.push_back(a.scalar_mul(c));
    return from_coeffs(table_, std::move(cs));
}

UniPoly UniPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) {
        UniPoly p = *this;
        return p;
    }
    std::vector<MultiPoly> cs(k, MultiPoly::zero(table_));
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return from_coeffs(table_, std::move(cs));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = from_rationals(table_, {Rational(1)});
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

MultiPoly UniPoly::evaluate(const MultiPoly& value) const {
    if (!same_table(table_, value.table())) {
        throw std::invalid_argument("evaluation point over a different variable table");
    }
    MultiPoly acc = MultiPoly::zero(table_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * value + coeffs_[i];
    }
    return acc;
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + numeric_coeff(i);
    }
    return acc;
}

double UniPoly::evaluate_double(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + numeric_coeff(i).to_double();
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return zero(table_);
    std::vector<MultiPoly> cs;
    cs.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        cs.push_back(coeffs_[i].scalar_mul(Rational(static_cast<long>(i))));
    }
    return from_coeffs(table_, std::move(cs));
}

UniPoly UniPoly::lifted_to(const VarTablePtr& target) const {
    std::vector<MultiPoly> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(c.lifted_to(target));
    return from_coeffs(target, std::move(cs));
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const MultiPoly& c = coeffs_[i];
        if (c.is_zero()) continue;

        bool negative = false;
        std::string body;
        if (c.term_count() > 1) {
            body = "(" + c.to_string() + ")";
        } else {
            const Term& t = c.terms()[0];
            Rational r = t.coeff;
            if (r.sign() < 0) {
                negative = true;
                r = -r;
            }
            if (t.mono.is_one()) {
                body = (r.is_one() && i > 0) ? "" : r.to_string();
            } else if (r.is_one()) {
                body = t.mono.to_string(*table_);
            } else {
                body = r.to_string() + "*" + t.mono.to_string(*table_);
            }
        }

        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += body.empty() ? "1" : body;
        } else {
            std::string xpart = (i == 1) ? "x" : "x^" + std::to_string(i);
            out += body.empty() ? xpart : body + "*" + xpart;
        }
    }
    return out;
}

bool UniPoly::operator==(const UniPoly& o) const {
    return same_table(table_, o.table_) && coeffs_ == o.coeffs_;
}

DivisionResult long_divide(const UniPoly& f, const UniPoly& g) {
    require_same_table(f, g);
    if (g.is_zero()) {
        throw std::invalid_argument("long_divide: division by the zero polynomial");
    }
    if (!g.is_monic()) {
        throw std::invalid_argument("long_divide: divisor must be monic");
    }
    const std::size_t dg = *g.degree();
    UniPoly q = UniPoly::zero(f.table());
    UniPoly r = f;
    // Peel the top term off the running remainder; the degree strictly
    // decreases each step because g is monic.
    while (!r.is_zero() && *r.degree() >= dg) {
        const std::size_t d = *r.degree();
        MultiPoly c = r.leading_coeff();
        q = q + UniPoly::term(f.table(), c, d - dg);
        r = r - g.scalar_mul(c).shifted(d - dg);
    }
    return {std::move(q), std::move(r)};
}

UniPoly generic_monic(std::size_t k, const VarTablePtr& table) {
    std::vector<MultiPoly> cs;
    cs.reserve(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        std::string name = "b" + std::to_string(i);
        if (!table->index_of(name)) {
            throw std::invalid_argument("generic_monic: table lacks factor variable " + name);
        }
        cs.push_back(MultiPoly::variable(table, name));
    }
    cs.push_back(MultiPoly::constant(table, Rational(1)));
    return UniPoly::from_coeffs(table, std::move(cs));
}

}  // namespace ufa
