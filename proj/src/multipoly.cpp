#include "ufa/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ufa {

namespace {

void require_same_table(const MultiPoly& a, const MultiPoly& b) {
    if (!same_table(a.table(), b.table())) {
        throw std::invalid_argument("polynomials over different variable tables");
    }
}

}  // namespace

MultiPoly MultiPoly::zero(VarTablePtr table) {
    MultiPoly p;
    p.table_ = std::move(table);
    return p;
}

MultiPoly MultiPoly::constant(VarTablePtr table, Rational c) {
    MultiPoly p = zero(std::move(table));
    if (!c.is_zero()) {
        p.terms_.push_back({Monomial(p.table_->size()), std::move(c)});
    }
    return p;
}

MultiPoly MultiPoly::variable(VarTablePtr table, std::size_t index) {
    if (index >= table->size()) {
        throw std::invalid_argument("variable index out of range");
    }
    MultiPoly p = zero(std::move(table));
    p.terms_.push_back({Monomial::unit(p.table_->size(), index), Rational(1)});
    return p;
}

MultiPoly MultiPoly::variable(VarTablePtr table, std::string_view name) {
    auto idx = table->index_of(name);
    if (!idx) {
        throw std::invalid_argument("unknown variable: " + std::string(name));
    }
    return variable(std::move(table), *idx);
}

MultiPoly MultiPoly::from_terms(VarTablePtr table, std::vector<Term> terms) {
    MonomialOrder ord = MonomialOrder::block(table);
    for (const auto& t : terms) {
        if (t.mono.nvars() != table->size()) {
            throw std::invalid_argument("term does not match variable table");
        }
    }
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.mono, b.mono);
    });
    MultiPoly p = zero(std::move(table));
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    const Term& last = terms_.back();  // the unit monomial is minimal
    return last.mono.is_one() ? last.coeff : Rational(0);
}

Rational MultiPoly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_) {
        if (t.mono == m) return t.coeff;
    }
    return Rational(0);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_table(*this, o);
    MonomialOrder ord = MonomialOrder::block(table_);
    MultiPoly r = zero(table_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    return *this + (-o);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_table(*this, o);
    MonomialOrder ord = MonomialOrder::block(table_);
    auto desc = [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); };
    std::map<Monomial, Rational, decltype(desc)> acc(desc);
    for (const auto& s : terms_) {
        for (const auto& t : o.terms_) {
            Monomial m = s.mono * t.mono;
            Rational c = s.coeff * t.coeff;
            auto [it, inserted] = acc.try_emplace(std::move(m), c);
            if (!inserted) it->second += c;
        }
    }
    MultiPoly r = zero(table_);
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    }
    return r;
}

MultiPoly MultiPoly::scalar_mul(const Rational& c) const {
    if (c.is_zero()) return zero(table_);
    MultiPoly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

MultiPoly MultiPoly::times_term(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return zero(table_);
    MultiPoly p = *this;
    for (auto& t : p.terms_) {
        t.mono = t.mono * m;
        t.coeff *= c;
    }
    return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(table_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

const Term& MultiPoly::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) {
        throw std::domain_error("leading term of the zero polynomial");
    }
    const Term* best = &terms_[0];
    for (const auto& t : terms_) {
        if (ord.greater(t.mono, best->mono)) best = &t;
    }
    return *best;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
    std::vector<const Rational*> values(table_->size(), nullptr);
    for (std::size_t i = 0; i < table_->size(); ++i) {
        auto it = assignment.find(table_->var(i).name);
        if (it != assignment.end()) values[i] = &it->second;
    }
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational prod = t.coeff;
        for (std::size_t i = 0; i < table_->size(); ++i) {
            unsigned e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!values[i]) {
                throw std::domain_error("evaluate: no value for variable " +
                                        table_->var(i).name);
            }
            for (unsigned j = 0; j < e; ++j) prod *= *values[i];
        }
        sum += prod;
    }
    return sum;
}

std::vector<std::size_t> MultiPoly::variables_used() const {
    std::vector<bool> used(table_->size(), false);
    for (const auto& t : terms_) {
        for (std::size_t i = 0; i < table_->size(); ++i) {
            if (t.mono.exponent(i) > 0) used[i] = true;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (used[i]) out.push_back(i);
    }
    return out;
}

MultiPoly MultiPoly::lifted_to(const VarTablePtr& target) const {
    if (same_table(table_, target)) {
        MultiPoly p = *this;
        p.table_ = target;
        return p;
    }
    std::vector<std::size_t> map(table_->size());
    for (std::size_t i = 0; i < table_->size(); ++i) {
        auto idx = target->index_of(table_->var(i).name);
        if (!idx) {
            throw std::invalid_argument("lift: target table lacks variable " +
                                        table_->var(i).name);
        }
        map[i] = *idx;
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->size());
        std::vector<unsigned> exps(target->size(), 0);
        for (std::size_t i = 0; i < table_->size(); ++i) {
            exps[map[i]] = t.mono.exponent(i);
        }
        terms.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return from_terms(target, std::move(terms));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c.sign() < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        if (t.mono.is_one()) {
            out += c.to_string();
        } else if (c.is_one()) {
            out += t.mono.to_string(*table_);
        } else {
            out += c.to_string() + "*" + t.mono.to_string(*table_);
        }
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return same_table(table_, o.table_) && terms_ == o.terms_;
}

}  // namespace ufa
