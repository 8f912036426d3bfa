#include "ufa/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ufa {

Monomial Monomial::unit(std::size_t nvars, std::size_t var, unsigned e) {
    Monomial m(nvars);
    m.exps_.at(var) = e;
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    if (exps_.size() != m.exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > m.exps_[i]) return false;
    }
    return true;
}

bool Monomial::supported_on(std::span<const std::size_t> vars) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) {
        throw std::invalid_argument("monomial size mismatch");
    }
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) {
        throw std::invalid_argument("monomial division not exact");
    }
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.exps_.size() != b.exps_.size()) {
        throw std::invalid_argument("monomial size mismatch");
    }
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) {
        r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
    }
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    }
    return true;
}

std::string Monomial::to_string(const VarTable& table) const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += table.var(i).name;
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

namespace {

// Group precedence: later table index = greater variable.
std::vector<std::size_t> reversed_indices(const std::vector<std::size_t>& idx) {
    return {idx.rbegin(), idx.rend()};
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b,
                                 std::span<const std::size_t> prec) {
    for (std::size_t v : prec) {
        if (a.exponent(v) != b.exponent(v)) {
            return a.exponent(v) <=> b.exponent(v);
        }
    }
    return std::strong_ordering::equal;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b,
                                     std::span<const std::size_t> prec) {
    unsigned da = 0, db = 0;
    for (std::size_t v : prec) {
        da += a.exponent(v);
        db += b.exponent(v);
    }
    if (da != db) return da <=> db;
    // Tie: scan from the least variable; the smaller exponent there wins.
    for (auto it = prec.rbegin(); it != prec.rend(); ++it) {
        if (a.exponent(*it) != b.exponent(*it)) {
            return b.exponent(*it) <=> a.exponent(*it);
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, VarTablePtr table)
    : kind_(kind), table_(std::move(table)) {
    if (!table_) throw std::invalid_argument("monomial order without table");
    if (kind_ == Kind::Block) {
        for (Block b : {Block::Root, Block::Factor, Block::Coefficient}) {
            auto idx = table_->block_indices(b);
            if (!idx.empty()) groups_.push_back(reversed_indices(idx));
        }
    } else {
        std::vector<std::size_t> all(table_->size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = all.size() - 1 - i;
        groups_.push_back(std::move(all));
    }
}

MonomialOrder MonomialOrder::lex(VarTablePtr table) {
    return MonomialOrder(Kind::Lex, std::move(table));
}

MonomialOrder MonomialOrder::grevlex(VarTablePtr table) {
    return MonomialOrder(Kind::GrevLex, std::move(table));
}

MonomialOrder MonomialOrder::block(VarTablePtr table) {
    return MonomialOrder(Kind::Block, std::move(table));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != table_->size() || b.nvars() != table_->size()) {
        throw std::invalid_argument("monomial does not match order's table");
    }
    for (const auto& group : groups_) {
        std::strong_ordering c = (kind_ == Kind::Lex)
            ? lex_compare(a, b, group)
            : grevlex_compare(a, b, group);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::GrevLex: return "grevlex";
        case Kind::Block: return "block(root>factor>coefficient, grevlex within blocks)";
    }
    return "?";
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && same_table(table_, o.table_);
}

}  // namespace ufa
