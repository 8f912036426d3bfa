#include "ufa/vartable.hpp"

#include <stdexcept>
#include <unordered_set>

namespace ufa {

std::string_view block_name(Block b) {
    switch (b) {
        case Block::Coefficient: return "coefficient";
        case Block::Factor: return "factor";
        case Block::Root: return "root";
    }
    return "?";
}

VarTable::VarTable(std::vector<VarDescriptor> vars) : vars_(std::move(vars)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& v : vars_) {
        if (v.name.empty()) {
            throw std::invalid_argument("variable with empty name");
        }
        if (!seen.insert(v.name).second) {
            throw std::invalid_argument("duplicate variable name: " + v.name);
        }
    }
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) return i;
    }
    return std::nullopt;
}

std::vector<std::size_t> VarTable::block_indices(Block b) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].block == b) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> VarTable::quotient_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].block != Block::Coefficient) out.push_back(i);
    }
    return out;
}

bool VarTable::has_block(Block b) const {
    for (const auto& v : vars_) {
        if (v.block == b) return true;
    }
    return false;
}

VarTablePtr make_table(std::vector<VarDescriptor> vars) {
    return std::make_shared<const VarTable>(std::move(vars));
}

VarTablePtr empty_table() {
    static const VarTablePtr t = std::make_shared<const VarTable>();
    return t;
}

VarTablePtr extend_table(const VarTablePtr& base, std::vector<VarDescriptor> more) {
    std::vector<VarDescriptor> vars = base->vars();
    vars.insert(vars.end(), more.begin(), more.end());
    return make_table(std::move(vars));
}

std::vector<VarDescriptor> factor_vars(std::size_t k) {
    std::vector<VarDescriptor> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back({"b" + std::to_string(i), Block::Factor});
    }
    return out;
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace ufa
