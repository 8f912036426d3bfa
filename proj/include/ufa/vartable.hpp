#pragma once

// Variable tables. Every polynomial in a computation refers to one shared,
// immutable table that fixes the ambient variable order and assigns each
// variable to a block: the coefficient block (a0, a1, ...) holds the symbolic
// coefficients of f, the factor block (b0, b1, ...) holds the indeterminate
// coefficients of the generic divisor, and the root block holds an adjoined
// root symbol.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ufa {

enum class Block { Coefficient, Factor, Root };

std::string_view block_name(Block b);

struct VarDescriptor {
    std::string name;
    Block block;
    bool operator==(const VarDescriptor&) const = default;
};

class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<VarDescriptor> vars);

    std::size_t size() const { return vars_.size(); }
    const VarDescriptor& var(std::size_t i) const { return vars_[i]; }
    const std::vector<VarDescriptor>& vars() const { return vars_; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    std::vector<std::size_t> block_indices(Block b) const;
    /// Indices of the quotiented variables (factor and root blocks); the
    /// coefficient block stays free as the base ring.
    std::vector<std::size_t> quotient_indices() const;
    bool has_block(Block b) const;

    bool operator==(const VarTable&) const = default;

private:
    std::vector<VarDescriptor> vars_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_table(std::vector<VarDescriptor> vars);
VarTablePtr empty_table();
VarTablePtr extend_table(const VarTablePtr& base, std::vector<VarDescriptor> more);

/// Descriptors b0, ..., b{k-1}, all in the factor block.
std::vector<VarDescriptor> factor_vars(std::size_t k);

/// True when the two pointers denote the same table, by identity or content.
bool same_table(const VarTablePtr& a, const VarTablePtr& b);

}  // namespace ufa
