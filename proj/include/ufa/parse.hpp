#pragma once

// Polynomial expression parsing. Grammar: a sum of products of rational
// literals and powered variables, with x as the distinguished univariate
// symbol; parentheses group subexpressions.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := number | identifier | '(' expr ')'
//   number := digits ['/' digits]

#include <stdexcept>
#include <string>
#include <string_view>

#include "ufa/unipoly.hpp"

namespace ufa {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Identifiers found in the source, classified by name: `a...` to the
/// coefficient block, `b...` to the factor block, `alpha` to the root block.
/// `x` is not a table variable. Unrecognized names throw ParseError.
std::vector<VarDescriptor> scan_variables(std::string_view src);

/// Canonical table from declared plus scanned descriptors: coefficient
/// block, then factor, then root; within a block sorted by numeric suffix,
/// then by name.
VarTablePtr build_parse_table(const std::vector<VarDescriptor>& descriptors);

/// One-source convenience: scan + build.
VarTablePtr infer_table(std::string_view src);

/// Parses a polynomial in x over the given table.
UniPoly parse_unipoly(std::string_view src, const VarTablePtr& table);

/// Parses an x-free polynomial (rejects x with a ParseError).
MultiPoly parse_multipoly(std::string_view src, const VarTablePtr& table);

}  // namespace ufa
