#pragma once

// Structured reports: JSON documents and plain-text blocks for algebras,
// factorization records and Groebner bases, shared by the CLI and tests.

#include <json.hpp>

#include <string>

#include "ufa/algebra.hpp"
#include "ufa/factor.hpp"

namespace ufa {

nlohmann::json table_json(const VarTable& table);
nlohmann::json monomials_json(const std::vector<Monomial>& ms, const VarTable& table);
nlohmann::json dimension_json(const Dimension& d);

/// Variable table + generators; optionally the reduced basis, standard
/// monomials and dimension.
nlohmann::json algebra_json(const PresentedAlgebra& a, bool with_groebner);

/// Divisor, cofactor, remainder and the presented algebra.
nlohmann::json record_json(const FactorizationRecord& rec, bool with_groebner);

nlohmann::json factor_list_json(const FactorList& fl);
nlohmann::json local_factors_json(const std::vector<LocalFactor>& locals);

std::string algebra_text(const PresentedAlgebra& a, bool with_groebner);
std::string record_text(const FactorizationRecord& rec);

}  // namespace ufa
