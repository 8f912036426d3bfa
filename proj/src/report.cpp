#include "ufa/report.hpp"

#include <sstream>

namespace ufa {

using nlohmann::json;

json table_json(const VarTable& table) {
    json out = json::array();
    for (const auto& v : table.vars()) {
        out.push_back({{"name", v.name}, {"block", std::string(block_name(v.block))}});
    }
    return out;
}

json monomials_json(const std::vector<Monomial>& ms, const VarTable& table) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(m.to_string(table));
    return out;
}

json dimension_json(const Dimension& d) {
    if (d.is_finite()) return d.value;
    return d.to_string();
}

json algebra_json(const PresentedAlgebra& a, bool with_groebner) {
    json out;
    out["vartable"] = table_json(*a.table());
    json gens = json::array();
    for (const auto& g : a.generators()) gens.push_back(g.to_string());
    out["generators"] = gens;
    if (with_groebner) {
        const GroebnerBasis& gb = a.groebner();
        out["order"] = gb.order().describe();
        json elems = json::array();
        for (const auto& e : gb.elements()) elems.push_back(e.to_string());
        out["groebner_basis"] = elems;
        out["leading_monomials"] = monomials_json(gb.leading_monomials(), *a.table());
        auto basis = a.basis();
        out["standard_monomials"] =
            basis ? monomials_json(*basis, *a.table()) : json(nullptr);
        out["dimension"] = dimension_json(a.dimension());
        out["zero_ring"] = a.is_zero_ring();
    }
    return out;
}

json record_json(const FactorizationRecord& rec, bool with_groebner) {
    json out;
    out["divisor"] = rec.divisor.to_string();
    out["cofactor"] = rec.cofactor.to_string();
    out["remainder"] = rec.remainder.to_string();
    out["algebra"] = algebra_json(rec.algebra, with_groebner);
    return out;
}

json factor_list_json(const FactorList& fl) {
    json out;
    out["unit"] = fl.unit.to_string();
    json factors = json::array();
    for (const auto& [p, e] : fl.factors) {
        factors.push_back({{"poly", p.to_string()},
                           {"multiplicity", e},
                           {"degree", *p.degree()}});
    }
    out["factors"] = factors;
    return out;
}

json local_factors_json(const std::vector<LocalFactor>& locals) {
    json out = json::array();
    std::size_t total = 0;
    for (const auto& l : locals) {
        out.push_back({{"residue_poly", l.residue_poly.to_string()},
                       {"multiplicity", l.multiplicity},
                       {"dimension", l.dimension},
                       {"residue_degree", *l.residue_poly.degree()}});
        total += l.dimension;
    }
    return {{"locals", out}, {"total_dimension", total}};
}

std::string algebra_text(const PresentedAlgebra& a, bool with_groebner) {
    std::ostringstream out;
    out << "variables:";
    for (const auto& v : a.table()->vars()) {
        out << " " << v.name << "(" << block_name(v.block) << ")";
    }
    out << "\n";
    out << "generators:";
    if (a.generators().empty()) out << " (none)";
    out << "\n";
    for (const auto& g : a.generators()) out << "  " << g.to_string() << "\n";
    if (with_groebner) {
        const GroebnerBasis& gb = a.groebner();
        out << "reduced groebner basis (" << gb.order().describe() << "):";
        if (gb.elements().empty()) out << " (empty)";
        out << "\n";
        for (const auto& e : gb.elements()) out << "  " << e.to_string() << "\n";
        auto basis = a.basis();
        out << "standard monomials:";
        if (!basis) {
            out << " (" << a.dimension().to_string() << ")";
        } else {
            for (const auto& m : *basis) out << " " << m.to_string(*a.table());
        }
        out << "\n";
        out << "dimension: " << a.dimension().to_string() << "\n";
    }
    return out.str();
}

std::string record_text(const FactorizationRecord& rec) {
    std::ostringstream out;
    out << "divisor g = " << rec.divisor.to_string() << "\n";
    out << "cofactor h = " << rec.cofactor.to_string() << "\n";
    out << "remainder r = " << rec.remainder.to_string() << "\n";
    out << algebra_text(rec.algebra, false);
    return out.str();
}

}  // namespace ufa
