// ufa: exact kernel for universal factorization algebras over Q.
//
// Subcommands cover monic long division, the R_{f,k} construction, Groebner
// bases and dimensions, the S1/S2 dimension count, factorization and local
// decomposition, the numeric square-root/quadratic/odd-root helpers, and a
// worked generic-cubic demonstration. Every subcommand accepts --json.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ufa/algebra.hpp"
#include "ufa/factor.hpp"
#include "ufa/numeric.hpp"
#include "ufa/parse.hpp"
#include "ufa/report.hpp"

using nlohmann::json;
using namespace ufa;

namespace {

std::vector<VarDescriptor> parse_vars_option(const std::string& spec) {
    std::vector<VarDescriptor> out;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? spec.size() : comma + 1;
        if (item.empty()) continue;
        std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::domain_error("--vars entries look like name:block, got '" + item + "'");
        }
        std::string name = item.substr(0, colon);
        std::string block = item.substr(colon + 1);
        Block b;
        if (block == "coeff" || block == "coefficient") {
            b = Block::Coefficient;
        } else if (block == "factor") {
            b = Block::Factor;
        } else if (block == "root") {
            b = Block::Root;
        } else {
            throw std::domain_error("unknown block '" + block +
                                    "' (expected coeff, factor or root)");
        }
        out.push_back({std::move(name), b});
    }
    return out;
}

VarTablePtr table_for(const std::vector<std::string>& sources, const std::string& vars) {
    std::vector<VarDescriptor> descriptors = parse_vars_option(vars);
    for (const auto& src : sources) {
        auto scanned = scan_variables(src);
        descriptors.insert(descriptors.end(), scanned.begin(), scanned.end());
    }
    return build_parse_table(descriptors);
}

void emit(const json& doc, bool json_mode, const std::string& text) {
    if (json_mode) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

json binomial_json(const Integer& v) {
    if (v.fits_ulong_p()) return v.get_ui();
    return v.get_str();
}

std::uint64_t pick_seed(bool seed_set, std::uint64_t flag_value) {
    if (seed_set) return flag_value;
    if (const char* env = std::getenv("UFA_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return std::random_device{}();
}

int cmd_divide(const std::string& fs, const std::string& gs, const std::string& vars,
               bool json_mode) {
    VarTablePtr t = table_for({fs, gs}, vars);
    UniPoly f = parse_unipoly(fs, t);
    UniPoly g = parse_unipoly(gs, t);
    auto [q, r] = long_divide(f, g);
    json doc{{"command", "divide"},
             {"f", f.to_string()},
             {"g", g.to_string()},
             {"quotient", q.to_string()},
             {"remainder", r.to_string()}};
    emit(doc, json_mode, "q = " + q.to_string() + "\nr = " + r.to_string() + "\n");
    return 0;
}

int cmd_ufa(const std::string& fs, std::size_t k, const std::string& vars, bool json_mode,
            bool with_groebner) {
    VarTablePtr t = table_for({fs}, vars);
    UniPoly f = parse_unipoly(fs, t);
    FactorizationRecord rec = build_universal_factor_algebra(f, k);
    json doc = record_json(rec, with_groebner);
    doc["command"] = with_groebner ? "groebner" : "ufa";
    doc["f"] = f.to_string();
    doc["k"] = k;
    std::string text = "f = " + f.to_string() + "\nk = " + std::to_string(k) + "\n" +
                       record_text(rec);
    if (with_groebner) text += algebra_text(rec.algebra, true);
    emit(doc, json_mode, text);
    return 0;
}

int cmd_dim(const std::string& fs, std::size_t k, const std::string& vars, bool json_mode) {
    VarTablePtr t = table_for({fs}, vars);
    UniPoly f = parse_unipoly(fs, t);
    FactorizationRecord rec = build_universal_factor_algebra(f, k);
    std::size_t n = *f.degree();
    Integer expected = binomial(n, k);
    Dimension dim = rec.algebra.dimension();
    bool match = dim.is_finite() && Integer(static_cast<long>(dim.value)) == expected;
    json doc{{"command", "dim"},
             {"f", f.to_string()},
             {"k", k},
             {"n", n},
             {"dimension", dimension_json(dim)},
             {"binomial", binomial_json(expected)},
             {"match", match}};
    emit(doc, json_mode,
         "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
             "\ndimension = " + dim.to_string() + "\nC(n, k) = " + expected.get_str() +
             "\nmatch: " + (match ? "yes" : "no") + "\n");
    return match ? 0 : 1;
}

int cmd_check_dim(std::size_t max_deg, std::size_t trials, bool seed_set,
                  std::uint64_t seed_flag, bool json_mode) {
    std::uint64_t seed = pick_seed(seed_set, seed_flag);
    std::mt19937_64 g(seed);
    VarTablePtr t = empty_table();
    json checks = json::array();
    bool all_ok = true;
    std::string text = "  n  k   dim  C(n,k)  ok\n";
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_deg)(g);
        std::vector<Rational> cs;
        for (std::size_t i = 0; i < n; ++i) {
            cs.push_back(Rational(std::uniform_int_distribution<long>(-5, 5)(g)));
        }
        cs.push_back(Rational(1));
        UniPoly f = UniPoly::from_rationals(t, cs);
        for (std::size_t k = 0; k <= n + 1; ++k) {
            FactorizationRecord rec = build_universal_factor_algebra(f, k);
            Dimension dim = rec.algebra.dimension();
            Integer expected = binomial(n, k);
            bool ok = dim.is_finite() && Integer(static_cast<long>(dim.value)) == expected;
            all_ok = all_ok && ok;
            checks.push_back({{"f", f.to_string()},
                              {"n", n},
                              {"k", k},
                              {"dimension", dimension_json(dim)},
                              {"binomial", binomial_json(expected)},
                              {"ok", ok}});
            char row[96];
            std::snprintf(row, sizeof(row), "%3zu %2zu %5s %7s  %s\n", n, k,
                          dim.to_string().c_str(), expected.get_str().c_str(),
                          ok ? "yes" : "NO");
            text += row;
        }
    }
    json doc{{"command", "check-dim"}, {"max_deg", max_deg}, {"trials", trials},
             {"seed", seed},           {"checks", checks},   {"all_ok", all_ok}};
    text += all_ok ? "all dimension checks passed\n" : "DIMENSION CHECKS FAILED\n";
    emit(doc, json_mode, text);
    return all_ok ? 0 : 1;
}

int cmd_check_valuation(unsigned long max, bool json_mode) {
    json failures = json::array();
    unsigned long checked = 0;
    for (unsigned long n = 1; n <= max; ++n) {
        for (unsigned long p = 2; p <= n; ++p) {
            if (n % p != 0 || !is_prime(Integer(static_cast<long>(p)))) continue;
            ++checked;
            if (!valuation_drop_holds(Integer(static_cast<long>(n)),
                                      Integer(static_cast<long>(p)))) {
                failures.push_back({{"n", n}, {"p", p}});
            }
        }
    }
    bool all_hold = failures.empty();
    json doc{{"command", "check-valuation"},
             {"max", max},
             {"checked", checked},
             {"all_hold", all_hold},
             {"failures", failures}};
    emit(doc, json_mode,
         "checked " + std::to_string(checked) + " (n, p) pairs up to n = " +
             std::to_string(max) + "\n" +
             (all_hold ? "valuation inequality holds everywhere\n"
                       : "VALUATION INEQUALITY FAILED\n"));
    return all_hold ? 0 : 1;
}

int cmd_s1s2(const std::string& fs, std::size_t k, bool json_mode) {
    VarTablePtr t = table_for({fs}, "");
    UniPoly f = parse_unipoly(fs, t);
    auto [s1, s2] = build_s1_s2(f, k);
    Dimension d1 = s1.dimension();
    Dimension d2 = s2.dimension();
    std::size_t n = *f.degree();
    Integer expected = Integer(static_cast<long>(k)) * binomial(n, k);
    bool equal = d1 == d2 && d1.is_finite() &&
                 Integer(static_cast<long>(d1.value)) == expected;
    json doc{{"command", "s1s2"},
             {"f", f.to_string()},
             {"k", k},
             {"dim_s1", dimension_json(d1)},
             {"dim_s2", dimension_json(d2)},
             {"expected", binomial_json(expected)},
             {"equal", equal}};
    emit(doc, json_mode,
         "dim S1 = " + d1.to_string() + "\ndim S2 = " + d2.to_string() +
             "\nk*C(n,k) = " + expected.get_str() + "\nequal: " + (equal ? "yes" : "no") +
             "\n");
    return equal ? 0 : 1;
}

int cmd_factor(const std::string& fs, bool json_mode) {
    VarTablePtr t = table_for({fs}, "");
    UniPoly f = parse_unipoly(fs, t);
    FactorList fl = kronecker_factor(f);
    json doc = factor_list_json(fl);
    doc["command"] = "factor";
    doc["f"] = f.to_string();
    std::string text = "f = " + f.to_string() + "\nunit = " + fl.unit.to_string() +
                       "\nfactors:\n";
    for (const auto& [p, e] : fl.factors) {
        text += "  (" + p.to_string() + ")^" + std::to_string(e) + "\n";
    }
    emit(doc, json_mode, text);
    return 0;
}

int cmd_decompose(const std::string& fs, bool json_mode) {
    VarTablePtr t = table_for({fs}, "");
    UniPoly f = parse_unipoly(fs, t);
    auto locals = crt_decompose_root_adjunction(f);
    json doc = local_factors_json(locals);
    doc["command"] = "decompose";
    doc["f"] = f.to_string();
    std::string text = "f = " + f.to_string() + "\nlocal factors:\n";
    std::size_t total = 0;
    for (const auto& l : locals) {
        text += "  Q[alpha]/((" + l.residue_poly.to_string() + ")^" +
                std::to_string(l.multiplicity) + "), dimension " +
                std::to_string(l.dimension) + "\n";
        total += l.dimension;
    }
    text += "total dimension = " + std::to_string(total) + "\n";
    emit(doc, json_mode, text);
    return 0;
}

int cmd_csqrt(double re, double im, bool json_mode) {
    ComplexDouble w = complex_sqrt({re, im});
    json doc{{"command", "csqrt"},
             {"input", {{"re", re}, {"im", im}}},
             {"root", {{"re", w.real()}, {"im", w.imag()}}}};
    emit(doc, json_mode, format_complex(w) + "\n");
    return 0;
}

int cmd_quadroots(double bre, double bim, double cre, double cim, bool json_mode) {
    ComplexDouble b(bre, bim), c(cre, cim);
    auto [r1, r2] = quadratic_roots(b, c);
    double res = std::max(std::abs(r1 * r1 + b * r1 + c), std::abs(r2 * r2 + b * r2 + c));
    json doc{{"command", "quadroots"},
             {"b", {{"re", bre}, {"im", bim}}},
             {"c", {{"re", cre}, {"im", cim}}},
             {"roots", json::array({{{"re", r1.real()}, {"im", r1.imag()}},
                                    {{"re", r2.real()}, {"im", r2.imag()}}})},
             {"max_residual", res}};
    emit(doc, json_mode, format_complex(r1) + "\n" + format_complex(r2) + "\n");
    return 0;
}

int cmd_oddroot(const std::string& fs, double tol, bool json_mode) {
    VarTablePtr t = table_for({fs}, "");
    UniPoly f = parse_unipoly(fs, t);
    double root = odd_degree_real_root(f, tol);
    double res = std::fabs(f.evaluate_double(root));
    json doc{{"command", "oddroot"},
             {"f", f.to_string()},
             {"tol", tol},
             {"root", root},
             {"residual", res}};
    emit(doc, json_mode,
         "root = " + format_double(root) + "\nresidual = " + format_double(res) + "\n");
    return 0;
}

int cmd_demo_cubic(bool json_mode) {
    VarTablePtr base = make_table({{"a0", Block::Coefficient},
                                   {"a1", Block::Coefficient},
                                   {"a2", Block::Coefficient}});
    UniPoly f = parse_unipoly("x^3 + a2*x^2 + a1*x + a0", base);
    FactorizationRecord rec = build_universal_factor_algebra(f, 2);
    const VarTablePtr& t = rec.algebra.table();
    const GroebnerBasis& gb = rec.algebra.groebner();
    auto basis = rec.algebra.basis();

    UniPoly diff = third_relation_difference(f);
    MultiPoly x2_coeff = diff.coeff(2);
    MultiPoly x1_coeff = diff.coeff(1);
    bool minus_generator = (x2_coeff == -rec.algebra.generators()[0]);
    MultiPoly reduced = normal_form(x1_coeff, gb);

    json doc{{"command", "demo-cubic"},
             {"f", f.to_string()},
             {"g", rec.divisor.to_string()},
             {"cofactor", rec.cofactor.to_string()},
             {"remainder", rec.remainder.to_string()}};
    json gens = json::array();
    for (const auto& gen : rec.algebra.generators()) gens.push_back(gen.to_string());
    doc["generators"] = gens;
    json elems = json::array();
    for (const auto& e : gb.elements()) elems.push_back(e.to_string());
    doc["groebner_basis"] = elems;
    doc["standard_monomials"] = basis ? monomials_json(*basis, *t) : json(nullptr);
    doc["dimension"] = dimension_json(rec.algebra.dimension());
    doc["shortcut"] = {{"difference", diff.to_string()},
                       {"x2_coefficient", x2_coeff.to_string()},
                       {"x1_coefficient", x1_coeff.to_string()},
                       {"x2_equals_minus_generator", minus_generator},
                       {"normal_form", reduced.to_string()}};

    std::string text;
    text += "f = " + f.to_string() + "\n";
    text += "g = " + rec.divisor.to_string() + "\n";
    text += "division f = h*g + r:\n";
    text += "  h = " + rec.cofactor.to_string() + "\n";
    text += "  r = " + rec.remainder.to_string() + "\n";
    text += "ideal generators (x-coefficients of r):\n";
    for (const auto& gen : rec.algebra.generators()) {
        text += "  " + gen.to_string() + "\n";
    }
    text += "reduced groebner basis (" + gb.order().describe() + "):\n";
    for (const auto& e : gb.elements()) text += "  " + e.to_string() + "\n";
    text += "standard monomials:";
    if (basis) {
        for (const auto& m : *basis) text += " " + m.to_string(*t);
    }
    text += "\n";
    text += "dimension over the coefficient ring: " +
            rec.algebra.dimension().to_string() + "\n";
    text += "modified division shortcut with q1 = b0*x + a0:\n";
    text += "  b0*f - q1*g = " + diff.to_string() + "\n";
    text += "  x^2 coefficient: " + x2_coeff.to_string() + "\n";
    text += "  equals minus the first generator: " +
            std::string(minus_generator ? "yes" : "no") + "\n";
    text += "  x coefficient: " + x1_coeff.to_string() + "\n";
    text += "  normal form of the x coefficient modulo the basis: " +
            reduced.to_string() + "\n";
    emit(doc, json_mode, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact universal factorization algebra toolkit"};
    app.require_subcommand(1);

    auto* divide = app.add_subcommand("divide", "long division by a monic divisor");
    std::string div_f, div_g, div_vars;
    bool div_json = false;
    divide->add_option("--f", div_f, "dividend")->required();
    divide->add_option("--g", div_g, "monic divisor")->required();
    divide->add_option("--vars", div_vars, "extra variables, name:block comma list");
    divide->add_flag("--json", div_json, "machine-readable output");

    auto* ufa_cmd = app.add_subcommand("ufa", "universal factor algebra of f at degree k");
    auto* groebner_cmd =
        app.add_subcommand("groebner", "reduced groebner basis of the factor algebra");
    auto* dim_cmd = app.add_subcommand("dim", "factor algebra dimension vs C(n,k)");
    struct FkOpts {
        std::string f, vars;
        std::size_t k = 0;
        bool json = false;
    };
    FkOpts ufa_o, gro_o, dim_o;
    std::pair<CLI::App*, FkOpts*> fk_cmds[] = {
        {ufa_cmd, &ufa_o}, {groebner_cmd, &gro_o}, {dim_cmd, &dim_o}};
    for (auto [cmd, opts] : fk_cmds) {
        cmd->add_option("--f", opts->f, "monic polynomial in x")->required();
        cmd->add_option("--k", opts->k, "divisor degree")->required();
        cmd->add_option("--vars", opts->vars, "extra variables, name:block comma list");
        cmd->add_flag("--json", opts->json, "machine-readable output");
    }

    auto* check_dim = app.add_subcommand("check-dim", "randomized dimension sweep");
    std::size_t cd_max_deg = 4, cd_trials = 50;
    std::uint64_t cd_seed = 0;
    bool cd_json = false;
    check_dim->add_option("--max-deg", cd_max_deg, "maximum degree")->required();
    check_dim->add_option("--trials", cd_trials, "number of random polynomials");
    auto* seed_opt =
        check_dim->add_option("--seed", cd_seed, "RNG seed (default: UFA_SEED or random)");
    check_dim->add_flag("--json", cd_json, "machine-readable output");

    auto* check_val = app.add_subcommand("check-valuation", "valuation inequality sweep");
    unsigned long cv_max = 1000;
    bool cv_json = false;
    check_val->add_option("--max", cv_max, "check all n up to this bound")->required();
    check_val->add_flag("--json", cv_json, "machine-readable output");

    auto* s1s2 = app.add_subcommand("s1s2", "dimensions of S1 and S2");
    std::string ss_f;
    std::size_t ss_k = 1;
    bool ss_json = false;
    s1s2->add_option("--f", ss_f, "monic numeric polynomial in x")->required();
    s1s2->add_option("--k", ss_k, "divisor degree, 1 <= k <= deg f")->required();
    s1s2->add_flag("--json", ss_json, "machine-readable output");

    auto* factor_cmd = app.add_subcommand("factor", "irreducible factorization over Q");
    std::string fa_f;
    bool fa_json = false;
    factor_cmd->add_option("--f", fa_f, "monic numeric polynomial in x")->required();
    factor_cmd->add_flag("--json", fa_json, "machine-readable output");

    auto* decompose =
        app.add_subcommand("decompose", "local decomposition of the root adjunction");
    std::string de_f;
    bool de_json = false;
    decompose->add_option("--f", de_f, "monic numeric polynomial in x")->required();
    decompose->add_flag("--json", de_json, "machine-readable output");

    auto* csqrt = app.add_subcommand("csqrt", "principal complex square root");
    double cs_re = 0, cs_im = 0;
    bool cs_json = false;
    csqrt->add_option("re", cs_re, "real part")->required();
    csqrt->add_option("im", cs_im, "imaginary part")->required();
    csqrt->add_flag("--json", cs_json, "machine-readable output");

    auto* quad = app.add_subcommand("quadroots", "roots of x^2 + b*x + c");
    double q_bre = 0, q_bim = 0, q_cre = 0, q_cim = 0;
    bool q_json = false;
    quad->add_option("b_re", q_bre, "Re b")->required();
    quad->add_option("b_im", q_bim, "Im b")->required();
    quad->add_option("c_re", q_cre, "Re c")->required();
    quad->add_option("c_im", q_cim, "Im c")->required();
    quad->add_flag("--json", q_json, "machine-readable output");

    auto* oddroot = app.add_subcommand("oddroot", "real root of an odd-degree polynomial");
    std::string od_f;
    double od_tol = 1e-12;
    bool od_json = false;
    oddroot->add_option("--f", od_f, "odd-degree numeric polynomial in x")->required();
    oddroot->add_option("--tol", od_tol, "residual tolerance");
    oddroot->add_flag("--json", od_json, "machine-readable output");

    auto* demo = app.add_subcommand("demo-cubic", "worked generic cubic at k = 2");
    bool demo_json = false;
    demo->add_flag("--json", demo_json, "machine-readable output");

    try {
        app.parse(argc, argv);

        if (*divide) return cmd_divide(div_f, div_g, div_vars, div_json);
        if (*ufa_cmd) return cmd_ufa(ufa_o.f, ufa_o.k, ufa_o.vars, ufa_o.json, false);
        if (*groebner_cmd) return cmd_ufa(gro_o.f, gro_o.k, gro_o.vars, gro_o.json, true);
        if (*dim_cmd) return cmd_dim(dim_o.f, dim_o.k, dim_o.vars, dim_o.json);
        if (*check_dim) {
            return cmd_check_dim(cd_max_deg, cd_trials, seed_opt->count() > 0, cd_seed,
                                 cd_json);
        }
        if (*check_val) return cmd_check_valuation(cv_max, cv_json);
        if (*s1s2) return cmd_s1s2(ss_f, ss_k, ss_json);
        if (*factor_cmd) return cmd_factor(fa_f, fa_json);
        if (*decompose) return cmd_decompose(de_f, de_json);
        if (*csqrt) return cmd_csqrt(cs_re, cs_im, cs_json);
        if (*quad) return cmd_quadroots(q_bre, q_bim, q_cre, q_cim, q_json);
        if (*oddroot) return cmd_oddroot(od_f, od_tol, od_json);
        if (*demo) return cmd_demo_cubic(demo_json);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
