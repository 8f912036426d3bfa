#include "ufa/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ufa {

namespace {

MultiPoly make_monic(const MultiPoly& p, const MonomialOrder& ord) {
    const Term& lt = p.leading_term(ord);
    return p.scalar_mul(lt.coeff.inverse());
}

// One full reduction of p modulo the (monic) reducers. Deterministic: the
// first reducer whose leading monomial divides the current leading term is
// used at each step.
MultiPoly reduce_full(MultiPoly p, const std::vector<MultiPoly>& reducers,
                      const std::vector<Monomial>& leading, const MonomialOrder& ord) {
    const VarTablePtr table = p.table();
    std::vector<Term> tail;
    while (!p.is_zero()) {
        const Term lt = p.leading_term(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            if (leading[i].divides(lt.mono)) {
                p = p - reducers[i].times_term(lt.mono / leading[i], lt.coeff);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            tail.push_back(lt);
            p = p - MultiPoly::from_terms(table, {lt});
        }
    }
    return MultiPoly::from_terms(table, std::move(tail));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g,
                       const Monomial& lmf, const Monomial& lmg,
                       const MonomialOrder& ord) {
    Monomial l = Monomial::lcm(lmf, lmg);
    const Rational& cf = f.leading_term(ord).coeff;
    const Rational& cg = g.leading_term(ord).coeff;
    return f.times_term(l / lmf, cf.inverse()) - g.times_term(l / lmg, cg.inverse());
}

}  // namespace

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<MultiPoly> elements)
    : order_(std::move(order)), elements_(std::move(elements)) {
    leading_.reserve(elements_.size());
    for (const auto& e : elements_) {
        leading_.push_back(e.leading_term(order_).mono);
    }
}

bool GroebnerBasis::is_unit_ideal() const {
    return elements_.size() == 1 && elements_[0].is_one();
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& generators,
                         const MonomialOrder& order, const BuchbergerOptions& opts) {
    std::vector<MultiPoly> basis;
    std::vector<Monomial> leading;
    for (const auto& g : generators) {
        if (!same_table(g.table(), order.table())) {
            throw std::invalid_argument("generator over a different variable table");
        }
        if (g.is_zero()) continue;
        MultiPoly m = make_monic(g, order);
        basis.push_back(m);
        leading.push_back(m.leading_term(order).mono);
    }

    // Pending pair queue keyed by (lcm total degree, i, j), smallest first.
    using Key = std::tuple<unsigned, std::size_t, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            unsigned d = Monomial::lcm(leading[i], leading[j]).total_degree();
            pairs.emplace(d, i, j);
            pending.emplace(i, j);
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        auto [d, i, j] = pairs.top();
        pairs.pop();
        pending.erase({i, j});
        if (Monomial::coprime(leading[i], leading[j])) continue;
        if (opts.use_chain_criterion) {
            // Skip when some other element divides the pair's lcm and both
            // associated pairs were already handled.
            Monomial l = Monomial::lcm(leading[i], leading[j]);
            bool skip = false;
            for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == i || k == j || !leading[k].divides(l)) continue;
                auto p1 = std::minmax(i, k);
                auto p2 = std::minmax(j, k);
                if (!pending.count({p1.first, p1.second}) &&
                    !pending.count({p2.first, p2.second})) {
                    skip = true;
                }
            }
            if (skip) continue;
        }
        MultiPoly s = s_polynomial(basis[i], basis[j], leading[i], leading[j], order);
        MultiPoly r = reduce_full(std::move(s), basis, leading, order);
        if (!r.is_zero()) {
            MultiPoly m = make_monic(r, order);
            basis.push_back(m);
            leading.push_back(m.leading_term(order).mono);
            push_pairs_for(basis.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another survivor's.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (leading[j].divides(leading[i]) &&
                !(leading[i] == leading[j] && j > i)) {
                keep[i] = false;
            }
        }
    }
    std::vector<MultiPoly> minimal;
    std::vector<Monomial> minimal_lm;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (keep[i]) {
            minimal.push_back(basis[i]);
            minimal_lm.push_back(leading[i]);
        }
    }

    // Inter-reduce tails. Leading monomials are pairwise non-divisible, so
    // one pass leaves every element fully reduced against the others.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        std::vector<Monomial> others_lm;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            others_lm.push_back(minimal_lm[j]);
        }
        minimal[i] = reduce_full(minimal[i], others, others_lm, order);
    }

    std::vector<std::size_t> perm(minimal.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return order.greater(minimal_lm[a], minimal_lm[b]);
    });
    std::vector<MultiPoly> sorted;
    sorted.reserve(minimal.size());
    for (std::size_t i : perm) sorted.push_back(std::move(minimal[i]));

    return GroebnerBasis(order, std::move(sorted));
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
    if (!same_table(p.table(), gb.table())) {
        throw std::invalid_argument("polynomial over a different variable table");
    }
    if (gb.empty()) return p;
    return reduce_full(p, gb.elements(), gb.leading_monomials(), gb.order());
}

std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb,
                                                        std::span<const std::size_t> vars) {
    const std::size_t nvars = gb.table()->size();

    // Leading monomials supported on the selected variables; others cannot
    // divide a monomial supported there.
    std::vector<Monomial> lms;
    for (const auto& lm : gb.leading_monomials()) {
        if (lm.supported_on(vars)) lms.push_back(lm);
    }
    auto divisible = [&](const Monomial& m) {
        for (const auto& lm : lms) {
            if (lm.divides(m)) return true;
        }
        return false;
    };
    for (const auto& lm : lms) {
        if (lm.is_one()) return std::vector<Monomial>{};  // zero ring
    }

    // Finiteness requires a pure power of every selected variable among the
    // leading monomials; the minimal such exponent bounds the search box.
    std::vector<unsigned> bound(vars.size(), 0);
    for (std::size_t k = 0; k < vars.size(); ++k) {
        bool found = false;
        for (const auto& lm : lms) {
            unsigned e = lm.exponent(vars[k]);
            if (e > 0 && lm.total_degree() == e) {
                if (!found || e < bound[k]) bound[k] = e;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }

    // Odometer sweep of the exponent box [0, bound) per selected variable.
    std::vector<Monomial> out;
    std::vector<unsigned> exps(nvars, 0);
    while (true) {
        Monomial m{std::vector<unsigned>(exps)};
        if (!divisible(m)) out.push_back(std::move(m));
        std::size_t k = 0;
        while (k < vars.size()) {
            if (++exps[vars[k]] < bound[k]) break;
            exps[vars[k]] = 0;
            ++k;
        }
        if (k == vars.size()) break;
    }

    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return gb.order().less(a, b);
    });
    return out;
}

std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb,
                                                        std::optional<Block> block) {
    std::vector<std::size_t> vars;
    if (block) {
        vars = gb.table()->block_indices(*block);
    } else {
        vars.resize(gb.table()->size());
        for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
    }
    return standard_monomials(gb, std::span<const std::size_t>(vars));
}

bool leading_monomials_within(const GroebnerBasis& gb, std::span<const std::size_t> vars) {
    for (const auto& lm : gb.leading_monomials()) {
        if (!lm.supported_on(vars)) return false;
    }
    return true;
}

}  // namespace ufa
