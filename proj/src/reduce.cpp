#include "quatnorm/reduce.hpp"

#include <random>

#include "quatnorm/errors.hpp"

namespace quatnorm {

std::optional<DivisionMatch> find_division(const Word& w, const Basis& basis) {
    for (std::size_t pos = 0; pos < w.degree(); ++pos) {
        for (std::size_t idx : basis.rules_starting_with(w.at(pos))) {
            const Word& lw = basis[idx].lead;
            if (w.matches_at(lw, pos))
                return DivisionMatch{idx, w.prefix(pos),
                                     w.suffix(w.degree() - pos - lw.degree()), w};
        }
    }
    return std::nullopt;
}

std::vector<DivisionMatch> find_all_divisions(const Word& w, const Basis& basis) {
    std::vector<DivisionMatch> out;
    for (std::size_t pos = 0; pos < w.degree(); ++pos)
        for (std::size_t idx : basis.rules_starting_with(w.at(pos))) {
            const Word& lw = basis[idx].lead;
            if (w.matches_at(lw, pos))
                out.push_back(DivisionMatch{idx, w.prefix(pos),
                                            w.suffix(w.degree() - pos - lw.degree()), w});
        }
    return out;
}

Polynomial reduce_step(const Polynomial& p, const DivisionMatch& m, const Basis& basis) {
    const Term& lt = p.leading_term();
    const BasisElement& rule = basis[m.rule_index];
    if (!(m.left * rule.lead * m.right == lt.word)) throw MatchMismatch();
    Rat c = lt.coeff / rule.lead_coeff;
    return p - rule.poly.framed(m.left, m.right).scaled(c);
}

namespace {

std::pair<Polynomial, ReductionTrace> run_reduction(const Polynomial& p, const Basis& basis,
                                                    const ReductionStrategy& strategy) {
    if (static_cast<int>(p.degree()) > basis.degree_bound())
        throw DegreeGuard(static_cast<int>(p.degree()), basis.degree_bound());

    std::mt19937_64 rng(strategy.seed);
    const bool random = strategy.kind == ReductionStrategy::Kind::SeededRandom;

    ReductionTrace trace;
    std::vector<Term> done; // irreducible terms, produced in descending order
    Polynomial work = p;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        std::optional<DivisionMatch> m;
        if (random) {
            auto all = find_all_divisions(lt.word, basis);
            if (!all.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
                m = all[pick(rng)];
            }
        } else {
            m = find_division(lt.word, basis);
        }
        if (!m) {
            done.push_back(lt);
            work = work.tail();
            continue;
        }
        const BasisElement& rule = basis[m->rule_index];
        Rat c = lt.coeff / rule.lead_coeff;
        trace.steps.push_back(ReductionTrace::Step{m->rule_index, m->left, m->right, c});
        work = work - rule.poly.framed(m->left, m->right).scaled(c);
    }
    Polynomial final = Polynomial::from_terms(std::move(done));
    trace.final = final;
    return {std::move(final), std::move(trace)};
}

} // namespace

std::pair<Polynomial, ReductionTrace> normal_form(const Polynomial& p, const Basis& basis,
                                                  const ReductionStrategy& strategy) {
    return run_reduction(p, basis, strategy);
}

std::pair<bool, ReductionTrace> reduces_to_zero(const Polynomial& p, const Basis& basis,
                                                const ReductionStrategy& strategy) {
    auto [nf, trace] = run_reduction(p, basis, strategy);
    return {nf.is_zero(), std::move(trace)};
}

std::vector<ReducednessViolation> is_reduced_basis(const Basis& basis) {
    std::vector<ReducednessViolation> out;
    for (std::size_t lead_owner = 0; lead_owner < basis.size(); ++lead_owner) {
        const Word& lw = basis[lead_owner].lead;
        for (std::size_t word_owner = 0; word_owner < basis.size(); ++word_owner) {
            if (word_owner == lead_owner) continue;
            for (const Term& t : basis[word_owner].poly.terms())
                if (t.word.contains(lw)) {
                    out.push_back(ReducednessViolation{lead_owner, word_owner, t.word});
                    break; // one record per (lead, element) pair
                }
        }
    }
    return out;
}

} // namespace quatnorm
