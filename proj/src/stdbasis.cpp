#include "echelons/stdbasis.hpp"

#include <algorithm>
#include <cassert>

namespace echelons {

MinimalRelation minimal_relation(const Term& ti, const Term& tj) {
    if (ti.coeff.is_zero() || tj.coeff.is_zero())
        throw degenerate_input_error("minimal relation of a zero term");
    Exponent gamma(ti.exp.size());
    for (std::size_t k = 0; k < gamma.size(); ++k)
        gamma[k] = std::max(ti.exp[k], tj.exp[k]);
    Term mi{-(ti.coeff.inv()), exp_sub(gamma, ti.exp)};
    Term mj{tj.coeff.inv(), exp_sub(gamma, tj.exp)};
    return {std::move(mi), std::move(mj)};
}

std::optional<SCombination> s_combination(const std::vector<ScopedGenerator>& F,
                                          const MonomialOrder& order, int i, int j) {
    if (i == j) throw degenerate_input_error("S-combination of a generator with itself");
    const ScopedGenerator& fi = F[i];
    const ScopedGenerator& fj = F[j];
    MinimalRelation rel = minimal_relation(*initial_term(fi.series, order),
                                           *initial_term(fj.series, order));
    if (!exp_within_scope(rel.mi.exp, fi.scope) || !exp_within_scope(rel.mj.exp, fj.scope))
        return std::nullopt;
    Series s = add(monomial_mul(fi.series, rel.mi), monomial_mul(fj.series, rel.mj));
    return SCombination{std::move(s), std::min(fi.scope, fj.scope)};
}

namespace {

bool covers(const ScopedGenerator& g, const MonomialOrder& order, const Exponent& target) {
    auto in = initial_term(g.series, order);
    return in && exp_divides(in->exp, target) &&
           exp_within_scope(exp_sub(target, in->exp), g.scope);
}

std::optional<int> covering_index(const std::vector<ScopedGenerator>& F,
                                  const MonomialOrder& order, const Exponent& target) {
    for (std::size_t i = 0; i < F.size(); ++i)
        if (covers(F[i], order, target)) return static_cast<int>(i);
    return std::nullopt;
}

EnlargementState enlarge_impl(const EchelonPresentation& p, const EnlargeTarget& target,
                              int max_rounds, bool reduce) {
    validate(p);
    if (p.generators.empty())
        throw degenerate_input_error("cannot enlarge an empty presentation");

    EnlargementState st{p.generators, static_cast<int>(p.generators.size()), 0, 0,
                        EnlargeStatus::Exhausted, std::nullopt, {}};

    while (true) {
        if (target.monomial) {
            st.covering_index = covering_index(st.F, p.order, *target.monomial);
            if (st.covering_index) {
                st.status = EnlargeStatus::Covered;
                return st;
            }
        }
        if (st.ell1 >= st.ell) {
            st.status = EnlargeStatus::Exhausted;
            return st;
        }
        if (st.rounds >= max_rounds) {
            st.status = EnlargeStatus::MaxRounds;
            return st;
        }
        ++st.rounds;
        int round = st.rounds;

        // P = { {i,j} : i < j <= ell, j > ell1 }, visited in (i, j) order
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < st.ell; ++i)
            for (int j = std::max(i + 1, st.ell1); j < st.ell; ++j)
                pairs.emplace_back(i, j);
        st.ell1 = st.ell;

        for (auto [i, j] : pairs) {
            TraceEvent ev{round, i, j, TraceAction::Inadmissible};
            auto sc = s_combination(st.F, p.order, i, j);
            if (!sc) {
                st.trace.push_back(std::move(ev));
                continue;
            }
            ev.raw = sc->series;
            Series candidate = sc->series;
            int scope = sc->scope;
            if (reduce && !candidate.is_zero()) {
                EchelonPresentation cur{p.nvars, st.F, p.order};
                DivisionResult dr = echelon_divide(candidate, cur, scope);
                candidate = dr.remainder;
                scope = dr.remainder_scope;
                ev.reduced = candidate;
            }
            if (candidate.is_zero()) {
                ev.action = TraceAction::ZeroSkip;
                st.trace.push_back(std::move(ev));
                continue;
            }
            Exponent in_exp = initial_term(candidate, p.order)->exp;
            if (target.degree_cap && total_degree(in_exp) > *target.degree_cap) {
                ev.action = TraceAction::DegreeSkip;
                ev.initial_exp = in_exp;
                st.trace.push_back(std::move(ev));
                continue;
            }
            // line 11 dedup: skip unless absent or arriving with strictly
            // larger scope than every equal element already present
            bool present = false;
            int max_scope = -1;
            for (auto& g : st.F) {
                if (equal_at_common_prec(g.series, candidate)) {
                    present = true;
                    max_scope = std::max(max_scope, g.scope);
                }
            }
            if (present && max_scope >= scope) {
                ev.action = TraceAction::DedupSkip;
                st.trace.push_back(std::move(ev));
                continue;
            }
            // strict ascent: the new initial monomial exceeds in(m_i f_i)
            Exponent parent = exp_add(
                minimal_relation(*initial_term(st.F[i].series, p.order),
                                 *initial_term(st.F[j].series, p.order))
                    .mi.exp,
                initial_term(st.F[i].series, p.order)->exp);
            assert(p.order.less(parent, in_exp));
            (void)parent;

            st.F.push_back(ScopedGenerator{candidate, scope});
            ++st.ell;
            ev.action = present ? TraceAction::InsertScopeUpgrade : TraceAction::Insert;
            ev.new_index = st.ell - 1;
            ev.new_scope = scope;
            ev.initial_exp = in_exp;
            st.trace.push_back(std::move(ev));
        }
    }
}

}  // namespace

EnlargementState enlarge(const EchelonPresentation& p, const EnlargeTarget& target,
                         int max_rounds) {
    return enlarge_impl(p, target, max_rounds, false);
}

EnlargementState enlarge_reduced(const EchelonPresentation& p,
                                 const EnlargeTarget& target, int max_rounds) {
    return enlarge_impl(p, target, max_rounds, true);
}

MembershipResult membership_mod_degree(const Series& f, const EchelonPresentation& p,
                                       int d, int max_rounds) {
    if (d > f.prec())
        throw precision_error("membership degree exceeds input precision");
    EnlargeTarget target{std::nullopt, d};
    EnlargementState st = enlarge_reduced(p, target, max_rounds);
    EchelonPresentation enlarged{p.nvars, st.F, p.order};
    DivisionResult dr = echelon_divide(f, enlarged);
    MembershipVerdict verdict;
    if (st.status == EnlargeStatus::MaxRounds) {
        verdict = MembershipVerdict::Indeterminate;
    } else {
        bool member = dr.remainder.truncated(d).is_zero();
        verdict = member ? MembershipVerdict::Member : MembershipVerdict::NonMember;
    }
    return MembershipResult{verdict, std::move(dr), std::move(st)};
}

}  // namespace echelons
