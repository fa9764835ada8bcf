#include "echelons/division.hpp"

#include <algorithm>

namespace echelons {

namespace {

struct OrderLess {
    const MonomialOrder* order;
    bool operator()(const Exponent& a, const Exponent& b) const {
        return order->less(a, b);
    }
};

}  // namespace

DivisionResult echelon_divide(const Series& f, const EchelonPresentation& p,
                              std::optional<int> f_scope) {
    validate(p);
    if (f.nvars() != p.nvars)
        throw dimension_error("dividend variable count mismatch");
    RegionPartition rp = build_partition(p);

    int result_prec = f.prec();
    for (auto& g : p.generators) result_prec = std::min(result_prec, g.series.prec());

    // initial terms and coefficients of the generators
    std::vector<Term> ins;
    ins.reserve(p.generators.size());
    for (auto& g : p.generators) ins.push_back(*initial_term(g.series, p.order));

    // The working series runs at the dividend's own precision: a generator
    // whose initial monomial exceeds its order in degree (possible under a
    // non-graded order) rewrites high-degree terms into lower-degree ones, so
    // truncating the work set to result_prec upfront would contaminate the
    // top-degree output coefficients. The precision only drops when a rewrite
    // product is known to fewer degrees than the current working precision.
    int work_prec = f.prec();
    std::map<Exponent, Rational, OrderLess> work{OrderLess{&p.order}};
    for (auto& [e, c] : f.terms())
        if (total_degree(e) <= work_prec) work.emplace(e, c);

    std::vector<Series::TermMap> quot(p.generators.size());
    Series::TermMap rem;

    while (!work.empty()) {
        auto [texp, tcoeff] = *work.begin();
        work.erase(work.begin());
        if (tcoeff.is_zero()) continue;
        int slice = rp.classify(texp);
        if (slice == kComplement) {
            rem.emplace(texp, tcoeff);
            continue;
        }
        int i = rp.slices[slice].owner;
        Rational qc = tcoeff / ins[i].coeff;
        Exponent qe = exp_sub(texp, ins[i].exp);
        quot[i].emplace(qe, qc);
        int product_prec = p.generators[i].series.prec() + total_degree(qe);
        if (product_prec < work_prec) {
            work_prec = product_prec;
            for (auto it = work.begin(); it != work.end();)
                it = total_degree(it->first) > work_prec ? work.erase(it) : std::next(it);
        }
        // subtract qc * x^qe * f_i from the working series; the initial term
        // exactly cancels the erased one, the rest are strictly larger
        for (auto& [ge, gc] : p.generators[i].series.terms()) {
            if (ge == ins[i].exp) continue;
            Exponent e = exp_add(ge, qe);
            if (total_degree(e) > work_prec) continue;
            Rational delta = qc * gc;
            auto [it, fresh] = work.emplace(e, -delta);
            if (!fresh) {
                it->second -= delta;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }

    DivisionResult res{{}, Series::zero(f.nvars(), result_prec), std::nullopt, 0};
    for (std::size_t i = 0; i < quot.size(); ++i) {
        int qprec = result_prec - total_degree(ins[i].exp);
        res.quotients.emplace_back(f.nvars(), qprec, std::move(quot[i]));
    }
    res.remainder = Series(f.nvars(), result_prec, std::move(rem));

    std::optional<Exponent> witness;
    int rscope = f_scope ? *f_scope : p.nvars;
    bool any = f_scope.has_value();
    for (std::size_t i = 0; i < res.quotients.size(); ++i) {
        if (res.quotients[i].is_zero()) continue;
        if (!any || p.generators[i].scope < rscope) rscope = p.generators[i].scope;
        any = true;
        Exponent w = exp_add(initial_term(res.quotients[i], p.order)->exp, ins[i].exp);
        if (!witness || p.order.less(w, *witness)) witness = std::move(w);
    }
    res.min_witness = std::move(witness);
    res.remainder_scope = rscope;
    return res;
}

bool verify_star(const DivisionResult& result, const Series& f,
                 const EchelonPresentation& p) {
    if (!result.min_witness) {
        bool all_zero = true;
        for (auto& q : result.quotients) all_zero = all_zero && q.is_zero();
        return all_zero;
    }
    Series diff = sub(f, result.remainder);
    auto in = initial_term(diff, p.order);
    return in && in->exp == *result.min_witness;
}

}  // namespace echelons
