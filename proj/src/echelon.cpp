#include "echelons/echelon.hpp"

#include <algorithm>

namespace echelons {

void validate(const EchelonPresentation& p) {
    if (static_cast<int>(p.order.precedence.size()) != p.nvars)
        throw dimension_error("order precedence does not match variable count");
    if (p.generators.empty())
        throw degenerate_input_error("empty generator list");
    for (auto& g : p.generators) {
        if (g.series.nvars() != p.nvars)
            throw dimension_error("generator variable count mismatch");
        if (g.scope < 0 || g.scope > p.nvars)
            throw degenerate_input_error("generator scope out of range");
        if (g.series.is_zero())
            throw degenerate_input_error("zero generator in echelon presentation");
    }
}

int RegionPartition::classify(const Exponent& a) const {
    for (std::size_t i = 0; i < slices.size(); ++i) {
        const Slice& s = slices[i];
        if (!exp_divides(s.base, a)) continue;
        if (exp_within_scope(exp_sub(a, s.base), s.scope)) return static_cast<int>(i);
    }
    return kComplement;
}

RegionPartition build_partition(const EchelonPresentation& p) {
    validate(p);
    std::vector<int> idx(p.generators.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return p.generators[a].scope > p.generators[b].scope;
    });
    RegionPartition rp{p.nvars, {}};
    for (int i : idx) {
        auto in = initial_term(p.generators[i].series, p.order);
        rp.slices.push_back(Slice{in->exp, p.generators[i].scope, i});
    }
    return rp;
}

std::vector<Exponent> exponents_up_to_degree(int nvars, int d) {
    std::vector<Exponent> out;
    Exponent cur(nvars, 0);
    // lexicographic enumeration by recursion over positions
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    return out;
}

std::set<Exponent> initial_region_to_degree(const std::vector<ScopedGenerator>& basis,
                                            const MonomialOrder& order, int nvars, int d) {
    std::set<Exponent> region;
    std::vector<std::pair<Exponent, int>> translates;
    for (auto& g : basis) {
        auto in = initial_term(g.series, order);
        if (!in) throw degenerate_input_error("zero basis element");
        translates.emplace_back(in->exp, g.scope);
    }
    for (auto& e : exponents_up_to_degree(nvars, d)) {
        for (auto& [base, scope] : translates) {
            if (exp_divides(base, e) && exp_within_scope(exp_sub(e, base), scope)) {
                region.insert(e);
                break;
            }
        }
    }
    return region;
}

}  // namespace echelons
