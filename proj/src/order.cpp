#include "echelons/order.hpp"

namespace echelons {

Ordering MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    if (a.size() != b.size() || a.size() != precedence.size())
        throw dimension_error("exponent length mismatch in order comparison");
    if (kind == OrderKind::grlex) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
    }
    for (int idx : precedence) {
        if (a[idx] != b[idx])
            return a[idx] < b[idx] ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

std::optional<Term> initial_term(const Series& f, const MonomialOrder& o) {
    std::optional<Term> best;
    for (auto& [e, c] : f.terms()) {
        if (!best || o.less(e, best->exp)) best = Term{c, e};
    }
    return best;
}

}  // namespace echelons
