#ifndef ECHELONS_ORDER_HPP
#define ECHELONS_ORDER_HPP

#include <optional>
#include <vector>

#include "echelons/series.hpp"

namespace echelons {

enum class OrderKind { lex, grlex };
enum class Ordering { Less, Equal, Greater };

/// Monomial order on exponent vectors. `precedence` is a permutation of
/// variable indices, most significant first. Initial monomials are taken as
/// the MINIMUM under the order throughout the codebase.
struct MonomialOrder {
    OrderKind kind;
    std::vector<int> precedence;

    static MonomialOrder lex(std::vector<int> precedence) {
        return {OrderKind::lex, std::move(precedence)};
    }
    static MonomialOrder grlex(std::vector<int> precedence) {
        return {OrderKind::grlex, std::move(precedence)};
    }

    Ordering compare(const Exponent& a, const Exponent& b) const;
    bool less(const Exponent& a, const Exponent& b) const {
        return compare(a, b) == Ordering::Less;
    }

    /// condition (#): no infinite bounded strictly increasing monomial
    /// sequences. Classified by kind: graded orders satisfy it, lex does not
    /// (the answer for lex is conservative even in one variable).
    bool satisfies_sharp() const { return kind == OrderKind::grlex; }
};

std::optional<Term> initial_term(const Series& f, const MonomialOrder& o);

}  // namespace echelons

#endif
