#ifndef ECHELONS_STDBASIS_HPP
#define ECHELONS_STDBASIS_HPP

#include <optional>

#include "echelons/division.hpp"

namespace echelons {

/// Canonical minimal monomial relation (m_i, m_j) between two initial terms:
/// m_i * e_i * x^{alpha_i} + m_j * e_j * x^{alpha_j} = 0 exactly. With
/// gamma = componentwise max of the exponents, m_i = -(1/e_i) x^{gamma-alpha_i}
/// and m_j = (1/e_j) x^{gamma-alpha_j}.
struct MinimalRelation {
    Term mi;
    Term mj;
};

MinimalRelation minimal_relation(const Term& ti, const Term& tj);

struct SCombination {
    Series series;
    int scope;  // min(s_i, s_j)
};

/// S(f_i, f_j) = m_i f_i + m_j f_j with scope min(s_i, s_j); absent when the
/// pair violates the scope condition (m_i must use only the first s_i
/// variables, m_j only the first s_j).
std::optional<SCombination> s_combination(const std::vector<ScopedGenerator>& F,
                                          const MonomialOrder& order, int i, int j);

enum class EnlargeStatus {
    Covered,    // target monomial covered by some K[[x_1..x_s]] * in(f)
    Exhausted,  // no new pairs produced anything
    MaxRounds,  // round budget hit; result is indeterminate
};

enum class TraceAction {
    Inadmissible,       // scope condition violated, pair discarded
    ZeroSkip,           // S-combination (or its remainder) vanished at working precision
    DedupSkip,          // element already present with scope >= min(s_i, s_j)
    DegreeSkip,         // candidate initial monomial exceeds the degree cap
    Insert,             // new element appended
    InsertScopeUpgrade, // element equal to an existing one but with larger scope
};

struct TraceEvent {
    int round;
    int i, j;  // 0-based pair indices
    TraceAction action;
    int new_index = -1;   // index of the inserted element, when any
    int new_scope = -1;
    std::optional<Exponent> initial_exp;      // of the inserted element
    std::optional<Series> raw;                // S-combination before reduction
    std::optional<Series> reduced;            // remainder, in the reduced variant
};

struct EnlargementState {
    std::vector<ScopedGenerator> F;
    int ell;   // current number of elements (pseudo-code l)
    int ell1;  // elements already fully paired (pseudo-code l_1)
    int rounds;
    EnlargeStatus status;
    std::optional<int> covering_index;  // element covering the target monomial
    std::vector<TraceEvent> trace;
};

struct EnlargeTarget {
    std::optional<Exponent> monomial;
    std::optional<int> degree_cap;
};

/// Pseudo-code enlargement loop, without reduction of the S-combinations.
/// Pairs within a round are visited in lexicographic (i, j) order.
EnlargementState enlarge(const EchelonPresentation& p, const EnlargeTarget& target,
                         int max_rounds);

/// Same loop, but every admissible S-combination is divided by the current F
/// before insertion; only a nonzero remainder is inserted, carrying scope
/// min(pair scope, scopes of the generators with nonzero quotient).
EnlargementState enlarge_reduced(const EchelonPresentation& p,
                                 const EnlargeTarget& target, int max_rounds);

enum class MembershipVerdict { Member, NonMember, Indeterminate };

struct MembershipResult {
    MembershipVerdict verdict;
    DivisionResult witness;
    EnlargementState basis_state;
};

/// Degree-bounded membership: enlarge (reduced) with degree cap d, then
/// divide; member iff the remainder vanishes modulo degree > d.
MembershipResult membership_mod_degree(const Series& f, const EchelonPresentation& p,
                                       int d, int max_rounds = 10000);

}  // namespace echelons

#endif
