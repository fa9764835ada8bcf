#ifndef ECHELONS_ORACLE_HPP
#define ECHELONS_ORACLE_HPP

#include <map>
#include <optional>

#include "echelons/echelon.hpp"

namespace echelons {

struct OracleSolution {
    bool feasible;
    std::vector<Series> quotients;  // one per generator, present when feasible
};

/// Brute-force membership certification: solve sum a_i f_i = f coefficientwise
/// modulo degree > d, with a_i supported on the first s_i variables and of
/// degree <= d, by exact Gaussian elimination over the rationals.
OracleSolution oracle_membership(const Series& f, const EchelonPresentation& p, int d);

struct RelationOrderReport {
    /// minimal order over a kernel basis of scope-respecting truncated
    /// relations, measured at the residual's leading position (see
    /// oracle_relation_order); absent when the kernel is trivial
    std::optional<int> min_order;
    /// heuristic threshold d - max_i deg(in(f_i)) + 1 separating truncation
    /// artifacts from genuine relations
    int artifact_threshold;
    std::size_t kernel_dim;
    /// census: order value -> number of kernel basis vectors with that order
    std::map<int, std::size_t> census;
};

/// Kernel computation for sum a_i f_i = 0 (mod degree > d) plus a
/// minimal-valuation scan over the kernel basis.
RelationOrderReport oracle_relation_order(const EchelonPresentation& p, int d);

}  // namespace echelons

#endif
