#ifndef ECHELONS_DIVISION_HPP
#define ECHELONS_DIVISION_HPP

#include <optional>

#include "echelons/echelon.hpp"

namespace echelons {

/// Result of an echelon power series division f = sum a_i f_i + b.
/// Quotient a_i uses only the first s_i variables and supp(a_i * x^{alpha_i})
/// lies in the slice of generator i; supp(b) lies in the complement B.
struct DivisionResult {
    std::vector<Series> quotients;  // in original generator order
    Series remainder;
    /// min{ in(a_i) * in(f_i) } over nonzero quotients; absent when all vanish
    std::optional<Exponent> min_witness;
    int remainder_scope;
};

/// Divide f by the presentation, processing terms in increasing monomial
/// order: the least unprocessed term is either rewritten through the slice
/// that owns its exponent or moved to the remainder. Terminates at finite
/// precision for any monomial order since each step strictly increases the
/// least unprocessed monomial within the finite set of exponents of degree
/// <= precision.
DivisionResult echelon_divide(const Series& f, const EchelonPresentation& p,
                              std::optional<int> f_scope = std::nullopt);

/// condition (*): in(f - b) = min{ in(a_i) * in(f_i) } over nonzero
/// quotients; vacuously true when all quotients vanish.
bool verify_star(const DivisionResult& result, const Series& f,
                 const EchelonPresentation& p);

}  // namespace echelons

#endif
