#ifndef ECHELONS_ECHELON_HPP
#define ECHELONS_ECHELON_HPP

#include <set>
#include <vector>

#include "echelons/order.hpp"
#include "echelons/series.hpp"

namespace echelons {

/// Generator f_i of an echelon together with its assigned scope s_i:
/// admissible multipliers of f_i live in K[[x_1,...,x_{s_i}]].
struct ScopedGenerator {
    Series series;
    int scope;
};

struct EchelonPresentation {
    int nvars;
    std::vector<ScopedGenerator> generators;
    MonomialOrder order;
};

void validate(const EchelonPresentation& p);

/// One slice of the region A of initial exponents: all exponents
/// base + (N^scope x 0^(n-scope)) not claimed by an earlier slice.
/// `owner` is the index of the generator in the original presentation.
struct Slice {
    Exponent base;
    int scope;
    int owner;
};

constexpr int kComplement = -1;

struct RegionPartition {
    int nvars;
    std::vector<Slice> slices;

    /// index of the unique slice containing `a`, or kComplement for B
    int classify(const Exponent& a) const;
};

/// Generators are stably ordered by decreasing scope before slicing, so that
/// A is exhausted first by the larger regions; slice bases are the initial
/// exponents under p.order.
RegionPartition build_partition(const EchelonPresentation& p);

/// All exponents of total degree <= d in the union of the scope-translates of
/// the basis elements' initial exponents.
std::set<Exponent> initial_region_to_degree(const std::vector<ScopedGenerator>& basis,
                                            const MonomialOrder& order, int nvars, int d);

/// enumerate all exponents of total degree <= d in n variables
std::vector<Exponent> exponents_up_to_degree(int nvars, int d);

}  // namespace echelons

#endif
