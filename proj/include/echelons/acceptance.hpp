#ifndef ECHELONS_ACCEPTANCE_HPP
#define ECHELONS_ACCEPTANCE_HPP

#include <ostream>

namespace echelons {

/// Runs the full acceptance suite, printing one pass/fail line per
/// criterion. Returns the number of failed criteria.
int run_acceptance(std::ostream& out);

}  // namespace echelons

#endif
