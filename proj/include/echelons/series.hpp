#ifndef ECHELONS_SERIES_HPP
#define ECHELONS_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "echelons/rational.hpp"

namespace echelons {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);
Exponent exp_add(const Exponent& a, const Exponent& b);
Exponent exp_sub(const Exponent& a, const Exponent& b);  // throws if negative
bool exp_divides(const Exponent& e, const Exponent& a);  // e <= a componentwise
// zero beyond the first `scope` components
bool exp_within_scope(const Exponent& e, int scope);

struct Term {
    Rational coeff;
    Exponent exp;
};

/// Administrative order for canonical term storage: graded, ties broken
/// lexicographically in natural variable order. Independent of the user's
/// monomial order.
struct AdminLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate power series with exact rational coefficients,
/// truncated at a total-degree precision. The semantic contract is that the
/// series is exact modulo terms of total degree > prec. Immutable after
/// construction.
class Series {
  public:
    using TermMap = std::map<Exponent, Rational, AdminLess>;

    Series(int nvars, int prec) : nvars_(nvars), prec_(prec) {}
    Series(int nvars, int prec, TermMap terms);

    static Series zero(int nvars, int prec) { return Series(nvars, prec); }
    static Series constant(int nvars, int prec, const Rational& c);
    static Series monomial(int nvars, int prec, const Exponent& e, const Rational& c);

    int nvars() const { return nvars_; }
    int prec() const { return prec_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Exponent& e) const;
    /// minimal total degree of a nonzero term; prec for the zero series
    int ord() const;

    /// drop terms above new_prec; the resulting prec is min(prec, new_prec)
    Series truncated(int new_prec) const;

    friend bool operator==(const Series& a, const Series& b);

  private:
    int nvars_;
    int prec_;
    TermMap terms_;
};

/// equality of the truncations of both operands to their common precision
bool equal_at_common_prec(const Series& a, const Series& b);

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series mul(const Series& f, const Series& g);
Series scale(const Series& f, const Rational& c);
Series monomial_mul(const Series& f, const Term& t);
Series divide_by_monomial(const Series& f, const Exponent& e);
/// sum_{k<=prec} x_var^k / k!
Series exp_series(int nvars, int var_index, int prec);

std::vector<std::string> default_var_names(int nvars);

}  // namespace echelons

#endif
