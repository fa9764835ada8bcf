#ifndef ECHELONS_GABRIELOV_HPP
#define ECHELONS_GABRIELOV_HPP

#include "echelons/division.hpp"

namespace echelons {
namespace gabrielov {

/// Variables fixed to (x, y, z), order lex with precedence x > y > z,
/// generators f = 1 (scope 2), g = x(e^z - 1) (scope 2), h = yz - x (scope 3).
struct Context {
    int prec;
    Series f, g, h;
    EchelonPresentation presentation;
};

Context make_context(int prec);

MonomialOrder lex_xyz();

/// q_{i,k} = (i-1)! / (4^{k-1} (i-k)! (i+k-1)! (1/2)^{rising k-1});
/// requires i >= k >= 1.
Rational q(long i, long k);

/// g_k = x^k * sum_{i=k}^{prec-k} q_{i,k} z^i at precision prec
Series g_closed(int k, int prec);

/// g_2, ..., g_kmax built iteratively: g_k is the remainder of dividing
/// S(g_{k-1}, h) = -y g_{k-1} + q_{k-1,k-1} x^{k-1} z^{k-2} h by the growing
/// presentation {f, g, h, g_2, ..., g_{k-1}}.
std::vector<Series> g_family_algorithmic(int kmax, int prec);
Series g_algorithmic(int k, int prec);

struct AbcTriple {
    Series a, b, c;
};

/// Recursion a_k = -y a_{k-1} + x^2/(4(2k-3)(2k-5)) a_{k-2} (same for b, c;
/// c additionally subtracts z^{-1}(a_{k-1} f + b_{k-1} g + c_{k-1} h)),
/// from a_1 = 0, a_2 = x^2, b_1 = 1, b_2 = -y + x/2, c_1 = 0,
/// c_2 = z^{-1} x (e^z - 1). Inputs are over-provisioned internally to absorb
/// the one degree of precision lost per z^{-1} application.
AbcTriple abc(int k, int prec);
std::vector<AbcTriple> abc_family(int kmax, int prec);

/// q(k+1,k+1)/q(k,k); equals 1/(4(2k+1)(2k-1)) exactly
Rational ratio_check(long k);

/// partial sum of e = sum_{k>=kstart} g_k / q_{k,k}
Series e_combination(int kmax, int prec, int kstart = 2);

/// the double sum e(x,z) = sum_{i>=1, j>=0} i!/(i+j)! x^i z^{j+1}
Series e_original(int prec);

struct DivergenceRow {
    int k;
    Rational r;             // r_k = 1/q_{k,k}
    Rational a_ray_coeff;   // coefficient of x^2 y^{k-2} in sum r_k a_k
    Rational b_ray_coeff;   // coefficient of y^{k-1}   in sum r_k b_k
    Rational c_ray_coeff;   // coefficient of x y^{k-2} in sum r_k c_k
    Rational ratio;         // r_{k+1} / r_k
    Rational ratio_formula; // 4(2k+1)(2k-1)
};

struct DivergenceReport {
    std::vector<DivergenceRow> rows;  // k = 2 .. kmax
    /// the ray coefficients grow super-geometrically: every row satisfies
    /// |coeff| = r_k and r_{k+1}/r_k = 4(2k+1)(2k-1) -> infinity
    bool super_geometric;
};

DivergenceReport divergence_report(int kmax, int prec);

}  // namespace gabrielov
}  // namespace echelons

#endif
