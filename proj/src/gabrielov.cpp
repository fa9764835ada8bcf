#include "echelons/gabrielov.hpp"

#include <algorithm>

namespace echelons {
namespace gabrielov {

MonomialOrder lex_xyz() { return MonomialOrder::lex({0, 1, 2}); }

Context make_context(int prec) {
    Series f = Series::constant(3, prec, Rational(1));
    Series em1 = sub(exp_series(3, 2, prec - 1), Series::constant(3, prec - 1, Rational(1)));
    Series g = monomial_mul(em1, Term{Rational(1), {1, 0, 0}});
    Series::TermMap hm;
    hm.emplace(Exponent{0, 1, 1}, Rational(1));
    hm.emplace(Exponent{1, 0, 0}, Rational(-1));
    Series h(3, prec, std::move(hm));
    EchelonPresentation p{3, {{f, 2}, {g, 2}, {h, 3}}, lex_xyz()};
    return Context{prec, std::move(f), std::move(g), std::move(h), std::move(p)};
}

Rational q(long i, long k) {
    if (k < 1 || i < k) throw error("q(i,k) requires i >= k >= 1");
    // rising factorial (1/2)(1/2+1)...(1/2+k-2), empty product for k = 1
    Rational rising(1);
    for (long t = 0; t <= k - 2; ++t) rising *= Rational(2 * t + 1, 2);
    Rational four_pow(1);
    for (long t = 0; t < k - 1; ++t) four_pow *= Rational(4);
    return factorial(i - 1) / (four_pow * factorial(i - k) * factorial(i + k - 1) * rising);
}

Series g_closed(int k, int prec) {
    if (k < 1) throw error("g_closed requires k >= 1");
    Series::TermMap m;
    for (int i = k; i + k <= prec; ++i)
        m.emplace(Exponent{k, 0, i}, q(i, k));
    return Series(3, prec, std::move(m));
}

std::vector<Series> g_family_algorithmic(int kmax, int prec) {
    if (kmax < 2) throw error("g_family_algorithmic requires kmax >= 2");
    if (prec < 2 * kmax)
        throw precision_error("precision too small to represent x^k z^k");
    Context ctx = make_context(prec);
    std::vector<ScopedGenerator> F{{ctx.f, 2}, {ctx.g, 2}, {ctx.h, 3}};
    std::vector<Series> gs;  // g_2, ..., g_kmax
    Series prev = ctx.g;     // g_1 = g
    for (int k = 2; k <= kmax; ++k) {
        Rational lead = initial_term(prev, lex_xyz())->coeff;  // q_{k-1,k-1}
        Series s = add(monomial_mul(prev, Term{Rational(-1), {0, 1, 0}}),
                       monomial_mul(ctx.h, Term{lead, {k - 1, 0, k - 2}}));
        EchelonPresentation p{3, F, lex_xyz()};
        Series gk = echelon_divide(s, p).remainder;
        F.push_back(ScopedGenerator{gk, 2});
        gs.push_back(gk);
        prev = std::move(gk);
    }
    return gs;
}

Series g_algorithmic(int k, int prec) {
    return g_family_algorithmic(k, prec).back();
}

std::vector<AbcTriple> abc_family(int kmax, int prec) {
    if (kmax < 1) throw error("abc requires k >= 1");
    int iprec = prec + kmax;  // one degree of z^{-1} loss per step
    Context ctx = make_context(iprec);
    Exponent zexp{0, 0, 1};

    std::vector<AbcTriple> fam;
    fam.push_back(AbcTriple{Series::zero(3, iprec), Series::constant(3, iprec, Rational(1)),
                            Series::zero(3, iprec)});
    if (kmax >= 2) {
        Series a2 = Series::monomial(3, iprec, {2, 0, 0}, Rational(1));
        Series::TermMap b2m;
        b2m.emplace(Exponent{0, 1, 0}, Rational(-1));
        b2m.emplace(Exponent{1, 0, 0}, Rational(1, 2));
        Series b2(3, iprec, std::move(b2m));
        // c_2 = -z^{-1} x (1 - e^z) = x sum_j z^j/(j+1)!
        Series c2 = monomial_mul(
            divide_by_monomial(sub(exp_series(3, 2, iprec),
                                   Series::constant(3, iprec, Rational(1))),
                               zexp),
            Term{Rational(1), {1, 0, 0}});
        fam.push_back(AbcTriple{std::move(a2), std::move(b2), std::move(c2)});
    }
    for (int k = 3; k <= kmax; ++k) {
        const AbcTriple& p1 = fam[k - 2];  // index k-1
        const AbcTriple& p2 = fam[k - 3];  // index k-2
        Rational mu = Rational(1, 4 * (2 * k - 3) * (2 * k - 5));
        Term my{Rational(-1), {0, 1, 0}};
        Term mx2{mu, {2, 0, 0}};
        Series a = add(monomial_mul(p1.a, my), monomial_mul(p2.a, mx2));
        Series b = add(monomial_mul(p1.b, my), monomial_mul(p2.b, mx2));
        // c_k additionally gains z^{-1}(a_{k-1} f + b_{k-1} g + c_{k-1} h)
        // = z^{-1} g_{k-1}; the + sign is forced by the identity
        // a_k f + b_k g + c_k h = g_k (coefficientwise:
        // G_k = mu_k G_{k-2} - z^{-1} G_{k-1} for g_k = x^k G_k(z)).
        Series combo = add(add(mul(p1.a, ctx.f), mul(p1.b, ctx.g)), mul(p1.c, ctx.h));
        Series c = add(add(monomial_mul(p1.c, my), monomial_mul(p2.c, mx2)),
                       divide_by_monomial(combo, zexp));
        fam.push_back(AbcTriple{std::move(a), std::move(b), std::move(c)});
    }
    for (auto& t : fam) {
        t.a = t.a.truncated(prec);
        t.b = t.b.truncated(prec);
        t.c = t.c.truncated(prec);
    }
    return fam;
}

AbcTriple abc(int k, int prec) { return abc_family(k, prec).back(); }

Rational ratio_check(long k) {
    if (k < 1) throw error("ratio_check requires k >= 1");
    return q(k + 1, k + 1) / q(k, k);
}

Series e_combination(int kmax, int prec, int kstart) {
    if (kmax < 2) throw error("e_combination requires kmax >= 2");
    Series e = Series::zero(3, prec);
    for (int k = kstart; k <= kmax; ++k)
        e = add(e, scale(g_closed(k, prec), q(k, k).inv()));
    return e;
}

Series e_original(int prec) {
    Series::TermMap m;
    for (int i = 1; i <= prec; ++i) {
        for (int j = 0; i + j + 1 <= prec; ++j)
            m.emplace(Exponent{i, 0, j + 1}, factorial(i) / factorial(i + j));
    }
    return Series(3, prec, std::move(m));
}

DivergenceReport divergence_report(int kmax, int prec) {
    if (kmax < 3) throw error("divergence_report requires kmax >= 3");
    auto fam = abc_family(kmax, prec);
    Series asum = Series::zero(3, prec);
    Series bsum = Series::zero(3, prec);
    Series csum = Series::zero(3, prec);
    for (int k = 2; k <= kmax; ++k) {
        Rational rk = q(k, k).inv();
        asum = add(asum, scale(fam[k - 1].a, rk));
        bsum = add(bsum, scale(fam[k - 1].b, rk));
        csum = add(csum, scale(fam[k - 1].c, rk));
    }
    DivergenceReport rep{{}, true};
    for (int k = 2; k <= kmax; ++k) {
        DivergenceRow row;
        row.k = k;
        row.r = q(k, k).inv();
        row.a_ray_coeff = asum.coeff(Exponent{2, k - 2, 0});
        row.b_ray_coeff = bsum.coeff(Exponent{0, k - 1, 0});
        row.c_ray_coeff = csum.coeff(Exponent{1, k - 2, 0});
        row.ratio = q(k + 1, k + 1).inv() / q(k, k).inv();
        row.ratio_formula = Rational(4 * (2 * k + 1) * (2 * k - 1));
        bool ok = row.a_ray_coeff.abs() == row.r && row.b_ray_coeff.abs() == row.r &&
                  row.c_ray_coeff.abs() == row.r && row.ratio == row.ratio_formula;
        rep.super_geometric = rep.super_geometric && ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace gabrielov
}  // namespace echelons
