#include "echelons/series.hpp"

#include <algorithm>
#include <numeric>

namespace echelons {

int total_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw divisibility_error("exponent subtraction went negative");
    }
    return r;
}

bool exp_divides(const Exponent& e, const Exponent& a) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > a[i]) return false;
    return true;
}

bool exp_within_scope(const Exponent& e, int scope) {
    for (std::size_t i = static_cast<std::size_t>(scope); i < e.size(); ++i)
        if (e[i] != 0) return false;
    return true;
}

bool AdminLess::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

static void check_same_nvars(const Series& f, const Series& g) {
    if (f.nvars() != g.nvars())
        throw dimension_error("series variable counts differ");
}

Series::Series(int nvars, int prec, TermMap terms) : nvars_(nvars), prec_(prec) {
    for (auto& [e, c] : terms) {
        if (c.is_zero()) continue;
        if (static_cast<int>(e.size()) != nvars)
            throw dimension_error("exponent length does not match variable count");
        if (total_degree(e) > prec) continue;
        terms_.emplace(e, c);
    }
}

Series Series::constant(int nvars, int prec, const Rational& c) {
    Series s(nvars, prec);
    if (!c.is_zero() && prec >= 0) s.terms_.emplace(Exponent(nvars, 0), c);
    return s;
}

Series Series::monomial(int nvars, int prec, const Exponent& e, const Rational& c) {
    TermMap m;
    m.emplace(e, c);
    return Series(nvars, prec, std::move(m));
}

Rational Series::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

int Series::ord() const {
    if (terms_.empty()) return prec_;
    // admin order is graded, so the first term has minimal total degree
    return total_degree(terms_.begin()->first);
}

Series Series::truncated(int new_prec) const {
    int p = std::min(prec_, new_prec);
    Series r(nvars_, p);
    for (auto& [e, c] : terms_)
        if (total_degree(e) <= p) r.terms_.emplace(e, c);
    return r;
}

bool operator==(const Series& a, const Series& b) {
    return a.nvars_ == b.nvars_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
}

bool equal_at_common_prec(const Series& a, const Series& b) {
    int p = std::min(a.prec(), b.prec());
    return a.truncated(p) == b.truncated(p);
}

Series add(const Series& f, const Series& g) {
    check_same_nvars(f, g);
    int p = std::min(f.prec(), g.prec());
    Series::TermMap m(f.terms().begin(), f.terms().end());
    for (auto& [e, c] : g.terms()) {
        auto [it, fresh] = m.emplace(e, c);
        if (!fresh) it->second += c;
    }
    return Series(f.nvars(), p, std::move(m));
}

Series sub(const Series& f, const Series& g) {
    return add(f, scale(g, Rational(-1)));
}

Series mul(const Series& f, const Series& g) {
    check_same_nvars(f, g);
    int p = std::min(f.prec() + g.ord(), g.prec() + f.ord());
    Series::TermMap m;
    for (auto& [ef, cf] : f.terms()) {
        int df = total_degree(ef);
        for (auto& [eg, cg] : g.terms()) {
            if (df + total_degree(eg) > p) continue;
            Exponent e = exp_add(ef, eg);
            Rational c = cf * cg;
            auto [it, fresh] = m.emplace(std::move(e), c);
            if (!fresh) it->second += c;
        }
    }
    return Series(f.nvars(), p, std::move(m));
}

Series scale(const Series& f, const Rational& c) {
    if (c.is_zero()) return Series::zero(f.nvars(), f.prec());
    Series::TermMap m;
    for (auto& [e, cf] : f.terms()) m.emplace(e, cf * c);
    return Series(f.nvars(), f.prec(), std::move(m));
}

Series monomial_mul(const Series& f, const Term& t) {
    if (static_cast<int>(t.exp.size()) != f.nvars())
        throw dimension_error("monomial exponent length does not match series");
    Series::TermMap m;
    for (auto& [e, c] : f.terms()) m.emplace(exp_add(e, t.exp), c * t.coeff);
    return Series(f.nvars(), f.prec() + total_degree(t.exp), std::move(m));
}

Series divide_by_monomial(const Series& f, const Exponent& e) {
    if (static_cast<int>(e.size()) != f.nvars())
        throw dimension_error("monomial exponent length does not match series");
    Series::TermMap m;
    for (auto& [ef, c] : f.terms()) {
        if (!exp_divides(e, ef))
            throw divisibility_error("series term not divisible by monomial");
        m.emplace(exp_sub(ef, e), c);
    }
    return Series(f.nvars(), f.prec() - total_degree(e), std::move(m));
}

Series exp_series(int nvars, int var_index, int prec) {
    if (var_index < 0 || var_index >= nvars)
        throw dimension_error("exp_series variable index out of range");
    Series::TermMap m;
    Rational c(1);
    for (int k = 0; k <= prec; ++k) {
        if (k > 0) c = c / Rational(k);
        Exponent e(nvars, 0);
        e[var_index] = k;
        m.emplace(std::move(e), c);
    }
    return Series(nvars, prec, std::move(m));
}

std::vector<std::string> default_var_names(int nvars) {
    static const char* base[] = {"x", "y", "z", "w", "v", "u"};
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) {
        if (i < 6)
            names.emplace_back(base[i]);
        else
            names.emplace_back("x" + std::to_string(i + 1));
    }
    return names;
}

}  // namespace echelons
