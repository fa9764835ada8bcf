#include "echelons/oracle.hpp"

#include <algorithm>

namespace echelons {

namespace {

struct Unknown {
    int gen;
    Exponent exp;
};

struct TruncatedSystem {
    std::vector<Unknown> unknowns;
    std::vector<Exponent> rows;                 // one equation per exponent <= d
    std::vector<std::vector<Rational>> matrix;  // rows x unknowns
};

TruncatedSystem build_system(const EchelonPresentation& p, int d) {
    validate(p);
    for (auto& g : p.generators)
        if (g.series.prec() < d)
            throw precision_error("generator precision below oracle degree");
    TruncatedSystem sys;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        // Dense enumeration: all scope-monomials of degree <= d. A generator
        // of order 0 (such as the constant 1) makes any degree shaving
        // unsound, so the spaces are kept exhaustive.
        for (auto& e : exponents_up_to_degree(p.nvars, d)) {
            if (exp_within_scope(e, p.generators[i].scope))
                sys.unknowns.push_back(Unknown{static_cast<int>(i), e});
        }
    }
    sys.rows = exponents_up_to_degree(p.nvars, d);
    sys.matrix.assign(sys.rows.size(), std::vector<Rational>(sys.unknowns.size()));
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        for (std::size_t c = 0; c < sys.unknowns.size(); ++c) {
            const Unknown& u = sys.unknowns[c];
            if (!exp_divides(u.exp, sys.rows[r])) continue;
            sys.matrix[r][c] =
                p.generators[u.gen].series.coeff(exp_sub(sys.rows[r], u.exp));
        }
    }
    return sys;
}

/// In-place reduction to row echelon form with pivot-by-first-nonzero;
/// returns the pivot column of each pivot row, in order. `rhs` may be empty.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m,
                                    std::vector<Rational>& rhs) {
    std::vector<std::size_t> pivots;
    std::size_t nrows = m.size();
    std::size_t ncols = nrows == 0 ? 0 : m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pr = row;
        while (pr < nrows && m[pr][col].is_zero()) ++pr;
        if (pr == nrows) continue;
        std::swap(m[pr], m[row]);
        if (!rhs.empty()) std::swap(rhs[pr], rhs[row]);
        Rational inv = m[row][col].inv();
        for (std::size_t c = col; c < ncols; ++c) m[row][c] = m[row][c] * inv;
        if (!rhs.empty()) rhs[row] = rhs[row] * inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                m[r][c] -= factor * m[row][c];
            if (!rhs.empty()) rhs[r] -= factor * rhs[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

OracleSolution oracle_membership(const Series& f, const EchelonPresentation& p, int d) {
    if (f.nvars() != p.nvars)
        throw dimension_error("oracle input variable count mismatch");
    if (f.prec() < d) throw precision_error("input precision below oracle degree");
    TruncatedSystem sys = build_system(p, d);
    std::vector<Rational> rhs(sys.rows.size());
    for (std::size_t r = 0; r < sys.rows.size(); ++r) rhs[r] = f.coeff(sys.rows[r]);

    auto pivots = row_reduce(sys.matrix, rhs);

    // infeasible iff a zero row has nonzero right-hand side
    for (std::size_t r = pivots.size(); r < sys.rows.size(); ++r)
        if (!rhs[r].is_zero()) return OracleSolution{false, {}};

    // particular solution: free unknowns zero, pivot unknowns from the RREF
    std::vector<Rational> sol(sys.unknowns.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) sol[pivots[k]] = rhs[k];

    std::vector<Series::TermMap> maps(p.generators.size());
    for (std::size_t c = 0; c < sys.unknowns.size(); ++c) {
        if (sol[c].is_zero()) continue;
        maps[sys.unknowns[c].gen].emplace(sys.unknowns[c].exp, sol[c]);
    }
    OracleSolution res{true, {}};
    for (auto& m : maps) res.quotients.emplace_back(p.nvars, d, std::move(m));
    return res;
}

RelationOrderReport oracle_relation_order(const EchelonPresentation& p, int d) {
    TruncatedSystem sys = build_system(p, d);
    std::vector<Rational> no_rhs;
    auto pivots = row_reduce(sys.matrix, no_rhs);

    RegionPartition part = build_partition(p);
    int max_in_deg = 0;
    int max_prec = 0;
    for (auto& g : p.generators) {
        max_in_deg = std::max(max_in_deg,
                              total_degree(initial_term(g.series, p.order)->exp));
        max_prec = std::max(max_prec, g.series.prec());
    }

    // The order of a kernel tuple measures the degree of the leading
    // multiplier as seen at the first surviving cancellation-free position:
    // for a truncation artifact the exact residual r = sum(a_i f_i) is
    // nonzero with ord(r) > d, its initial exponent lands in some region
    // slice A_j, and the order is deg in(r) - deg in(f_j) -- at least
    // d - max_i deg in(f_i) + 1. A tuple whose residual vanishes at full
    // generator precision is reported at the raw order min_i ord(a_i), the
    // signature of a genuine relation.
    RelationOrderReport rep{std::nullopt, d - max_in_deg + 1, 0, {}};

    // kernel basis: one vector per free column
    std::vector<bool> is_pivot(sys.unknowns.size(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < sys.unknowns.size(); ++free_col) {
        if (is_pivot[free_col]) continue;
        ++rep.kernel_dim;
        // vector: free_col = 1, pivot columns = -matrix entry in the pivot row
        std::vector<std::pair<std::size_t, Rational>> entries{
            {free_col, Rational(1)}};
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (!sys.matrix[k][free_col].is_zero())
                entries.emplace_back(pivots[k], -sys.matrix[k][free_col]);

        std::vector<Series::TermMap> maps(p.generators.size());
        int raw_order = d + 1;
        for (auto& [c, v] : entries) {
            const Unknown& u = sys.unknowns[c];
            maps[u.gen].emplace(u.exp, v);
            raw_order = std::min(raw_order, total_degree(u.exp));
        }
        Series residual = Series::zero(p.nvars, max_prec);
        for (std::size_t i = 0; i < maps.size(); ++i) {
            if (maps[i].empty()) continue;
            Series a_i(p.nvars, max_prec + d + 1, std::move(maps[i]));
            residual = add(residual, mul(a_i, p.generators[i].series));
        }

        int order;
        if (auto lead = initial_term(residual, p.order)) {
            int slice = part.classify(lead->exp);
            int in_deg = slice == kComplement
                             ? max_in_deg
                             : total_degree(initial_term(
                                                p.generators[part.slices[slice].owner]
                                                    .series,
                                                p.order)
                                                ->exp);
            order = total_degree(lead->exp) - in_deg;
        } else {
            order = raw_order;
        }
        ++rep.census[order];
        if (!rep.min_order || order < *rep.min_order) rep.min_order = order;
    }
    return rep;
}

}  // namespace echelons
