#include "echelons/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace echelons {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw schema_error(what);
}

Exponent exponent_from_json(const json& j, int nvars) {
    require(j.is_array() && static_cast<int>(j.size()) == nvars,
            "exponent must be an array of length " + std::to_string(nvars));
    Exponent e;
    for (auto& v : j) {
        require(v.is_number_integer() && v.get<int>() >= 0,
                "exponent components must be non-negative integers");
        e.push_back(v.get<int>());
    }
    return e;
}

}  // namespace

json series_to_json(const Series& f, const std::vector<std::string>& vars) {
    json terms = json::array();
    for (auto& [e, c] : f.terms())  // already in administrative order
        terms.push_back({{"e", e}, {"c", c.str()}});
    return {{"vars", vars}, {"prec", f.prec()}, {"terms", terms}};
}

NamedSeries series_from_json(const json& j) {
    require(j.is_object() && j.contains("vars") && j.contains("prec") && j.contains("terms"),
            "series document needs vars, prec, terms");
    std::vector<std::string> vars = j["vars"].get<std::vector<std::string>>();
    int nvars = static_cast<int>(vars.size());
    require(j["prec"].is_number_integer() && j["prec"].get<int>() >= 0,
            "prec must be a non-negative integer");
    int prec = j["prec"].get<int>();
    Series::TermMap m;
    for (auto& t : j["terms"]) {
        require(t.contains("e") && t.contains("c"), "term needs e and c");
        Exponent e = exponent_from_json(t["e"], nvars);
        require(total_degree(e) <= prec, "term exponent above precision");
        Rational c = Rational::parse(t["c"].get<std::string>());
        require(!c.is_zero(), "zero coefficient stored in series document");
        require(m.emplace(std::move(e), std::move(c)).second, "duplicate exponent");
    }
    return NamedSeries{Series(nvars, prec, std::move(m)), std::move(vars)};
}

json order_to_json(const MonomialOrder& o, const std::vector<std::string>& vars) {
    json prec = json::array();
    for (int idx : o.precedence) prec.push_back(vars.at(idx));
    return {{"kind", o.kind == OrderKind::lex ? "lex" : "grlex"}, {"precedence", prec}};
}

MonomialOrder order_from_json(const json& j, const std::vector<std::string>& vars) {
    require(j.is_object() && j.contains("kind") && j.contains("precedence"),
            "order needs kind and precedence");
    std::string kind = j["kind"].get<std::string>();
    require(kind == "lex" || kind == "grlex", "order kind must be lex or grlex");
    std::vector<int> prec;
    for (auto& name : j["precedence"]) {
        auto it = std::find(vars.begin(), vars.end(), name.get<std::string>());
        require(it != vars.end(), "order precedence names unknown variable");
        prec.push_back(static_cast<int>(it - vars.begin()));
    }
    std::vector<int> sorted = prec;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        require(sorted[i] == static_cast<int>(i) && sorted.size() == vars.size(),
                "order precedence must be a permutation of the variables");
    return {kind == "lex" ? OrderKind::lex : OrderKind::grlex, std::move(prec)};
}

json echelon_to_json(const EchelonPresentation& p, const std::vector<std::string>& vars) {
    int prec = p.generators.empty() ? 0 : p.generators.front().series.prec();
    json gens = json::array();
    for (auto& g : p.generators) {
        prec = std::min(prec, g.series.prec());
        gens.push_back({{"series", series_to_json(g.series, vars)}, {"scope", g.scope}});
    }
    return {{"vars", vars},
            {"order", order_to_json(p.order, vars)},
            {"prec", prec},
            {"generators", gens}};
}

NamedEchelon echelon_from_json(const json& j) {
    require(j.is_object() && j.contains("vars") && j.contains("order") &&
                j.contains("generators"),
            "echelon document needs vars, order, generators");
    std::vector<std::string> vars = j["vars"].get<std::vector<std::string>>();
    int nvars = static_cast<int>(vars.size());
    MonomialOrder order = order_from_json(j["order"], vars);
    std::vector<ScopedGenerator> gens;
    for (auto& g : j["generators"]) {
        require(g.contains("series") && g.contains("scope"), "generator needs series and scope");
        NamedSeries s = g["series"].contains("path")
                            ? load_series_file(g["series"]["path"].get<std::string>())
                            : series_from_json(g["series"]);
        require(s.vars == vars, "generator variables differ from echelon variables");
        int scope = g["scope"].get<int>();
        require(scope >= 0 && scope <= nvars, "generator scope out of range");
        gens.push_back(ScopedGenerator{std::move(s.series), scope});
    }
    NamedEchelon ne{EchelonPresentation{nvars, std::move(gens), std::move(order)},
                    std::move(vars)};
    validate(ne.presentation);
    return ne;
}

static json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw schema_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

NamedEchelon load_echelon_file(const std::string& path) {
    try {
        return echelon_from_json(load_json_file(path));
    } catch (const schema_error& e) {
        throw schema_error(path + ": " + e.what());
    }
}

NamedSeries load_series_file(const std::string& path) {
    try {
        return series_from_json(load_json_file(path));
    } catch (const schema_error& e) {
        throw schema_error(path + ": " + e.what());
    }
}

json division_result_to_json(const DivisionResult& r, const std::vector<std::string>& vars) {
    json quotients = json::array();
    for (auto& q : r.quotients) quotients.push_back(series_to_json(q, vars));
    json out = {{"quotients", quotients},
                {"remainder", series_to_json(r.remainder, vars)},
                {"remainder_scope", r.remainder_scope}};
    out["min_witness"] = r.min_witness ? json(*r.min_witness) : json(nullptr);
    return out;
}

static const char* action_name(TraceAction a) {
    switch (a) {
        case TraceAction::Inadmissible: return "inadmissible";
        case TraceAction::ZeroSkip: return "zero";
        case TraceAction::DedupSkip: return "dedup";
        case TraceAction::DegreeSkip: return "degree_cap";
        case TraceAction::Insert: return "insert";
        case TraceAction::InsertScopeUpgrade: return "insert_scope_upgrade";
    }
    return "?";
}

json enlargement_to_json(const EnlargementState& st, const std::vector<std::string>& vars) {
    json basis = json::array();
    for (auto& g : st.F)
        basis.push_back({{"series", series_to_json(g.series, vars)}, {"scope", g.scope}});
    json trace = json::array();
    for (auto& ev : st.trace) {
        json e = {{"round", ev.round}, {"i", ev.i}, {"j", ev.j},
                  {"action", action_name(ev.action)}};
        if (ev.new_index >= 0) {
            e["new_index"] = ev.new_index;
            e["new_scope"] = ev.new_scope;
        }
        if (ev.initial_exp) e["initial_exp"] = *ev.initial_exp;
        if (ev.raw) e["raw"] = series_to_json(*ev.raw, vars);
        if (ev.reduced) e["reduced"] = series_to_json(*ev.reduced, vars);
        trace.push_back(std::move(e));
    }
    const char* status = st.status == EnlargeStatus::Covered    ? "covered"
                         : st.status == EnlargeStatus::Exhausted ? "exhausted"
                                                                 : "max_rounds";
    json out = {{"status", status}, {"rounds", st.rounds}, {"basis", basis}, {"trace", trace}};
    if (st.covering_index) out["covering_index"] = *st.covering_index;
    return out;
}

json relation_report_to_json(const RelationOrderReport& rep) {
    json census = json::object();
    for (auto& [order, count] : rep.census) census[std::to_string(order)] = count;
    json out = {{"kernel_dim", rep.kernel_dim},
                {"artifact_threshold", rep.artifact_threshold},
                {"census", census}};
    out["min_order"] = rep.min_order ? json(*rep.min_order) : json(nullptr);
    return out;
}

}  // namespace echelons
