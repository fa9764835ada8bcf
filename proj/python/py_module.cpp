#include <pybind11/pybind11.h>

#include "echelons/gabrielov.hpp"
#include "echelons/json_io.hpp"

namespace py = pybind11;
using namespace echelons;

// Values cross the boundary as JSON strings in the documented wire formats;
// python-side convenience wrappers live in the echelonps package.
namespace {

json parse(const std::string& s) {
    try {
        return json::parse(s);
    } catch (const json::parse_error& e) {
        throw schema_error(std::string("malformed JSON: ") + e.what());
    }
}

std::string divide_json(const std::string& echelon_doc, const std::string& series_doc) {
    NamedEchelon ne = echelon_from_json(parse(echelon_doc));
    NamedSeries f = series_from_json(parse(series_doc));
    if (f.vars != ne.vars) throw schema_error("input variables differ from echelon variables");
    return division_result_to_json(echelon_divide(f.series, ne.presentation), ne.vars).dump();
}

std::string enlarge_json(const std::string& echelon_doc, const std::string& target_doc,
                         bool reduce, int max_rounds) {
    NamedEchelon ne = echelon_from_json(parse(echelon_doc));
    json tj = parse(target_doc);
    EnlargeTarget target;
    if (tj.contains("monomial")) {
        Exponent e;
        for (auto& v : tj["monomial"]) e.push_back(v.get<int>());
        if (static_cast<int>(e.size()) != ne.presentation.nvars)
            throw schema_error("target monomial has the wrong length");
        target.monomial = std::move(e);
    }
    if (tj.contains("degree_cap")) target.degree_cap = tj["degree_cap"].get<int>();
    if (!target.monomial && !target.degree_cap)
        throw schema_error("target needs monomial or degree_cap");
    EnlargementState st = reduce ? enlarge_reduced(ne.presentation, target, max_rounds)
                                 : enlarge(ne.presentation, target, max_rounds);
    return enlargement_to_json(st, ne.vars).dump();
}

std::string member_json(const std::string& echelon_doc, const std::string& series_doc,
                        int degree, bool oracle, int max_rounds) {
    NamedEchelon ne = echelon_from_json(parse(echelon_doc));
    NamedSeries f = series_from_json(parse(series_doc));
    if (f.vars != ne.vars) throw schema_error("input variables differ from echelon variables");
    json out = {{"degree", degree}};
    if (oracle) {
        OracleSolution sol = oracle_membership(f.series, ne.presentation, degree);
        out["member"] = sol.feasible;
    } else {
        auto mem = membership_mod_degree(f.series, ne.presentation, degree, max_rounds);
        if (mem.verdict == MembershipVerdict::Indeterminate)
            out["member"] = nullptr;
        else
            out["member"] = mem.verdict == MembershipVerdict::Member;
        out["witness"] = division_result_to_json(mem.witness, ne.vars);
    }
    return out.dump();
}

std::string relations_json(const std::string& echelon_doc, int degree) {
    NamedEchelon ne = echelon_from_json(parse(echelon_doc));
    return relation_report_to_json(oracle_relation_order(ne.presentation, degree)).dump();
}

const std::vector<std::string> kXyz = {"x", "y", "z"};

std::string gabrielov_echelon_json(int prec) {
    return echelon_to_json(gabrielov::make_context(prec).presentation, kXyz).dump();
}

std::string gk_json(int k, int prec, bool algorithmic) {
    Series s = algorithmic ? gabrielov::g_algorithmic(k, prec) : gabrielov::g_closed(k, prec);
    return series_to_json(s, kXyz).dump();
}

std::string q_str(long i, long k) { return gabrielov::q(i, k).str(); }

std::string e_json(int kmax, int prec, bool original) {
    Series s = original ? gabrielov::e_original(prec) : gabrielov::e_combination(kmax, prec);
    return series_to_json(s, kXyz).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "echelons of power series: exact division, standard-basis "
              "enlargement, and the Gabrielov counterexample";

    // translators run newest-first: register the base before the subclass
    py::register_exception<error>(m, "EchelonError", PyExc_RuntimeError);
    py::register_exception<schema_error>(m, "SchemaError", PyExc_ValueError);

    m.def("divide", &divide_json, py::arg("echelon"), py::arg("series"),
          "Echelon division; arguments and result are JSON documents.");
    m.def("enlarge", &enlarge_json, py::arg("echelon"), py::arg("target"),
          py::arg("reduce") = false, py::arg("max_rounds") = 10000,
          "Standard-basis enlargement; target is {\"monomial\":[...]} or "
          "{\"degree_cap\":d}.");
    m.def("member", &member_json, py::arg("echelon"), py::arg("series"), py::arg("degree"),
          py::arg("oracle") = false, py::arg("max_rounds") = 10000,
          "Degree-bounded membership; member is true/false/null (indeterminate).");
    m.def("relations", &relations_json, py::arg("echelon"), py::arg("degree"),
          "Truncated relation kernel census.");
    m.def("gabrielov_echelon", &gabrielov_echelon_json, py::arg("prec"),
          "The fixed three-generator echelon as a JSON document.");
    m.def("gabrielov_gk", &gk_json, py::arg("k"), py::arg("prec"),
          py::arg("algorithmic") = false, "The series g_k as a JSON document.");
    m.def("gabrielov_q", &q_str, py::arg("i"), py::arg("k"),
          "The coefficient q(i, k) as an exact rational string.");
    m.def("gabrielov_e", &e_json, py::arg("kmax"), py::arg("prec"),
          py::arg("original") = false, "The series e as a JSON document.");
}
