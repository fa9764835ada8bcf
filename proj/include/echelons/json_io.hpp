#ifndef ECHELONS_JSON_IO_HPP
#define ECHELONS_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "echelons/division.hpp"
#include "echelons/oracle.hpp"
#include "echelons/stdbasis.hpp"

namespace echelons {

using json = nlohmann::json;

/// Series document: {"vars":["x","y","z"], "prec":12,
/// "terms":[{"e":[2,0,2],"c":"1/12"}, ...]}; terms sorted by the
/// administrative order, rationals as "p/q" in lowest terms.
json series_to_json(const Series& f, const std::vector<std::string>& vars);
struct NamedSeries {
    Series series;
    std::vector<std::string> vars;
};
NamedSeries series_from_json(const json& j);

/// {"kind":"lex","precedence":["x","y","z"]}, most significant first
json order_to_json(const MonomialOrder& o, const std::vector<std::string>& vars);
MonomialOrder order_from_json(const json& j, const std::vector<std::string>& vars);

/// {"vars":[...], "order":{...}, "prec":12,
///  "generators":[{"series":{...}|{"path":"..."}, "scope":2}, ...]}
struct NamedEchelon {
    EchelonPresentation presentation;
    std::vector<std::string> vars;
};
json echelon_to_json(const EchelonPresentation& p, const std::vector<std::string>& vars);
NamedEchelon echelon_from_json(const json& j);
NamedEchelon load_echelon_file(const std::string& path);
NamedSeries load_series_file(const std::string& path);

json division_result_to_json(const DivisionResult& r, const std::vector<std::string>& vars);
json enlargement_to_json(const EnlargementState& st, const std::vector<std::string>& vars);
json relation_report_to_json(const RelationOrderReport& rep);

}  // namespace echelons

#endif
