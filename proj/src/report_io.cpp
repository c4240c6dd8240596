#include "lr/report_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace lr {

json to_json(const LRTableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows()) {
        json cells = json::array();
        for (std::size_t e = 0; e < row.size(); ++e)
            if (row[e] != 0) cells.push_back({e + 1, row[e]});
        rows.push_back(std::move(cells));
    }
    return json{{"shape", t.shape().to_string()}, {"rows", std::move(rows)}};
}

json to_json(const CharacterExpansion& e) {
    json out = json::array();
    for (const auto& [nu, mult] : e.terms())
        out.push_back({{"nu", nu.to_string()}, {"mult", mult.get_str()}});
    return out;
}

json sequence_json(const std::vector<std::pair<Int, Int>>& values) {
    json out = json::array();
    for (const auto& [n, v] : values) out.push_back({n.get_si(), v.get_str()});
    return out;
}

json to_json(const StabilizationReport& r) {
    return json{{"m_formula", r.m_formula.get_si()},
                {"m_empirical", r.m_empirical.get_si()},
                {"strictly_increasing_prefix", r.strictly_increasing_prefix},
                {"q", sequence_json(r.q_values)}};
}

json to_json(const RationalPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
    return json{{"coeffs", std::move(coeffs)}};
}

json to_json(const GeneratingFunction& g) {
    json num = json::array();
    for (const auto& c : g.numerator) num.push_back(c.get_str());
    return json{{"numerator", std::move(num)}, {"denom_power", g.denom_power}};
}

std::string tableau_text(const LRTableau& t) {
    std::ostringstream out;
    bool first_row = true;
    for (const auto& row : t.rows()) {
        if (!first_row) out << '|';
        first_row = false;
        bool first = true;
        for (std::size_t e = 0; e < row.size(); ++e) {
            if (row[e] == 0) continue;
            if (!first) out << ' ';
            first = false;
            out << (e + 1) << '^' << row[e];
        }
    }
    return out.str();
}

}  // namespace lr
