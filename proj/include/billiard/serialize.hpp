#pragma once

// Canonical text forms: series as sorted (x_exp, q_exp, coefficient) triples
// with decimal-string coefficients, identity reports, partition records.

#include "billiard/identities.hpp"
#include "billiard/partitions.hpp"
#include "billiard/qseries.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace billiard {

using json = nlohmann::json;

inline json series_to_json(const XQSeries& s) {
    json terms = json::array();
    for (const auto& [m, row] : s.rows())
        for (const auto& [e, c] : row.terms()) terms.push_back(json::array({m, e, c.str()}));
    return json{{"order", s.order()}, {"terms", std::move(terms)}};
}

inline json series_to_json(const QSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(json::array({e, c.str()}));
    return json{{"order", s.order()}, {"terms", std::move(terms)}};
}

inline XQSeries series_from_json(const json& j) {
    XQSeries s(j.at("order").get<Degree>());
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw domain_error("series term must be [x_exp, q_exp, coefficient]");
        s.add_term(t[0].get<Degree>(), t[1].get<Degree>(), Integer(t[2].get<std::string>()));
    }
    return s;
}

/// "# order\tN", a header line, then one tab-separated triple per term.
inline std::string series_to_tsv(const XQSeries& s) {
    std::ostringstream out;
    out << "# order\t" << s.order() << "\n";
    out << "x_exp\tq_exp\tcoefficient\n";
    for (const auto& [m, row] : s.rows())
        for (const auto& [e, c] : row.terms()) out << m << '\t' << e << '\t' << c.str() << '\n';
    return out.str();
}

inline json report_to_json(const IdentityReport& r, bool include_terms) {
    json j{{"identity", r.identity}, {"order", r.order}, {"pass", r.pass}};
    if (r.first_discrepancy) {
        const auto& d = *r.first_discrepancy;
        j["first_discrepancy"] = {{"x_exp", d.x_exp}, {"q_exp", d.q_exp}, {"lhs", d.lhs.str()}, {"rhs", d.rhs.str()}};
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (include_terms || !r.pass) {
        j["lhs_terms"] = series_to_json(r.lhs)["terms"];
        j["rhs_terms"] = series_to_json(r.rhs)["terms"];
    }
    return j;
}

/// Statistics of one partition; phi only where the partition is in ooE.
inline json partition_record(const Partition& p) {
    json j{{"parts", p.to_string()},   {"size", p.size()},         {"length", p.length()},
           {"odd_parts", p.odd_count()}, {"smallest", p.smallest()}, {"largest", p.largest()}};
    if (satisfies(p, PartitionClass::OOxE)) j["phi"] = phi_weight(p);
    return j;
}

} // namespace billiard
