#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "qsym/classifier.hpp"
#include "qsym/decomposition.hpp"
#include "qsym/linear.hpp"

namespace qsym {

using nlohmann::json;

inline json to_json(const CanonicalDecomposition& d) {
    return json{
        {"order", d.group.order()},
        {"zero", d.zero},
        {"a", d.free_member},
        {"alpha", d.alpha.images()},
        {"beta", d.beta.images()},
        {"group_table", d.group.table.rows()},
    };
}

inline json to_json(const CriteriaReport& r) {
    json checks = json::object();
    for (const auto& [name, value] : r.checks) checks[name] = value;
    return json{
        {"class", to_string(r.cls)},
        {"checks", checks},
        {"zero_independent", r.zero_independent.value_or(true)},
    };
}

inline CriteriaReport criteria_report_from_json(const json& j) {
    CriteriaReport r;
    r.cls = class_from_string(j.at("class").get<std::string>());
    for (const auto& [name, value] : j.at("checks").items()) r.checks[name] = value.get<bool>();
    r.zero_independent = j.at("zero_independent").get<bool>();
    return r;
}

inline json to_json(const CensusReport& r) {
    json counts = json::object();
    for (const auto& [cls, count] : r.counts()) counts[short_label(cls)] = count;
    json reps = json::object();
    for (const auto& [cls, specs] : r.representatives) {
        json list = json::array();
        for (const auto& s : specs) list.push_back({s.alpha, s.beta, s.d});
        reps[short_label(cls)] = list;
    }
    json out{
        {"p", r.p},
        {"counts", counts},
        {"total", r.total},
        {"representatives", reps},
    };
    out["k"] = r.k ? json(*r.k) : json(nullptr);
    return out;
}

inline CensusReport census_report_from_json(const json& j) {
    CensusReport r;
    r.p = j.at("p").get<int>();
    if (!j.at("k").is_null()) r.k = j.at("k").get<int>();
    r.total = j.at("total").get<int>();
    for (const auto& [label, list] : j.at("representatives").items()) {
        const SymmetryClass cls = class_from_string(label);
        for (const auto& triple : list)
            r.representatives[cls].push_back(
                {r.p, triple.at(0).get<int>(), triple.at(1).get<int>(), triple.at(2).get<int>()});
    }
    return r;
}

inline std::string census_to_csv(const CensusReport& r) {
    std::ostringstream os;
    os << "class,alpha,beta,d\n";
    for (const auto& [cls, specs] : r.representatives)
        for (const auto& s : specs)
            os << short_label(cls) << "," << s.alpha << "," << s.beta << "," << s.d << "\n";
    return os.str();
}

inline json to_json(const ModulusEnumeration& e) {
    json pairs = json::array();
    for (const auto& entry : e.pairs) {
        pairs.push_back({
            {"alpha", entry.alpha},
            {"beta", entry.beta},
            {"mu", entry.mu},
            {"gcd", entry.g},
            {"divisor_reading_d", entry.divisor_reading_d},
            {"canonical_d", entry.canonical_d},
            {"matches_divisor_reading", entry.matches_divisor_reading},
        });
    }
    return json{
        {"m", e.m},
        {"prime", e.prime},
        {"validated", e.validated},
        {"total_classes", e.total_classes},
        {"pairs", pairs},
    };
}

inline std::string enumeration_to_csv(const ModulusEnumeration& e) {
    std::ostringstream os;
    os << "alpha,beta,d\n";
    for (const auto& entry : e.pairs)
        for (int d : entry.canonical_d) os << entry.alpha << "," << entry.beta << "," << d << "\n";
    return os.str();
}

} // namespace qsym
