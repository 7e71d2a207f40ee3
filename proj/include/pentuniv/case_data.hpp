#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pentuniv/good_vectors.hpp"
#include "pentuniv/ternary_form.hpp"

#include <pentuniv/embedded_cases.hpp>

namespace pentuniv {

struct RowPattern {
    std::vector<i64> prefix;
    i64 lo = 0, hi = 0;
    std::vector<i64> skip;
};

struct ResiduePart {
    i64 size = 0;
    std::vector<VectorCondition> conditions;
};

struct TransferCheck {
    std::string sub, sup;
    i64 d = 0, a = 0;
    i64 residues = 0, transfers = 0, bad = 0;
    std::vector<ResiduePart> residue_parts;  // describes the good residues, when given
    std::vector<ResiduePart> bad_parts;
    std::vector<Mat3> contains;  // transfer matrices that must appear in the set
    std::vector<Mat3> escapes;   // one per bad part
    std::optional<Vec3> escape_cycle_direction;
    i64 escape_cycle_value = 0;
};

struct ValueCheck {
    std::string form;
    i64 value = 0;
    i64 vectors = 0;
};

struct FormAutomorphism {
    std::string form;
    Mat3 numerator;
    i64 denominator = 1;
    Vec3 fixed_direction{};
};

struct ScalarCondition {
    i64 mod = 1;
    std::vector<i64> residues;
};

struct TargetExclusion {
    std::string type;  // "odd_power_nonresidue" or "even_power_multiple"
    i64 prime = 0;
    i64 value = 0;
};

struct ShiftRule {
    i64 term = 0;
    std::vector<i64> d_candidates;
    std::vector<ScalarCondition> conditions;
    std::vector<TargetExclusion> exclusions;
};

struct PowerWitness {
    std::array<i64, 4> multipliers{};
    std::array<i64, 4> offsets{};
};

struct CasePipeline {
    std::optional<PowerWitness> power_witness;
    i64 bounded_lo = 0, bounded_hi = 0;
    ShiftRule shift;
    std::array<i64, 3> search_form{};
    std::string solution_filter;
    std::string coprimize;
};

struct ExceptionIdentity {
    i64 target = 0;
    std::vector<std::pair<i64, i64>> factorization;  // (prime, exponent)
};

struct CaseRecord {
    std::string id;
    std::vector<i64> coefficients;
    i64 prime = 0;
    std::map<std::string, TernaryForm> forms;
    std::vector<TransferCheck> transfer_checks;
    std::vector<ValueCheck> value_checks;
    std::optional<FormAutomorphism> automorphism;
    std::optional<CasePipeline> pipeline;
    std::vector<i64> exceptions;  // quinary prefixes only
    std::optional<ExceptionIdentity> exception_identity;

    const TernaryForm& form(const std::string& name) const {
        auto it = forms.find(name);
        if (it == forms.end())
            throw std::out_of_range("case " + id + " has no form named " + name);
        return it->second;
    }
};

struct CaseData {
    i64 version = 0;
    std::vector<i64> critical;
    std::vector<RowPattern> rows;
    std::vector<CaseRecord> cases;

    const CaseRecord& by_id(const std::string& id) const {
        for (const auto& c : cases)
            if (c.id == id) return c;
        throw std::out_of_range("no case record " + id);
    }
};

namespace detail {

using nlohmann::json;

inline Vec3 parse_vec3(const json& j) {
    if (j.size() != 3) throw std::invalid_argument("vector needs 3 entries");
    return {j[0].get<i64>(), j[1].get<i64>(), j[2].get<i64>()};
}

inline Mat3 parse_mat3(const json& j) {
    if (j.size() != 3) throw std::invalid_argument("matrix needs 3 rows");
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        Vec3 row = parse_vec3(j[i]);
        for (int k = 0; k < 3; ++k) m(i, k) = row[k];
    }
    return m;
}

inline TernaryForm parse_form(const json& j) {
    if (j.size() != 6) throw std::invalid_argument("form needs 6 entries");
    std::array<i64, 6> s;
    for (int i = 0; i < 6; ++i) s[i] = j[i].get<i64>();
    TernaryForm f = TernaryForm::from_six(s);
    if (!f.positive_definite())
        throw std::invalid_argument("form is not positive definite");
    return f;
}

inline VectorCondition parse_vector_condition(const json& j) {
    VectorCondition c;
    c.coeffs = parse_vec3(j.at("coeffs"));
    c.mod = j.at("mod").get<i64>();
    c.residues = j.at("residues").get<std::vector<i64>>();
    return c;
}

inline ResiduePart parse_part(const json& j) {
    ResiduePart p;
    p.size = j.at("size").get<i64>();
    for (const auto& c : j.at("conditions")) p.conditions.push_back(parse_vector_condition(c));
    return p;
}

inline TransferCheck parse_transfer_check(const json& j) {
    TransferCheck t;
    t.sub = j.at("sub").get<std::string>();
    t.sup = j.at("sup").get<std::string>();
    t.d = j.at("d").get<i64>();
    t.a = j.at("a").get<i64>();
    t.residues = j.at("residues").get<i64>();
    t.transfers = j.at("transfers").get<i64>();
    t.bad = j.at("bad").get<i64>();
    if (j.contains("residue_parts"))
        for (const auto& p : j["residue_parts"]) t.residue_parts.push_back(parse_part(p));
    if (j.contains("bad_parts"))
        for (const auto& p : j["bad_parts"]) t.bad_parts.push_back(parse_part(p));
    if (j.contains("contains"))
        for (const auto& m : j["contains"]) t.contains.push_back(parse_mat3(m));
    if (j.contains("escapes"))
        for (const auto& m : j["escapes"]) t.escapes.push_back(parse_mat3(m));
    if (j.contains("escape_cycle_direction"))
        t.escape_cycle_direction = parse_vec3(j["escape_cycle_direction"]);
    if (j.contains("escape_cycle_value"))
        t.escape_cycle_value = j["escape_cycle_value"].get<i64>();
    if (t.escapes.size() != t.bad_parts.size())
        throw std::invalid_argument("each bad part needs exactly one escape");
    return t;
}

inline CasePipeline parse_pipeline(const json& j) {
    CasePipeline p;
    if (j.contains("power_witness")) {
        PowerWitness w;
        const auto& pw = j["power_witness"];
        for (int i = 0; i < 4; ++i) {
            w.multipliers[i] = pw.at("multipliers")[i].get<i64>();
            w.offsets[i] = pw.at("offsets")[i].get<i64>();
        }
        p.power_witness = w;
    }
    p.bounded_lo = j.at("bounded")[0].get<i64>();
    p.bounded_hi = j.at("bounded")[1].get<i64>();
    const auto& sh = j.at("shift");
    p.shift.term = sh.at("term").get<i64>();
    p.shift.d_candidates = sh.at("d_candidates").get<std::vector<i64>>();
    for (const auto& c : sh.at("conditions")) {
        ScalarCondition sc;
        sc.mod = c.at("mod").get<i64>();
        sc.residues = c.at("residues").get<std::vector<i64>>();
        p.shift.conditions.push_back(sc);
    }
    for (const auto& e : sh.at("exclusions")) {
        TargetExclusion x;
        x.type = e.at("type").get<std::string>();
        if (e.contains("prime")) x.prime = e["prime"].get<i64>();
        if (e.contains("value")) x.value = e["value"].get<i64>();
        p.shift.exclusions.push_back(x);
    }
    for (int i = 0; i < 3; ++i) p.search_form[i] = j.at("search_form")[i].get<i64>();
    p.solution_filter = j.at("solution_filter").get<std::string>();
    p.coprimize = j.at("coprimize").get<std::string>();
    return p;
}

inline CaseRecord parse_case(const json& j) {
    CaseRecord c;
    c.id = j.at("id").get<std::string>();
    c.coefficients = j.at("coefficients").get<std::vector<i64>>();
    if (j.contains("prime")) c.prime = j["prime"].get<i64>();
    if (j.contains("forms"))
        for (const auto& [name, six] : j["forms"].items()) c.forms[name] = parse_form(six);
    if (j.contains("transfer_checks"))
        for (const auto& t : j["transfer_checks"])
            c.transfer_checks.push_back(parse_transfer_check(t));
    if (j.contains("value_checks"))
        for (const auto& v : j["value_checks"])
            c.value_checks.push_back(
                {v.at("form").get<std::string>(), v.at("value").get<i64>(),
                 v.at("vectors").get<i64>()});
    if (j.contains("automorphism")) {
        const auto& a = j["automorphism"];
        FormAutomorphism fa;
        fa.form = a.at("form").get<std::string>();
        fa.numerator = parse_mat3(a.at("numerator"));
        fa.denominator = a.at("denominator").get<i64>();
        fa.fixed_direction = parse_vec3(a.at("fixed_direction"));
        c.automorphism = fa;
    }
    if (j.contains("pipeline")) c.pipeline = parse_pipeline(j["pipeline"]);
    if (j.contains("exceptions")) c.exceptions = j["exceptions"].get<std::vector<i64>>();
    if (j.contains("exception_identity")) {
        ExceptionIdentity e;
        e.target = j["exception_identity"].at("target").get<i64>();
        for (const auto& pf : j["exception_identity"].at("factorization"))
            e.factorization.emplace_back(pf[0].get<i64>(), pf[1].get<i64>());
        c.exception_identity = e;
    }
    return c;
}

inline CaseData parse_case_data(const json& j) {
    CaseData d;
    d.version = j.at("version").get<i64>();
    d.critical = j.at("critical").get<std::vector<i64>>();
    for (const auto& r : j.at("rows")) {
        RowPattern row;
        row.prefix = r.at("prefix").get<std::vector<i64>>();
        row.lo = r.at("lo").get<i64>();
        row.hi = r.at("hi").get<i64>();
        row.skip = r.at("skip").get<std::vector<i64>>();
        d.rows.push_back(row);
    }
    for (const auto& c : j.at("cases")) d.cases.push_back(parse_case(c));
    return d;
}

}  // namespace detail

// Embedded data by default; the PENTUNIV_CASE_DATA environment variable
// points at a replacement file (handy for experiments without a rebuild).
inline const CaseData& case_data() {
    static const CaseData data = [] {
        const char* path = std::getenv("PENTUNIV_CASE_DATA");
        nlohmann::json j;
        if (path != nullptr && *path != '\0') {
            std::ifstream in(path);
            if (!in) throw std::runtime_error(std::string("cannot open ") + path);
            in >> j;
        } else {
            j = nlohmann::json::parse(detail::embedded_cases_json);
        }
        return detail::parse_case_data(j);
    }();
    return data;
}

}  // namespace pentuniv
