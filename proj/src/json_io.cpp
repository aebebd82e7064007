#include "grasstilt/json_io.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace grasstilt {

json bigint_to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

BigInt bigint_from_json(const json& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<long long>());
    if (j.is_string())
        return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

void to_json(json& j, const Partition& p)
{
    j = json::array();
    for (int part : p.parts())
        j.push_back(part);
}

void from_json(const json& j, Partition& p)
{
    p = Partition(j.get<std::vector<int>>());
}

void to_json(json& j, const GLWeight& w)
{
    j = w.entries;
}

void from_json(const json& j, GLWeight& w)
{
    w.entries = j.get<std::vector<long>>();
}

void to_json(json& j, const ExteriorSequence& s)
{
    j = s.degrees;
}

void from_json(const json& j, ExteriorSequence& s)
{
    s.degrees = j.get<std::vector<int>>();
}

void to_json(json& j, const VirtualSchurSum& s)
{
    j = json::array();
    for (const auto& [p, mult] : s.terms())
        j.push_back({{"partition", p}, {"multiplicity", bigint_to_json(mult)}});
}

void from_json(const json& j, VirtualSchurSum& s)
{
    s = VirtualSchurSum();
    for (const auto& term : j)
        s.add(term.at("partition").get<Partition>(), bigint_from_json(term.at("multiplicity")));
}

void to_json(json& j, const CohomologyTable& t)
{
    j = json::object();
    for (const auto& [degree, row] : t.rows()) {
        json weights = json::array();
        for (const auto& [w, mult] : row.weights)
            weights.push_back({{"weight", w}, {"multiplicity", bigint_to_json(mult)}});
        j[std::to_string(degree)] = {{"dimension", bigint_to_json(row.dimension)}, {"weights", weights}};
    }
}

void from_json(const json& j, CohomologyTable& t)
{
    CohomologyTable::Rows rows;
    for (const auto& [key, value] : j.items()) {
        CohomologyDegree row;
        row.dimension = bigint_from_json(value.at("dimension"));
        for (const auto& entry : value.at("weights"))
            row.weights.emplace(entry.at("weight").get<GLWeight>(), bigint_from_json(entry.at("multiplicity")));
        rows.emplace(std::stoi(key), std::move(row));
    }
    t = CohomologyTable::from_rows(std::move(rows));
}

void to_json(json& j, const TwistedSchurBundle& b)
{
    j = {{"gamma", b.gamma}, {"det_twist", b.det_twist}, {"r_part", b.r_part}};
}

void from_json(const json& j, TwistedSchurBundle& b)
{
    b.gamma = j.at("gamma").get<Partition>();
    b.det_twist = j.at("det_twist").get<long>();
    b.r_part = j.value("r_part", json::array()).get<Partition>();
}

void to_json(json& j, const VerificationReport& r)
{
    j = {
        {"context", {{"l", r.l}, {"m", r.m}}},
        {"check", r.check},
        {"verdict", to_string(r.verdict)},
        {"witnesses", r.witnesses},
        {"tables", r.tables},
        {"elapsed_ms", r.elapsed_ms ? json(*r.elapsed_ms) : json(nullptr)},
        {"characteristic", r.characteristic},
    };
}

void from_json(const json& j, VerificationReport& r)
{
    r.l = j.at("context").at("l").get<int>();
    r.m = j.at("context").at("m").get<int>();
    r.check = j.at("check").get<std::string>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.witnesses = j.at("witnesses");
    r.tables = j.at("tables");
    const auto& elapsed = j.at("elapsed_ms");
    r.elapsed_ms = elapsed.is_null() ? std::nullopt : std::optional<long long>(elapsed.get<long long>());
    r.characteristic = j.at("characteristic").get<std::string>();
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::verified:
        return "verified";
    case Verdict::failed:
        return "failed";
    case Verdict::out_of_scope:
        return "out_of_scope";
    }
    return "failed";
}

Verdict verdict_from_string(const std::string& s)
{
    if (s == "verified")
        return Verdict::verified;
    if (s == "failed")
        return Verdict::failed;
    if (s == "out_of_scope")
        return Verdict::out_of_scope;
    throw std::invalid_argument("unknown verdict: " + s);
}

}  // namespace grasstilt
