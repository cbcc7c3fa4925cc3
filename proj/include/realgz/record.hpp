#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace realgz::cli {

using json = nlohmann::ordered_json;

struct SymbolicTopology {
    friend bool operator==(const SymbolicTopology&, const SymbolicTopology&) = default;
};

struct NumericTopology {
    std::optional<long> er; // absent for the complex series, which needs only e_C
    long ec = 24;
    friend bool operator==(const NumericTopology&, const NumericTopology&) = default;
};

/// Curve data carried by picard records.
struct CurveInfo {
    unsigned cross = 0;
    unsigned solitary = 0;
    unsigned pairs = 0;
    int sign = 1;
    friend bool operator==(const CurveInfo&, const CurveInfo&) = default;
};

/// Machine-readable result of one CLI invocation. Serialized as
///   {mode, topology: {er, ec} | "symbolic" | null, order,
///    coefficients: [[index, string]], checks?: [[index, bool]], curve?: {...}}
struct OutputRecord {
    std::string mode; // hilbert-real | welschinger | symmetric | complex | picard | verify
    std::variant<std::monostate, SymbolicTopology, NumericTopology> topology;
    std::size_t order = 0;
    std::vector<std::pair<std::size_t, std::string>> coefficients;
    std::optional<std::vector<std::pair<std::size_t, bool>>> checks;
    std::optional<CurveInfo> curve;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline json to_json(const OutputRecord& r)
{
    json j;
    j["mode"] = r.mode;
    if (std::holds_alternative<SymbolicTopology>(r.topology)) {
        j["topology"] = "symbolic";
    } else if (const auto* num = std::get_if<NumericTopology>(&r.topology)) {
        json t = json::object();
        if (num->er) {
            t["er"] = *num->er;
        }
        t["ec"] = num->ec;
        j["topology"] = t;
    } else {
        j["topology"] = nullptr;
    }
    j["order"] = r.order;
    json coeffs = json::array();
    for (const auto& [index, value] : r.coefficients) {
        coeffs.push_back(json::array({index, value}));
    }
    j["coefficients"] = coeffs;
    if (r.checks) {
        json checks = json::array();
        for (const auto& [index, ok] : *r.checks) {
            checks.push_back(json::array({index, ok}));
        }
        j["checks"] = checks;
    }
    if (r.curve) {
        j["curve"] = {{"cross", r.curve->cross},
                      {"solitary", r.curve->solitary},
                      {"pairs", r.curve->pairs},
                      {"sign", r.curve->sign}};
    }
    return j;
}

inline OutputRecord from_json(const json& j)
{
    try {
        OutputRecord r;
        r.mode = j.at("mode").get<std::string>();
        const auto& t = j.at("topology");
        if (t.is_string()) {
            if (t.get<std::string>() != "symbolic") {
                throw usage_error("record: unknown topology tag " + t.get<std::string>());
            }
            r.topology = SymbolicTopology{};
        } else if (t.is_object()) {
            NumericTopology num;
            if (t.contains("er")) {
                num.er = t.at("er").get<long>();
            }
            num.ec = t.at("ec").get<long>();
            r.topology = num;
        }
        r.order = j.at("order").get<std::size_t>();
        for (const auto& entry : j.at("coefficients")) {
            r.coefficients.emplace_back(entry.at(0).get<std::size_t>(), entry.at(1).get<std::string>());
        }
        if (j.contains("checks")) {
            r.checks.emplace();
            for (const auto& entry : j.at("checks")) {
                r.checks->emplace_back(entry.at(0).get<std::size_t>(), entry.at(1).get<bool>());
            }
        }
        if (j.contains("curve")) {
            const auto& c = j.at("curve");
            r.curve = CurveInfo{c.at("cross").get<unsigned>(), c.at("solitary").get<unsigned>(),
                                c.at("pairs").get<unsigned>(), c.at("sign").get<int>()};
        }
        return r;
    } catch (const json::exception& e) {
        throw usage_error(std::string("record: malformed JSON record: ") + e.what());
    }
}

inline std::string render(const OutputRecord& r) { return to_json(r).dump(); }

inline OutputRecord parse_record(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw usage_error(std::string("record: invalid JSON: ") + e.what());
    }
    return from_json(j);
}

} // namespace realgz::cli
