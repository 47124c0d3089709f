// json_io.hpp -- JSON forms of colorings, classifications, parameter
// reports, additivity checks and gap reports. Uses ordered_json throughout
// so that serialized reports are byte-stable across runs.
#pragma once

#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "fallcol/coloring.hpp"
#include "fallcol/solvers.hpp"
#include "fallcol/theorems.hpp"

namespace fallcol {

using json = nlohmann::ordered_json;

// Coloring files: {"k": int, "colors": [int,...]} with 1-based colors in
// the graph's vertex order.
inline json coloring_to_json(const Coloring& c) {
    return json{{"k", c.k}, {"colors", c.colors}};
}

inline Coloring coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("colors") ||
        !j["k"].is_number_integer() || !j["colors"].is_array())
        throw std::runtime_error("coloring json: expected {\"k\": int, \"colors\": [int,...]}");
    Coloring c;
    c.k = j["k"].get<int>();
    for (const auto& v : j["colors"]) {
        if (!v.is_number_integer())
            throw std::runtime_error("coloring json: colors must be integers");
        c.colors.push_back(v.get<int>());
    }
    return c;
}

inline Coloring load_coloring(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open coloring file: " + file);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("coloring json: " + std::string(e.what()));
    }
    return coloring_from_json(j);
}

inline void save_coloring(const std::string& file, const Coloring& c) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write coloring file: " + file);
    out << coloring_to_json(c).dump(2) << "\n";
}

inline json classification_to_json(const ColoringClass& cc, int k) {
    return json{{"k", k},
                {"proper", cc.proper},
                {"fall", cc.fall},
                {"b_coloring", cc.b_coloring},
                {"grundy", cc.grundy},
                {"partial_grundy", cc.partial_grundy},
                {"complete", cc.complete},
                {"colorful", cc.colorful_set},
                {"grundy_vertices", cc.grundy_set},
                {"used_colors", cc.used_colors}};
}

// Report JSON: top-level keys graph / parameters / witnesses / bounds_used /
// status, parameter keys in chain order.
inline json report_to_json(const ParameterReport& rep) {
    json parameters = json::object();
    json witnesses = json::object();
    json bounds = json::object();
    json status = json::object();

    auto put_scalar = [&](const char* name, const std::optional<SolveResult>& r) {
        if (!r) return;
        if (r->status == SolveStatus::Timeout)
            parameters[name] = nullptr;
        else
            parameters[name] = r->value;
        if (r->witness) witnesses[name] = coloring_to_json(*r->witness);
        bounds[name] = json::array({r->lower_bound, r->upper_bound});
        status[name] = to_string(r->status);
    };

    put_scalar("chi", rep.chi);
    if (rep.fall) {
        parameters["fall_spectrum"] = rep.fall->values;
        if (rep.chi_f()) {
            parameters["chi_f"] = *rep.chi_f();
            parameters["psi_f"] = *rep.psi_f();
            witnesses["chi_f"] = coloring_to_json(rep.fall->witnesses.at(*rep.chi_f()));
            witnesses["psi_f"] = coloring_to_json(rep.fall->witnesses.at(*rep.psi_f()));
        }
        bounds["fall_spectrum"] = json::array({1, rep.fall->searched_max});
        status["fall_spectrum"] = to_string(rep.fall->status);
    }
    put_scalar("phi", rep.phi);
    put_scalar("gamma", rep.gamma);
    put_scalar("partial_gamma", rep.partial_gamma);
    put_scalar("psi", rep.psi);

    return json{{"graph", json{{"n", rep.n}, {"m", rep.m}, {"name", rep.graph_name}}},
                {"parameters", parameters},
                {"witnesses", witnesses},
                {"bounds_used", bounds},
                {"status", status}};
}

inline json additivity_to_json(const AdditivityCheck& c, const std::string& parts_label) {
    return json{{"parts", parts_label},
                {"parameter", to_string(c.parameter)},
                {"lhs", c.lhs},
                {"rhs", c.rhs},
                {"equal", c.equal},
                {"status", to_string(c.status)}};
}

inline json gap_report_to_json(const GapReport& rep) {
    json entries = json::array();
    for (const GapEntry& e : rep.entries)
        entries.push_back(json{{"step", e.step},
                               {"graph", e.graph},
                               {"param_low", e.param_low},
                               {"param_high", e.param_high},
                               {"gap", e.gap},
                               {"status", to_string(e.status)},
                               {"notes", e.notes}});
    return json{{"epsilon", rep.epsilon}, {"entries", entries}};
}

}  // namespace fallcol
