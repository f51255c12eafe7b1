#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gemq/constants.hpp"
#include "gemq/errors.hpp"
#include "gemq/units.hpp"

// Scenario configuration: flat JSON with typed value+unit strings, an
// optional in-config sweep, and data-driven claim checks.
namespace gemq::cli {

using json = nlohmann::json;

enum class ScenarioKind { field, uncertainty, witness, sagnac };

inline std::string to_string(ScenarioKind k) {
    switch (k) {
    case ScenarioKind::field: return "field";
    case ScenarioKind::uncertainty: return "uncertainty";
    case ScenarioKind::witness: return "witness";
    case ScenarioKind::sagnac: return "sagnac";
    }
    return "?";
}

inline ScenarioKind scenario_kind_from_string(const std::string& s) {
    if (s == "field") return ScenarioKind::field;
    if (s == "uncertainty") return ScenarioKind::uncertainty;
    if (s == "witness") return ScenarioKind::witness;
    if (s == "sagnac") return ScenarioKind::sagnac;
    throw parse_error("field 'scenario': unknown kind '" + s +
                      "' (expected field, uncertainty, witness or sagnac)");
}

struct ParamSpec {
    const char* name;
    Dimension dim;
    const char* default_value; // value+unit string
};

// Declared inputs per scenario kind, in display order.
inline const std::vector<ParamSpec>& param_schema(ScenarioKind kind) {
    static const std::vector<ParamSpec> field_params = {
        {"mass", dims::mass, "1e-12 kg"},
        {"separation", dims::length, "1e-6 m"},
        {"speed", dims::speed, "1e6 m/s"},
    };
    static const std::vector<ParamSpec> uncertainty_params = {
        {"confinement", dims::length, "1e-6 m"},
        {"separation", dims::length, "1e-6 m"},
    };
    static const std::vector<ParamSpec> witness_params = {
        {"omega", dims::frequency, "1 rad/s"},
        {"f1", dims::frequency, "0.1 rad/s"},
        {"f2", dims::frequency, "0.1 rad/s"},
        {"omega_t", dims::scalar, "6.283185307179586"},
    };
    static const std::vector<ParamSpec> sagnac_params = {
        {"mass", dims::mass, "1e-26 kg"},
        {"area", dims::area, "1e-4 m^2"},
        {"omega1", dims::frequency, "0 rad/s"},
        {"omega2", dims::frequency, "8.282587682425099e-05 rad/s"},
        {"c1_re", dims::scalar, "0.7071067811865476"},
        {"c1_im", dims::scalar, "0"},
        {"c2_re", dims::scalar, "0.7071067811865476"},
        {"c2_im", dims::scalar, "0"},
    };
    switch (kind) {
    case ScenarioKind::field: return field_params;
    case ScenarioKind::uncertainty: return uncertainty_params;
    case ScenarioKind::witness: return witness_params;
    case ScenarioKind::sagnac: return sagnac_params;
    }
    return field_params;
}

struct SweepSpec {
    std::string param;
    Quantity min;
    Quantity max;
    int count = 2;
    bool log_spacing = false;
};

enum class ClaimKind {
    decade_gap,  // |log10(computed/expected)| <= tolerance_decades
    upper_bound, // computed <= expected
    relative     // |computed - expected| <= rel_tol * |expected|
};

/// A data-driven check of a computed report column against an expected
/// scale or value. Tolerances live here, in config, not in code.
struct Claim {
    std::string label;
    std::string target; // report column name
    Quantity expected;
    ClaimKind kind = ClaimKind::decade_gap;
    double tolerance_decades = 0.0;
    double rel_tol = 0.0;
};

struct ScenarioConfig {
    std::string name;
    std::string description;
    ScenarioKind kind = ScenarioKind::field;
    ConventionName convention = ConventionName::paper_literal;
    std::map<std::string, Quantity> params;
    std::optional<SweepSpec> sweep;
    std::vector<Claim> claims;

    const Quantity& param(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end()) throw parse_error("missing parameter '" + key + "'");
        return it->second;
    }
};

namespace detail {

inline const ParamSpec& find_param_spec(ScenarioKind kind, const std::string& name) {
    for (const auto& spec : param_schema(kind))
        if (name == spec.name) return spec;
    throw parse_error("field '" + name + "': not a parameter of the " + to_string(kind) +
                      " scenario");
}

inline std::string json_string(const json& j, const std::string& field) {
    if (!j.is_string()) throw parse_error("field '" + field + "': expected a string");
    return j.get<std::string>();
}

inline Claim parse_claim(const json& j, std::size_t index) {
    const std::string where = "claims[" + std::to_string(index) + "]";
    if (!j.is_object()) throw parse_error("field '" + where + "': expected an object");
    Claim c;
    for (const auto& [key, value] : j.items()) {
        if (key == "label") c.label = json_string(value, where + ".label");
        else if (key == "target") c.target = json_string(value, where + ".target");
        else if (key == "expected")
            c.expected = parse_quantity(json_string(value, where + ".expected"));
        else if (key == "kind") {
            const std::string k = json_string(value, where + ".kind");
            if (k == "decade_gap") c.kind = ClaimKind::decade_gap;
            else if (k == "upper_bound") c.kind = ClaimKind::upper_bound;
            else if (k == "relative") c.kind = ClaimKind::relative;
            else throw parse_error("field '" + where + ".kind': unknown claim kind '" + k + "'");
        } else if (key == "tolerance_decades") {
            if (!value.is_number()) throw parse_error("field '" + where +
                                                      ".tolerance_decades': expected a number");
            c.tolerance_decades = value.get<double>();
        } else if (key == "rel_tol") {
            if (!value.is_number())
                throw parse_error("field '" + where + ".rel_tol': expected a number");
            c.rel_tol = value.get<double>();
        } else {
            throw parse_error("field '" + where + "." + key + "': unknown key");
        }
    }
    if (c.label.empty()) throw parse_error("field '" + where + ".label': required");
    if (c.target.empty()) throw parse_error("field '" + where + ".target': required");
    return c;
}

inline SweepSpec parse_sweep(const json& j, ScenarioKind kind) {
    if (!j.is_object()) throw parse_error("field 'sweep': expected an object");
    SweepSpec s;
    std::string min_str, max_str;
    for (const auto& [key, value] : j.items()) {
        if (key == "param") s.param = json_string(value, "sweep.param");
        else if (key == "min") min_str = json_string(value, "sweep.min");
        else if (key == "max") max_str = json_string(value, "sweep.max");
        else if (key == "count") {
            if (!value.is_number_integer())
                throw parse_error("field 'sweep.count': expected an integer");
            s.count = value.get<int>();
        } else if (key == "spacing") {
            const std::string sp = json_string(value, "sweep.spacing");
            if (sp == "linear") s.log_spacing = false;
            else if (sp == "log") s.log_spacing = true;
            else throw parse_error("field 'sweep.spacing': expected 'linear' or 'log'");
        } else {
            throw parse_error("field 'sweep." + key + "': unknown key");
        }
    }
    if (s.param.empty()) throw parse_error("field 'sweep.param': required");
    const ParamSpec& spec = find_param_spec(kind, s.param);
    if (min_str.empty() || max_str.empty())
        throw parse_error("field 'sweep': both min and max are required");
    s.min = parse_quantity_as(min_str, spec.dim, "sweep.min");
    s.max = parse_quantity_as(max_str, spec.dim, "sweep.max");
    if (s.count < 2) throw parse_error("field 'sweep.count': must be at least 2");
    if (s.log_spacing && (s.min.si() <= 0.0 || s.max.si() <= 0.0))
        throw parse_error("field 'sweep.spacing': log spacing needs positive min and max");
    return s;
}

} // namespace detail

/// Parses and validates a scenario config. Every parameter must carry the
/// dimension its schema demands; unknown keys are rejected by name.
inline ScenarioConfig parse_config(const json& j) {
    if (!j.is_object()) throw parse_error("config root: expected a JSON object");
    if (!j.contains("scenario")) throw parse_error("field 'scenario': required");

    ScenarioConfig cfg;
    cfg.kind = scenario_kind_from_string(
        detail::json_string(j.at("scenario"), "scenario"));

    // defaults first, explicit params override below
    for (const auto& spec : param_schema(cfg.kind))
        cfg.params[spec.name] = parse_quantity_as(spec.default_value, spec.dim, spec.name);

    for (const auto& [key, value] : j.items()) {
        if (key == "scenario") continue;
        if (key == "name") cfg.name = detail::json_string(value, "name");
        else if (key == "description") cfg.description = detail::json_string(value, "description");
        else if (key == "convention")
            cfg.convention = convention_from_string(detail::json_string(value, "convention"));
        else if (key == "params") {
            if (!value.is_object()) throw parse_error("field 'params': expected an object");
            for (const auto& [pname, pvalue] : value.items()) {
                const ParamSpec& spec = detail::find_param_spec(cfg.kind, pname);
                cfg.params[pname] =
                    parse_quantity_as(detail::json_string(pvalue, pname), spec.dim, pname);
            }
        } else if (key == "sweep") {
            cfg.sweep = detail::parse_sweep(value, cfg.kind);
        } else if (key == "claims") {
            if (!value.is_array()) throw parse_error("field 'claims': expected an array");
            for (std::size_t i = 0; i < value.size(); ++i)
                cfg.claims.push_back(detail::parse_claim(value[i], i));
        } else {
            throw parse_error("field '" + key + "': unknown key");
        }
    }
    if (cfg.name.empty()) cfg.name = to_string(cfg.kind);
    return cfg;
}

inline ScenarioConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

// Applies a "key=value" override: a parameter name or "convention".
inline void apply_override(ScenarioConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw parse_error("override '" + assignment + "': expected key=value");
    const std::string key = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);
    if (key == "convention") {
        cfg.convention = convention_from_string(value);
        return;
    }
    const ParamSpec& spec = detail::find_param_spec(cfg.kind, key);
    cfg.params[key] = parse_quantity_as(value, spec.dim, key);
}

} // namespace gemq::cli
