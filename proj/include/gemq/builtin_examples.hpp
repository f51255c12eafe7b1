#pragma once

#include <string>
#include <vector>

#include "gemq/scenario.hpp"

namespace gemq::cli {

struct BuiltinExample {
    std::string name;
    std::string config_json; // exactly what `examples --write` emits
};

// One bundled scenario per headline estimate. Claim tolerances are data
// here, not code, so the comparison ledger stays inspectable.
inline const std::vector<BuiltinExample>& builtin_examples() {
    static const std::vector<BuiltinExample> examples = {
        {"micron-em-unity", R"({
  "name": "micron-em-unity",
  "description": "electromagnetic uncertainty product at micron confinement, where it reaches order unity",
  "scenario": "uncertainty",
  "params": {
    "confinement": "1e-6 m",
    "separation": "1e-6 m"
  },
  "sweep": { "param": "confinement", "min": "1e-9 m", "max": "1e-3 m", "count": 25, "spacing": "log" },
  "claims": [
    {
      "label": "electromagnetic product bound is comparable to unity at micron confinement",
      "target": "em_product_bound_si",
      "expected": "1",
      "kind": "decade_gap",
      "tolerance_decades": 2.0
    },
    {
      "label": "connection product bound at micron confinement",
      "target": "christoffel_product_bound_per_m2",
      "expected": "2.6122803023742777e-46 m^-2",
      "kind": "relative",
      "rel_tol": 1e-9
    }
  ]
})"},
        {"nanogram-forces", R"({
  "name": "nanogram-forces",
  "description": "electric-like and magnetic-like forces between nanogram masses a micron apart at 1e6 m/s",
  "scenario": "field",
  "convention": "maxwell_consistent",
  "params": {
    "mass": "1e-12 kg",
    "separation": "1e-6 m",
    "speed": "1e6 m/s"
  },
  "sweep": { "param": "speed", "min": "1e4 m/s", "max": "1e7 m/s", "count": 25, "spacing": "log" },
  "claims": [
    {
      "label": "electric-like force sits at the yoctonewton scale",
      "target": "f_electric_newtonian_N",
      "expected": "1e-24 N",
      "kind": "decade_gap",
      "tolerance_decades": 3.0
    },
    {
      "label": "electric-like force value",
      "target": "f_electric_newtonian_N",
      "expected": "6.674299999999999e-23 N",
      "kind": "relative",
      "rel_tol": 1e-3
    },
    {
      "label": "magnetic-like force at least three decades below the electric-like force",
      "target": "force_ratio",
      "expected": "1e-3",
      "kind": "upper_bound"
    }
  ]
})"},
        {"unity-scale", R"({
  "name": "unity-scale",
  "description": "confinement scale where the connection product bound crosses unity, below nuclear size",
  "scenario": "uncertainty",
  "params": {
    "confinement": "4.0202674338015744e-18 m",
    "separation": "4.0202674338015744e-18 m"
  },
  "claims": [
    {
      "label": "unity crossover scale sits below nuclear dimensions",
      "target": "unity_scale_m",
      "expected": "1e-15 m",
      "kind": "upper_bound"
    },
    {
      "label": "unity crossover scale value",
      "target": "unity_scale_m",
      "expected": "4.0203e-18 m",
      "kind": "relative",
      "rel_tol": 1e-3
    },
    {
      "label": "connection product bound is unity at the crossover scale",
      "target": "christoffel_product_bound_per_m2",
      "expected": "1 m^-2",
      "kind": "relative",
      "rel_tol": 1e-10
    }
  ]
})"},
        {"witness-revival", R"({
  "name": "witness-revival",
  "description": "two-mass witness at field revival: pure reduced state with closed-form negativity",
  "scenario": "witness",
  "params": {
    "omega": "1 rad/s",
    "f1": "0.1 rad/s",
    "f2": "0.1 rad/s",
    "omega_t": "6.283185307179586"
  },
  "sweep": { "param": "omega_t", "min": "0", "max": "12.566370614359172", "count": 64, "spacing": "linear" },
  "claims": [
    {
      "label": "masses are entangled at revival with the closed-form negativity",
      "target": "negativity",
      "expected": "0.1243449435824274",
      "kind": "relative",
      "rel_tol": 1e-6
    },
    {
      "label": "reduced state is pure at revival",
      "target": "purity",
      "expected": "1",
      "kind": "relative",
      "rel_tol": 1e-9
    }
  ]
})"},
        {"sagnac-maximal", R"({
  "name": "sagnac-maximal",
  "description": "rotor spun at a superposition of two rates, tuned so the output ports are orthogonal",
  "scenario": "sagnac",
  "params": {
    "mass": "1e-26 kg",
    "area": "1e-4 m^2",
    "omega1": "0 rad/s",
    "omega2": "8.282587682425099e-05 rad/s",
    "c1_re": "0.7071067811865476",
    "c1_im": "0",
    "c2_re": "0.7071067811865476",
    "c2_im": "0"
  },
  "sweep": { "param": "omega2", "min": "0 rad/s", "max": "1.6565175364850198e-04 rad/s", "count": 33, "spacing": "linear" },
  "claims": [
    {
      "label": "equal amplitudes with orthogonal outputs entangle rotor and particle maximally",
      "target": "entropy_bits",
      "expected": "1",
      "kind": "relative",
      "rel_tol": 1e-9
    }
  ]
})"},
    };
    return examples;
}

inline const BuiltinExample& find_builtin_example(const std::string& name) {
    for (const auto& ex : builtin_examples())
        if (ex.name == name) return ex;
    throw parse_error("unknown example '" + name + "' (run `gemq examples` for the catalog)");
}

// Default config per scenario kind when no --config is given.
inline const BuiltinExample& default_example(ScenarioKind kind) {
    switch (kind) {
    case ScenarioKind::field: return find_builtin_example("nanogram-forces");
    case ScenarioKind::uncertainty: return find_builtin_example("micron-em-unity");
    case ScenarioKind::witness: return find_builtin_example("witness-revival");
    case ScenarioKind::sagnac: return find_builtin_example("sagnac-maximal");
    }
    return find_builtin_example("nanogram-forces");
}

} // namespace gemq::cli
