#pragma once

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gemq/gem_fields.hpp"
#include "gemq/scenario.hpp"
#include "gemq/sagnac.hpp"
#include "gemq/uncertainty.hpp"
#include "gemq/units.hpp"
#include "gemq/witness.hpp"

// Evaluates scenario configs into report rows, checks the config's claims,
// and renders the deterministic report/CSV artifacts.
namespace gemq::cli {

struct ReportCell {
    std::string column;
    double value = 0.0;
    std::string unit;       // "" for dimensionless
    std::string provenance; // operation that produced the value
};

struct ReportRow {
    std::vector<ReportCell> cells;
    std::string provenance; // scenario-level operation + convention

    const ReportCell& cell(const std::string& column) const {
        for (const auto& c : cells)
            if (c.column == column) return c;
        throw parse_error("unknown report column '" + column + "'");
    }
};

struct ClaimOutcome {
    Claim claim;
    double computed = 0.0;
    std::string computed_unit;
    double gap_decades = 0.0; // log10(computed/expected)
    double rel_err = 0.0;
    bool agree = false;
};

struct RunResult {
    ScenarioConfig config;
    ReportRow base;
    std::vector<ReportRow> sweep_rows;
    std::vector<ClaimOutcome> claims;
    std::vector<std::string> warnings;
    std::vector<std::string> notes; // base-row commentary, deterministic
    double identity_paper = 0.0;    // eps_g mu_g c^2 under each convention,
    double identity_maxwell = 0.0;  // displayed in every report
};

namespace detail {

inline ReportCell cell(std::string column, const Quantity& q, std::string provenance) {
    ReportCell c;
    c.column = std::move(column);
    c.value = q.si();
    c.unit = q.is_dimensionless() ? "" : q.dim().str();
    c.provenance = std::move(provenance);
    return c;
}

inline ReportCell cell(std::string column, double v, std::string unit, std::string provenance) {
    ReportCell c;
    c.column = std::move(column);
    c.value = v;
    c.unit = std::move(unit);
    c.provenance = std::move(provenance);
    return c;
}

inline ReportRow field_row(const ScenarioConfig& cfg, const Constants& k,
                           std::vector<std::string>* warnings,
                           std::vector<std::string>* notes) {
    const GemConvention conv = gem_constants(k, cfg.convention);
    const auto rep = fields::two_mass_scenario(cfg.param("mass"), cfg.param("separation"),
                                               cfg.param("speed"), conv, k);
    if (rep.relativistic_warning && warnings)
        warnings->push_back("speed exceeds 0.1c, non-relativistic model is strained");
    if (notes)
        notes->push_back(
            "f_magnetic uses the parallel line-current ratio eps_g*mu_g*v^2, not the "
            "point-source closure");

    ReportRow row;
    row.provenance = "gem_fields.two_mass_scenario[" + gemq::to_string(cfg.convention) + "]";
    row.cells = {
        cell("mass_kg", rep.mass, "input"),
        cell("separation_m", rep.separation, "input"),
        cell("speed_m_per_s", rep.speed, "input"),
        cell("e_field_paper_m_per_s2", rep.e_field_paper, "gem_fields.electric_like_field"),
        cell("e_field_newtonian_m_per_s2", rep.e_field_newtonian,
             "gem_fields.electric_like_field[newtonian]"),
        cell("b_field_per_s", rep.sample.b_g, "gem_fields.two_mass_scenario"),
        cell("h_field_kg_per_m_s", rep.sample.h_g, "gem_fields.two_mass_scenario"),
        cell("f_electric_paper_N", rep.f_electric_paper, "gem_fields.lorentz_force[electric]"),
        cell("f_electric_newtonian_N", rep.f_electric_newtonian,
             "gem_fields.lorentz_force[electric,newtonian]"),
        cell("f_magnetic_N", rep.f_magnetic, "gem_fields.force_ratio*f_electric_paper"),
        cell("force_ratio", rep.ratio, "gem_fields.force_ratio"),
    };
    return row;
}

inline ReportRow uncertainty_row(const ScenarioConfig& cfg, const Constants& k) {
    namespace unc = gemq::uncertainty;
    const Quantity L = cfg.param("confinement");
    const Quantity r = cfg.param("separation");
    const auto em = unc::em_product_bound(L, k);
    const auto metric = unc::metric_uncertainty(L, k);
    const auto christoffel = unc::christoffel_uncertainty(L, k);
    const auto product = unc::christoffel_product_bound(L, k);
    const auto gem = unc::gem_product_bound(r, L, k);

    ReportRow row;
    row.provenance = "uncertainty.bounds[codata]";
    row.cells = {
        cell("confinement_m", L, "input"),
        cell("separation_m", r, "input"),
        cell("em_product_bound_si", em.unity_indicator, em.value.dim().str(),
             "uncertainty.em_product_bound"),
        cell("metric_uncertainty", metric.value, "uncertainty.metric_uncertainty"),
        cell("christoffel_uncertainty_per_m", christoffel.value,
             "uncertainty.christoffel_uncertainty"),
        cell("christoffel_product_bound_per_m2", product.value,
             "uncertainty.christoffel_product_bound"),
        cell("gem_product_bound_si", gem.unity_indicator, gem.value.dim().str(),
             "uncertainty.gem_product_bound"),
        cell("planck_length_m", planck_length(k), "quantities.planck_length"),
        cell("unity_scale_m", unc::unity_scale(k), "uncertainty.unity_scale"),
    };
    return row;
}

inline ReportRow witness_row(const ScenarioConfig& cfg, const Constants&,
                             std::vector<std::string>* notes) {
    namespace wit = gemq::witness;
    const auto mode = wit::FieldMode::make(cfg.param("omega"), cfg.param("f1"), cfg.param("f2"));
    const double omega_t = cfg.param("omega_t").si();
    if (omega_t < 0.0) throw domain_error("omega_t must be non-negative");
    const Quantity t = Quantity::dimensionless(omega_t) / mode.omega;

    const auto state = wit::reduced_state(mode, t);
    if (notes) {
        if (const auto entropy = wit::entanglement_entropy(state))
            notes->push_back("reduced state is pure; entanglement entropy " +
                             format_double(*entropy) + " bits");
    }
    ReportRow row;
    row.provenance = "witness.reduced_state[closed_form]";
    row.cells = {
        cell("omega_t", omega_t, "", "input"),
        cell("entangling_phase_rad", wit::entangling_phase(mode, t), "",
             "witness.entangling_phase"),
        cell("negativity", wit::negativity(state), "", "witness.negativity"),
        cell("purity", state.purity(), "", "witness.reduced_state"),
    };
    return row;
}

inline ReportRow sagnac_row(const ScenarioConfig& cfg, const Constants& k) {
    namespace sg = gemq::sagnac;
    const std::complex<double> c1(cfg.param("c1_re").si(), cfg.param("c1_im").si());
    const std::complex<double> c2(cfg.param("c2_re").si(), cfg.param("c2_im").si());
    const auto scenario = sg::SagnacScenario::make(cfg.param("omega1"), cfg.param("omega2"), c1,
                                                   c2, cfg.param("area"), cfg.param("mass"));
    const auto state = sg::joint_state(scenario, k);
    const double overlap = std::cos((state.phi1 - state.phi2) / 2.0);

    ReportRow row;
    row.provenance = "sagnac.joint_state";
    row.cells = {
        cell("omega1_rad_per_s", scenario.omega1, "sagnac input"),
        cell("omega2_rad_per_s", scenario.omega2, "sagnac input"),
        cell("phase1_rad", state.phi1, "", "sagnac.sagnac_phase"),
        cell("phase2_rad", state.phi2, "", "sagnac.sagnac_phase"),
        cell("phase_diff_rad", state.phi1 - state.phi2, "", "sagnac.sagnac_phase"),
        cell("branch_overlap", overlap, "", "sagnac.joint_state"),
        cell("entropy_bits", sg::rotor_particle_entanglement(state), "",
             "sagnac.rotor_particle_entanglement"),
    };
    return row;
}

inline ReportRow compute_row(const ScenarioConfig& cfg, const Constants& k,
                             std::vector<std::string>* warnings,
                             std::vector<std::string>* notes) {
    switch (cfg.kind) {
    case ScenarioKind::field: return field_row(cfg, k, warnings, notes);
    case ScenarioKind::uncertainty: return uncertainty_row(cfg, k);
    case ScenarioKind::witness: return witness_row(cfg, k, notes);
    case ScenarioKind::sagnac: return sagnac_row(cfg, k);
    }
    throw parse_error("unknown scenario kind");
}

inline std::vector<Quantity> sweep_values(const SweepSpec& sweep) {
    std::vector<Quantity> out;
    out.reserve(static_cast<std::size_t>(sweep.count));
    const double lo = sweep.log_spacing ? std::log(sweep.min.si()) : sweep.min.si();
    const double hi = sweep.log_spacing ? std::log(sweep.max.si()) : sweep.max.si();
    for (int i = 0; i < sweep.count; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(sweep.count - 1);
        const double v = lo + frac * (hi - lo);
        out.push_back(Quantity::scalar(sweep.log_spacing ? std::exp(v) : v, sweep.min.dim()));
    }
    return out;
}

inline ClaimOutcome evaluate_claim(const Claim& claim, const ReportRow& base) {
    const ReportCell& target = base.cell(claim.target);
    ClaimOutcome out;
    out.claim = claim;
    out.computed = target.value;
    out.computed_unit = target.unit;

    const double expected = claim.expected.si();
    out.gap_decades = (out.computed > 0.0 && expected > 0.0)
                          ? std::log10(out.computed / expected)
                          : std::numeric_limits<double>::quiet_NaN();
    out.rel_err = expected != 0.0 ? std::abs(out.computed - expected) / std::abs(expected)
                                  : std::abs(out.computed);
    switch (claim.kind) {
    case ClaimKind::decade_gap:
        out.agree = std::isfinite(out.gap_decades) &&
                    std::abs(out.gap_decades) <= claim.tolerance_decades;
        break;
    case ClaimKind::upper_bound:
        out.agree = out.computed <= expected;
        break;
    case ClaimKind::relative:
        out.agree = out.rel_err <= claim.rel_tol;
        break;
    }
    return out;
}

} // namespace detail

inline RunResult run_scenario(const ScenarioConfig& cfg,
                              const Constants& k = Constants::codata()) {
    RunResult result;
    result.config = cfg;
    result.identity_paper = convention_identity(k, ConventionName::paper_literal);
    result.identity_maxwell = convention_identity(k, ConventionName::maxwell_consistent);
    result.base = detail::compute_row(cfg, k, &result.warnings, &result.notes);

    if (cfg.sweep) {
        for (const Quantity& v : detail::sweep_values(*cfg.sweep)) {
            ScenarioConfig point = cfg;
            point.sweep.reset();
            point.params[cfg.sweep->param] = v;
            result.sweep_rows.push_back(detail::compute_row(point, k, nullptr, nullptr));
        }
    }

    for (const Claim& claim : cfg.claims)
        result.claims.push_back(detail::evaluate_claim(claim, result.base));
    return result;
}

// ---------------------------------------------------------------------------
// Rendering. Both artifacts are byte-deterministic for a fixed config:
// shortest round-trip decimals, LF line endings, no timestamps (timestamps
// go to the sidecar metadata file only).

inline std::string render_csv(const RunResult& result) {
    const std::vector<ReportRow>& rows =
        result.sweep_rows.empty() ? std::vector<ReportRow>{result.base} : result.sweep_rows;
    std::string out;
    for (std::size_t i = 0; i < rows.front().cells.size(); ++i) {
        if (i) out += ',';
        out += rows.front().cells[i].column;
    }
    out += ",provenance\n";
    for (const ReportRow& row : rows) {
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            if (i) out += ',';
            out += format_double(row.cells[i].value);
        }
        out += ',';
        out += row.provenance;
        out += '\n';
    }
    return out;
}

inline std::string render_report(const RunResult& result) {
    const ScenarioConfig& cfg = result.config;
    std::string out;
    auto line = [&out](const std::string& s) {
        out += s;
        out += '\n';
    };

    line("scenario: " + cfg.name + " (" + to_string(cfg.kind) + ")");
    if (!cfg.description.empty()) line("description: " + cfg.description);
    line("convention: " + gemq::to_string(cfg.convention));
    line("");

    line("inputs");
    for (const auto& spec : param_schema(cfg.kind))
        line("  " + std::string(spec.name) + " = " + format_quantity(cfg.param(spec.name)));
    line("");

    line("results");
    for (const auto& c : result.base.cells) {
        std::string s = "  " + c.column + " = " + format_double(c.value);
        if (!c.unit.empty()) s += " " + c.unit;
        s += "   [" + c.provenance + "]";
        line(s);
    }
    line("");

    if (!result.notes.empty()) {
        line("notes");
        for (const auto& n : result.notes) line("  " + n);
        line("");
    }

    line("convention identity eps_g*mu_g*c^2 (1 restores the wave-speed relation)");
    line("  paper_literal      = " + format_double(result.identity_paper) + " (1/pi)");
    line("  maxwell_consistent = " + format_double(result.identity_maxwell));
    line("");

    if (!cfg.claims.empty()) {
        line("claims (SI-numeric comparisons; tolerances are config data)");
        for (const auto& c : result.claims) {
            line(std::string("  [") + (c.agree ? "agree" : "disagree") + "] " + c.claim.label);
            std::string detail = "      " + c.claim.target + " = " + format_double(c.computed);
            if (!c.computed_unit.empty()) detail += " " + c.computed_unit;
            detail += "  vs expected " + format_quantity(c.claim.expected);
            line(detail);
            std::string verdict = "      gap ";
            verdict += std::isfinite(c.gap_decades) ? format_fixed(c.gap_decades, 4) : "n/a";
            verdict += " decades";
            switch (c.claim.kind) {
            case ClaimKind::decade_gap:
                verdict += ", tolerance " + format_fixed(c.claim.tolerance_decades, 4) + " decades";
                break;
            case ClaimKind::upper_bound:
                verdict += ", upper bound";
                break;
            case ClaimKind::relative:
                verdict += ", relative error " + format_double(c.rel_err) + " vs tolerance " +
                           format_double(c.claim.rel_tol);
                break;
            }
            line(verdict);
        }
        line("");
    }

    if (!result.warnings.empty()) {
        line("warnings");
        for (const auto& w : result.warnings) line("  " + w);
        line("");
    }

    if (cfg.sweep) {
        line("sweep: " + cfg.sweep->param + " from " + format_quantity(cfg.sweep->min) + " to " +
             format_quantity(cfg.sweep->max) + ", " + std::to_string(cfg.sweep->count) +
             " points, " + (cfg.sweep->log_spacing ? "log" : "linear") + " spacing (see data.csv)");
    }
    return out;
}

struct RunArtifacts {
    std::filesystem::path report;
    std::filesystem::path csv;
    std::filesystem::path meta;
};

// Writes report.txt, data.csv and the run_meta.txt sidecar (the only file
// that carries a timestamp).
inline RunArtifacts write_artifacts(const RunResult& result, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    RunArtifacts paths;
    paths.report = out_dir / "report.txt";
    paths.csv = out_dir / "data.csv";
    paths.meta = out_dir / "run_meta.txt";

    {
        std::ofstream f(paths.report, std::ios::binary);
        f << render_report(result);
    }
    {
        std::ofstream f(paths.csv, std::ios::binary);
        f << render_csv(result);
    }
    {
        const auto now = std::chrono::system_clock::now();
        const std::time_t now_t = std::chrono::system_clock::to_time_t(now);
        char stamp[64];
        std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now_t));
        std::ofstream f(paths.meta, std::ios::binary);
        f << "scenario: " << result.config.name << '\n'
          << "generated_at: " << stamp << '\n'
          << "rows: "
          << (result.sweep_rows.empty() ? std::size_t{1} : result.sweep_rows.size()) << '\n';
    }
    return paths;
}

} // namespace gemq::cli
