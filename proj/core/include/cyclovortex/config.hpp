#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cyclovortex/dynamics.hpp"
#include "cyclovortex/ensemble.hpp"

namespace cyclovortex {

/// Named geometry presets for the three orbit categories and the aligned vortex.
enum class Scenario {
    fig1,
    fig1_positive,
    fig1_zero,
    fig1_negative,
    fig2,
    fig2_positive,
    fig2_zero,
    fig2_negative,
    fig3,
};

std::string_view to_string(Scenario scenario);
std::optional<Scenario> scenario_from_string(std::string_view name);

struct ParamsConfig {
    double mass = 1.0;
    double charge = -1.0;
    double field = 1.0;
    double hbar = 1.0;

    PhysicalParams physical() const { return PhysicalParams(mass, charge, field, hbar); }
};

struct GeometryConfig {
    double radius = 1.0;
    double center_distance = 2.0;
    std::size_t n_orbits = 8;
    std::string phase_mode = "uniform";  ///< uniform | aligned | explicit | random
    std::size_t n_per_orbit = 16;
    double global_phase = 0.0;
    std::vector<std::vector<double>> phases;  ///< explicit mode only
};

struct TimeConfig {
    double t_max = two_pi;
    std::size_t n_steps = 256;

    double dt() const { return t_max / static_cast<double>(n_steps); }
    std::vector<double> grid() const;
};

struct AnalysisConfig {
    std::size_t n_bins = 20;
    std::size_t t_samples = 32;
    double fd_step = 1e-4;
    std::uint64_t seed = 42;
    std::size_t winding_samples = 4096;
    std::size_t rk4_steps_per_period = 1024;
    double classify_tol = 1e-9;
    std::size_t property_samples = 1000;
    int landau_n_max = 1;
    int landau_l_min = -1;
    int landau_l_max = 1;
    Method method = Method::analytic;  ///< propagation used by the orbit command
};

/// One geometry to run: label plus orbit radius and center distance.
struct GeometryCase {
    std::string label;
    double radius = 0.0;
    double center_distance = 0.0;
};

struct RunConfig {
    ParamsConfig params;
    GeometryConfig geometry;
    TimeConfig time;
    AnalysisConfig analysis;
    std::optional<Scenario> scenario;
    /// Keys set explicitly by the document or overrides (canonical "section.key" form).
    std::set<std::string> explicit_keys;

    /// Geometries selected by the scenario: three for fig1/fig2 unless R or
    /// R_cen were overridden, one otherwise.
    std::vector<GeometryCase> cases() const;

    /// Phase mode described by the geometry section.
    PhaseMode phase_mode() const;
};

/// Parses a `key = value` document with optional [params], [geometry], [time]
/// and [analysis] sections and `#` comments, then applies `overrides`
/// ("key=value" or "section.key=value", later entries win).
///
/// A scenario preset is applied first and individual keys override it.
/// Throws ParseError for syntax errors and unknown keys, ValidationError for
/// values that violate a constraint.
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

/// Re-checks every numeric constraint; throws ValidationError.
void validate(const RunConfig& config);

/// Sets every geometry field of the preset.
void apply_scenario(RunConfig& config, Scenario scenario);

}  // namespace cyclovortex
