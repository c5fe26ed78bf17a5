#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclovortex/dynamics.hpp"

namespace cyclovortex {

struct RunConfig;

/// Radial (n >= 0) and azimuthal (l) quantum numbers of a Landau state.
struct LandauIndex {
    int n = 0;
    int l = 0;
};

/// Rotational energy (1/2) w L_kin carried by kinetic angular momentum L_kin.
double energy_from_kinetic_Lz(double kinetic_lz, const PhysicalParams& params);

/// (n + (|l| + l)/2 + 1/2) hbar w. Throws ValidationError for n < 0.
double landau_energy(const LandauIndex& idx, const PhysicalParams& params);

/// Kinetic angular momentum implied by a Landau energy, 2 E / w.
double landau_kinetic_Lz(const LandauIndex& idx, const PhysicalParams& params);

/// Radius of the centered classical orbit with m w R^2 = (2n + 2l + 1) hbar.
/// Needs l >= 0 and w > 0 (ValidationError otherwise).
double correspondence_radius(const LandauIndex& idx, const PhysicalParams& params);

/// |energy_2d(centered orbit at correspondence_radius) - landau_energy|.
double correspondence_residual(const LandauIndex& idx, const PhysicalParams& params);

/// Reading used for the azimuthal term of the Landau spectrum; emitted in reports.
inline constexpr const char* landau_interpretation =
    "azimuthal term read as l/2: E = (n + (|l| + l)/2 + 1/2) hbar omega_c";

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Measured deviation; NaN when the check could not be evaluated.
    double residual = 0.0;
    double tolerance = 0.0;
    /// Error raised while evaluating the check, if any.
    std::optional<std::string> error;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::map<std::string, std::string> metadata;

    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

/// Runs the full property catalog for the configuration. Checks are evaluated
/// and reported in a fixed order; a check that throws is reported as failed
/// with the error message.
VerifyReport verify_all(const RunConfig& config);

std::string report_to_json(const VerifyReport& report);
/// Throws ParseError on malformed input.
VerifyReport report_from_json(const std::string& text);

bool operator==(const CheckResult& a, const CheckResult& b);
bool operator==(const VerifyReport& a, const VerifyReport& b);

}  // namespace cyclovortex
