#pragma once

#include <string_view>

#include "cyclovortex/dynamics.hpp"

namespace cyclovortex {

/// Sign of the canonical angular momentum of an orbit in the symmetric gauge.
enum class OrbitCategory { Positive, Zero, Negative };

std::string_view to_string(OrbitCategory category);

/// z-components of the angular momenta about the coordinate origin.
/// kinetic == canonical + diamagnetic.
struct AngularMomentumBreakdown {
    double canonical = 0.0;
    double diamagnetic = 0.0;
    double kinetic = 0.0;
};

inline constexpr double default_classify_tol = 1e-9;

/// m (x vy - y vx) + (e B / 2) rho^2. Conserved along exact trajectories.
double canonical_Lz(const ParticleState& state, const PhysicalParams& params);

/// m (x vy - y vx).
double kinetic_Lz(const ParticleState& state, const PhysicalParams& params);

/// (m w / 2) rho^2.
double diamagnetic_Lz(const ParticleState& state, const PhysicalParams& params);

AngularMomentumBreakdown angular_momenta(const ParticleState& state, const PhysicalParams& params);

/// (m/2) w (R^2 - R_cen^2), the time-independent canonical L_z of an orbit.
double orbit_canonical_Lz(const CyclotronOrbit& orbit, const PhysicalParams& params);

/// Zero when |R - R_cen| <= tol * max(R, R_cen, 1), otherwise the sign of R - R_cen.
OrbitCategory classify_orbit(const CyclotronOrbit& orbit, double tol = default_classify_tol);

/// m w R^2 + m w R R_cen cos(w t + theta - alpha), alpha the azimuth of the center.
double predicted_kinetic_Lz(const CyclotronOrbit& orbit, const PhysicalParams& params, double t);

/// Constant term m w R^2 of predicted_kinetic_Lz; equals its average over one period.
double mean_kinetic_Lz(const CyclotronOrbit& orbit, const PhysicalParams& params);

}  // namespace cyclovortex
