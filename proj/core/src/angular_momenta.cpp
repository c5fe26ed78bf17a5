#include "cyclovortex/angular_momenta.hpp"

#include <algorithm>

#include "cyclovortex/errors.hpp"

namespace cyclovortex {

std::string_view to_string(OrbitCategory category) {
    switch (category) {
        case OrbitCategory::Positive: return "positive";
        case OrbitCategory::Zero: return "zero";
        case OrbitCategory::Negative: return "negative";
    }
    return "unknown";
}

double canonical_Lz(const ParticleState& state, const PhysicalParams& params) {
    return kinetic_Lz(state, params) +
           0.5 * params.charge() * params.field() * state.rho_squared();
}

double kinetic_Lz(const ParticleState& state, const PhysicalParams& params) {
    return params.mass() * (state.x * state.vy - state.y * state.vx);
}

double diamagnetic_Lz(const ParticleState& state, const PhysicalParams& params) {
    return 0.5 * params.mass() * params.omega_c() * state.rho_squared();
}

AngularMomentumBreakdown angular_momenta(const ParticleState& state, const PhysicalParams& params) {
    return AngularMomentumBreakdown{
        .canonical = canonical_Lz(state, params),
        .diamagnetic = diamagnetic_Lz(state, params),
        .kinetic = kinetic_Lz(state, params),
    };
}

double orbit_canonical_Lz(const CyclotronOrbit& orbit, const PhysicalParams& params) {
    const double r2 = orbit.radius * orbit.radius;
    const double c2 = orbit.x0 * orbit.x0 + orbit.y0 * orbit.y0;
    return 0.5 * params.mass() * params.omega_c() * (r2 - c2);
}

OrbitCategory classify_orbit(const CyclotronOrbit& orbit, double tol) {
    if (!(tol > 0.0)) throw ValidationError("classification tolerance must be positive");
    const double r = orbit.radius;
    const double rc = orbit.center_distance();
    if (std::abs(r - rc) <= tol * std::max({r, rc, 1.0})) return OrbitCategory::Zero;
    return r > rc ? OrbitCategory::Positive : OrbitCategory::Negative;
}

double predicted_kinetic_Lz(const CyclotronOrbit& orbit, const PhysicalParams& params, double t) {
    const double m = params.mass();
    const double w = params.omega_c();
    const double r = orbit.radius;
    const double phase = w * t + orbit.theta - orbit.center_azimuth();
    return m * w * r * r + m * w * r * orbit.center_distance() * std::cos(phase);
}

double mean_kinetic_Lz(const CyclotronOrbit& orbit, const PhysicalParams& params) {
    return params.mass() * params.omega_c() * orbit.radius * orbit.radius;
}

}  // namespace cyclovortex
