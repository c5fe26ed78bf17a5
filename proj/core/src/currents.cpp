#include "cyclovortex/currents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cyclovortex/errors.hpp"

namespace cyclovortex {

namespace {

constexpr int max_refine_depth = 60;

double azimuth(const ParticleState& s) { return std::atan2(s.y, s.x); }

// Azimuth change between t0 and t1, bisecting while a step turns by more than pi/2.
double resolved_turn(const CyclotronOrbit& orbit, const PhysicalParams& params, double t0,
                     double t1, int depth) {
    const double d = wrap_angle(azimuth(orbit_state(orbit, params, t1)) -
                                azimuth(orbit_state(orbit, params, t0)));
    if (std::abs(d) <= 0.5 * std::numbers::pi || depth >= max_refine_depth) return d;
    const double mid = 0.5 * (t0 + t1);
    return resolved_turn(orbit, params, t0, mid, depth + 1) +
           resolved_turn(orbit, params, mid, t1, depth + 1);
}

}  // namespace

WindingResult winding_angle(const CyclotronOrbit& orbit, const PhysicalParams& params,
                            std::size_t n_samples, double classify_tol) {
    const double w = params.omega_c();
    if (w == 0.0) throw ZeroFieldError();
    if (n_samples < 8) throw ValidationError("winding analysis needs at least 8 samples per period");
    orbit.validate();
    if (orbit.radius == 0.0 && orbit.center_distance() == 0.0) {
        throw DegenerateError("azimuth undefined for a particle resting on the axis");
    }

    const double period = params.period();
    const double h = period / static_cast<double>(n_samples);
    const bool through_origin = classify_orbit(orbit, classify_tol) == OrbitCategory::Zero;

    double t0 = 0.0;
    if (through_origin) {
        // Phase at which the electron is nearest the origin; put it mid-step 0.
        const double passage_phase = orbit.center_azimuth() + std::numbers::pi;
        const double t_pass = wrap_angle(passage_phase - orbit.theta) / w;
        t0 = t_pass - 0.5 * h;
    }

    double total = 0.0;
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double a = t0 + static_cast<double>(k) * h;
        const double b = t0 + static_cast<double>(k + 1) * h;
        if (through_origin && k == 0) {
            // Drop the +-pi jump at the origin, keep the smooth turn.
            const double d = wrap_angle(azimuth(orbit_state(orbit, params, b)) -
                                        azimuth(orbit_state(orbit, params, a)));
            total += wrap_angle(d + std::numbers::pi);
        } else {
            total += resolved_turn(orbit, params, a, b, 0);
        }
    }

    WindingResult out;
    out.delta_phi = total;
    out.mean_omega = total / period;
    out.current = out.mean_omega / two_pi;
    return out;
}

double unwrapped_azimuth_change(const std::vector<ParticleState>& states) {
    double total = 0.0;
    for (std::size_t i = 1; i < states.size(); ++i) {
        total += wrap_angle(azimuth(states[i]) - azimuth(states[i - 1]));
    }
    return total;
}

RadialProfile current_profile(const VortexEnsemble& ensemble, std::size_t n_bins,
                              std::size_t t_samples) {
    if (n_bins < 4) throw ValidationError("current profile needs at least 4 bins");
    if (t_samples < 1) throw ValidationError("current profile needs at least 1 time sample");

    const double r = ensemble.radius();
    const double rc = ensemble.center_distance();
    const double lo = std::max(0.0, rc - r);
    const double hi = rc + r;
    const double width = (hi - lo) / static_cast<double>(n_bins);

    RadialProfile profile;
    profile.bin_edges.resize(n_bins + 1);
    for (std::size_t i = 0; i <= n_bins; ++i) {
        profile.bin_edges[i] = lo + width * static_cast<double>(i);
    }
    profile.bin_edges.back() = hi;
    profile.j_phi.assign(n_bins, 0.0);
    profile.counts.assign(n_bins, 0);

    const double period = ensemble.params().period();
    for (std::size_t k = 0; k < t_samples; ++k) {
        const double t = period * static_cast<double>(k) / static_cast<double>(t_samples);
        for (const auto& s : ensemble_states(ensemble, t)) {
            const double rho = std::sqrt(s.rho_squared());
            if (rho < lo - profile_edge_eps || rho > hi + profile_edge_eps) {
                throw Error("internal: electron outside the profile support");
            }
            std::size_t bin = 0;
            if (width > 0.0) {
                const double f = std::floor((rho - lo) / width);
                bin = static_cast<std::size_t>(std::clamp(f, 0.0, static_cast<double>(n_bins - 1)));
            }
            double v_phi = 0.0;
            if (rho > 0.0) v_phi = (s.x * s.vy - s.y * s.vx) / rho;
            profile.j_phi[bin] += v_phi;
            ++profile.counts[bin];
        }
    }
    for (std::size_t b = 0; b < n_bins; ++b) {
        profile.j_phi[b] /= static_cast<double>(t_samples);
        if (profile.counts[b] == 0) profile.empty_bins.push_back(b);
    }
    return profile;
}

EdgeSpeeds edge_azimuthal_speed(const VortexEnsemble& ensemble, double classify_tol) {
    const auto& params = ensemble.params();
    const CyclotronOrbit& orbit = ensemble.orbits().front();
    const double alpha = orbit.center_azimuth();

    auto v_phi_at_phase = [&](double phase) {
        CyclotronOrbit at = orbit;
        at.theta = phase;
        const ParticleState s = orbit_state(at, params, 0.0);
        const double rho = std::sqrt(s.rho_squared());
        return (s.x * s.vy - s.y * s.vx) / rho;
    };

    EdgeSpeeds out;
    out.outer = v_phi_at_phase(alpha);
    if (classify_orbit(orbit, classify_tol) == OrbitCategory::Zero) {
        // The inner edge is the axis itself, where the shell current vanishes (v_phi = w rho / 2).
        out.inner = 0.0;
    } else {
        out.inner = v_phi_at_phase(alpha + std::numbers::pi);
    }
    return out;
}

std::size_t sign_changes(const RadialProfile& profile) {
    std::size_t changes = 0;
    int last = 0;
    for (std::size_t b = 0; b < profile.n_bins(); ++b) {
        if (profile.counts[b] == 0 || profile.j_phi[b] == 0.0) continue;
        const int sign = profile.j_phi[b] > 0.0 ? 1 : -1;
        if (last != 0 && sign != last) ++changes;
        last = sign;
    }
    return changes;
}

}  // namespace cyclovortex
