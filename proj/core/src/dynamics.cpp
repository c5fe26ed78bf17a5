#include "cyclovortex/dynamics.hpp"

#include <array>
#include <string>

#include "cyclovortex/angular_momenta.hpp"
#include "cyclovortex/errors.hpp"

namespace cyclovortex {

PhysicalParams::PhysicalParams(double mass, double charge, double field, double hbar)
    : mass_(mass), charge_(charge), field_(field), hbar_(hbar) {
    if (!std::isfinite(mass) || !std::isfinite(charge) || !std::isfinite(field) ||
        !std::isfinite(hbar)) {
        throw ValidationError("physical parameters must be finite");
    }
    if (mass <= 0.0) throw ValidationError("mass must be positive");
    if (hbar <= 0.0) throw ValidationError("hbar must be positive");
}

double PhysicalParams::period() const {
    const double w = omega_c();
    if (w == 0.0) throw ZeroFieldError();
    return two_pi / std::abs(w);
}

bool ParticleState::finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(vx) && std::isfinite(vy) &&
           std::isfinite(t);
}

void CyclotronOrbit::validate() const {
    if (!std::isfinite(x0) || !std::isfinite(y0) || !std::isfinite(radius) ||
        !std::isfinite(theta)) {
        throw ValidationError("orbit parameters must be finite");
    }
    if (radius < 0.0) throw ValidationError("orbit radius must be nonnegative");
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::analytic: return "analytic";
        case Method::rk4: return "rk4";
        case Method::boris: return "boris";
    }
    return "unknown";
}

Method method_from_string(std::string_view name) {
    if (name == "analytic") return Method::analytic;
    if (name == "rk4") return Method::rk4;
    if (name == "boris") return Method::boris;
    throw ValidationError("unknown integration method '" + std::string(name) + "'");
}

double cyclotron_frequency(const PhysicalParams& params) { return params.omega_c(); }

double wrap_angle(double angle) {
    double wrapped = std::remainder(angle, two_pi);
    if (wrapped <= -std::numbers::pi) wrapped += two_pi;
    return wrapped;
}

ParticleState orbit_state(const CyclotronOrbit& orbit, const PhysicalParams& params, double t) {
    const double w = params.omega_c();
    const double phase = w * t + orbit.theta;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    return ParticleState{
        .x = orbit.x0 + orbit.radius * c,
        .y = orbit.y0 + orbit.radius * s,
        .vx = -orbit.radius * w * s,
        .vy = orbit.radius * w * c,
        .t = t,
    };
}

CyclotronOrbit orbit_from_state(const ParticleState& state, const PhysicalParams& params) {
    const double w = params.omega_c();
    if (w == 0.0) throw ZeroFieldError();
    CyclotronOrbit orbit;
    orbit.x0 = state.x - state.vy / w;
    orbit.y0 = state.y + state.vx / w;
    orbit.radius = state.speed() / std::abs(w);
    if (orbit.radius > 0.0) {
        // R cos(phase) = vy / w and R sin(phase) = -vx / w
        const double phase = std::atan2(-state.vx / w, state.vy / w);
        orbit.theta = wrap_angle(phase - w * state.t);
    }
    return orbit;
}

namespace {

using Phase = std::array<double, 4>;  // x, y, vx, vy

// dv/dt = (e/m) v x B with B along z, i.e. (-w vy, w vx).
Phase lorentz_rhs(const Phase& s, double w) { return {s[2], s[3], -w * s[3], w * s[2]}; }

Phase axpy(const Phase& s, double a, const Phase& k) {
    return {s[0] + a * k[0], s[1] + a * k[1], s[2] + a * k[2], s[3] + a * k[3]};
}

Phase rk4_step(const Phase& s, double w, double dt) {
    const Phase k1 = lorentz_rhs(s, w);
    const Phase k2 = lorentz_rhs(axpy(s, 0.5 * dt, k1), w);
    const Phase k3 = lorentz_rhs(axpy(s, 0.5 * dt, k2), w);
    const Phase k4 = lorentz_rhs(axpy(s, dt, k3), w);
    Phase out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = s[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

// Cayley (Boris) rotation of the velocity through the magnetic kick over `span`.
void boris_rotate(double& vx, double& vy, double w, double span) {
    const double h = 0.5 * w * span;
    const double denom = 1.0 + h * h;
    const double c = (1.0 - h * h) / denom;
    const double s = 2.0 * h / denom;
    const double nx = c * vx - s * vy;
    const double ny = s * vx + c * vy;
    vx = nx;
    vy = ny;
}

}  // namespace

Trajectory integrate_lorentz(const ParticleState& initial, const PhysicalParams& params, double dt,
                             std::size_t n_steps, Method method) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw InvalidStepError("time step must be positive and finite");
    }
    if (n_steps == 0) throw InvalidStepError("n_steps must be at least 1");
    if (method == Method::analytic) {
        throw ValidationError("integrate_lorentz needs a numerical method (rk4 or boris)");
    }
    if (!initial.finite()) throw ValidationError("initial state must be finite");

    const double w = params.omega_c();
    Trajectory traj;
    traj.method = method;
    traj.states.reserve(n_steps + 1);
    traj.states.push_back(initial);

    Phase s{initial.x, initial.y, initial.vx, initial.vy};
    for (std::size_t k = 1; k <= n_steps; ++k) {
        if (method == Method::rk4) {
            s = rk4_step(s, w, dt);
        } else {
            // Velocities stay synchronized with positions: half kick, drift, half kick.
            boris_rotate(s[2], s[3], w, 0.5 * dt);
            s[0] += dt * s[2];
            s[1] += dt * s[3];
            boris_rotate(s[2], s[3], w, 0.5 * dt);
        }
        traj.states.push_back(ParticleState{
            .x = s[0], .y = s[1], .vx = s[2], .vy = s[3],
            .t = initial.t + static_cast<double>(k) * dt});
    }
    return traj;
}

Trajectory sample_orbit(const CyclotronOrbit& orbit, const PhysicalParams& params, double t0,
                        double dt, std::size_t n_steps) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw InvalidStepError("time step must be positive and finite");
    }
    orbit.validate();
    Trajectory traj;
    traj.method = Method::analytic;
    traj.states.reserve(n_steps + 1);
    for (std::size_t k = 0; k <= n_steps; ++k) {
        traj.states.push_back(orbit_state(orbit, params, t0 + static_cast<double>(k) * dt));
    }
    return traj;
}

double rho_squared(const CyclotronOrbit& orbit, const PhysicalParams& params, double t) {
    const double phase = params.omega_c() * t + orbit.theta;
    const double r = orbit.radius;
    return orbit.x0 * orbit.x0 + orbit.y0 * orbit.y0 + r * r +
           2.0 * orbit.x0 * r * std::cos(phase) + 2.0 * orbit.y0 * r * std::sin(phase);
}

double rho_squared_ode_residual(const CyclotronOrbit& orbit, const PhysicalParams& params, double t,
                                double fd_step) {
    if (!(fd_step > 0.0)) throw ValidationError("fd_step must be positive");
    const double h = fd_step;
    const double lhs = (rho_squared(orbit, params, t + h) - 2.0 * rho_squared(orbit, params, t) +
                        rho_squared(orbit, params, t - h)) /
                       (h * h);

    const double w = params.omega_c();
    const double m = params.mass();
    const double lz = orbit_canonical_Lz(orbit, params);
    const double energy = 0.5 * m * orbit.radius * orbit.radius * w * w;
    const double rhs = -w * w * rho_squared(orbit, params, t) - 2.0 * (w / m) * lz + 4.0 / m * energy;
    return std::abs(lhs - rhs);
}

double hamiltonian_cartesian(const ParticleState& state, const PhysicalParams& params) {
    const double m = params.mass();
    const double w = params.omega_c();
    const double half_eb = 0.5 * params.charge() * params.field();
    // p = m v + e A_s with A_s = (B/2)(-y, x)
    const double px = m * state.vx - half_eb * state.y;
    const double py = m * state.vy + half_eb * state.x;
    const double lz = state.x * py - state.y * px;
    return (px * px + py * py) / (2.0 * m) + 0.5 * w * lz +
           m / 8.0 * w * w * state.rho_squared();
}

double energy_2d(const ParticleState& state, const PhysicalParams& params) {
    return 0.5 * params.mass() * (state.vx * state.vx + state.vy * state.vy);
}

}  // namespace cyclovortex
