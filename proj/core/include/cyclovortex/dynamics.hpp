#pragma once

#include <cmath>
#include <numbers>
#include <string_view>
#include <vector>

namespace cyclovortex {

/// Charge, mass and field of the particle species in simulation units.
///
/// The field points along +z. Defaults describe an electron in unit field:
/// charge -1, mass 1, B 1, so the cyclotron frequency is 1 and one period is 2*pi.
class PhysicalParams {
  public:
    /// Throws ValidationError unless mass > 0, hbar > 0 and every value is finite.
    explicit PhysicalParams(double mass = 1.0, double charge = -1.0, double field = 1.0,
                            double hbar = 1.0);

    double mass() const { return mass_; }
    double charge() const { return charge_; }
    double field() const { return field_; }
    double hbar() const { return hbar_; }

    /// Signed cyclotron frequency -charge*field/mass.
    double omega_c() const { return -charge_ * field_ / mass_; }

    /// 2*pi/|omega_c|. Throws ZeroFieldError in zero field.
    double period() const;

  private:
    double mass_;
    double charge_;
    double field_;
    double hbar_;
};

/// Planar position and velocity at time t.
struct ParticleState {
    double x = 0.0;
    double y = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    double t = 0.0;

    double speed() const { return std::hypot(vx, vy); }
    double rho_squared() const { return x * x + y * y; }
    bool finite() const;
};

/// Circular orbit x = x0 + R cos(w t + theta), y = y0 + R sin(w t + theta).
struct CyclotronOrbit {
    double x0 = 0.0;
    double y0 = 0.0;
    double radius = 0.0;
    double theta = 0.0;

    /// Distance of the orbit center from the coordinate origin.
    double center_distance() const { return std::hypot(x0, y0); }
    /// Azimuth of the orbit center (0 for a centered orbit).
    double center_azimuth() const { return std::atan2(y0, x0); }

    /// Throws ValidationError for a negative or non-finite radius.
    void validate() const;
};

enum class Method { analytic, rk4, boris };

std::string_view to_string(Method method);
/// Throws ValidationError for unknown names.
Method method_from_string(std::string_view name);

struct Trajectory {
    std::vector<ParticleState> states;
    Method method = Method::analytic;
};

double cyclotron_frequency(const PhysicalParams& params);

/// Exact state on the orbit at time t.
ParticleState orbit_state(const CyclotronOrbit& orbit, const PhysicalParams& params, double t);

/// Inverse of orbit_state. Throws ZeroFieldError when omega_c = 0.
/// The returned phase is wrapped to (-pi, pi].
CyclotronOrbit orbit_from_state(const ParticleState& state, const PhysicalParams& params);

/// Numerically integrates m dv/dt = e v x B from `initial`.
///
/// Returns n_steps + 1 states. Throws InvalidStepError for dt <= 0 or n_steps == 0,
/// and ValidationError when method is analytic (use sample_orbit instead).
Trajectory integrate_lorentz(const ParticleState& initial, const PhysicalParams& params, double dt,
                             std::size_t n_steps, Method method);

/// Analytic trajectory sampled at t0 + k*dt for k = 0..n_steps.
Trajectory sample_orbit(const CyclotronOrbit& orbit, const PhysicalParams& params, double t0,
                        double dt, std::size_t n_steps);

/// Squared distance from the origin, evaluated from the closed form in the
/// orbit parameters (not from orbit_state).
double rho_squared(const CyclotronOrbit& orbit, const PhysicalParams& params, double t);

/// |d^2(rho^2)/dt^2 - (-w^2 rho^2 - 2 (w/m) L_z + (4/m) E)| with the left side
/// from a central second difference of rho_squared with step fd_step.
double rho_squared_ode_residual(const CyclotronOrbit& orbit, const PhysicalParams& params, double t,
                                double fd_step = 1e-4);

/// p^2/2m + (w/2) L_z + (m/8) w^2 rho^2 with canonical p in the symmetric gauge.
double hamiltonian_cartesian(const ParticleState& state, const PhysicalParams& params);

/// Planar kinetic energy (m/2)(vx^2 + vy^2).
double energy_2d(const ParticleState& state, const PhysicalParams& params);

/// Wraps an angle to (-pi, pi].
double wrap_angle(double angle);

inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace cyclovortex
