#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclovortex/dynamics.hpp"

namespace cyclovortex {

/// How electrons are placed on each orbit of a vortex.
namespace phase_mode {

/// n_per_orbit electrons at equally spaced phases on every orbit.
struct Uniform {
    std::size_t n_per_orbit = 16;
};

/// One electron per orbit, starting at the point farthest from the axis.
struct Aligned {};

/// Absolute initial phases, one list per orbit (global_phase is added).
struct Explicit {
    std::vector<std::vector<double>> phases;
};

/// n_per_orbit electrons per orbit at phases drawn uniformly from a seeded generator.
struct Random {
    std::size_t n_per_orbit = 16;
    std::uint64_t seed = 42;
};

}  // namespace phase_mode

using PhaseMode =
    std::variant<phase_mode::Uniform, phase_mode::Aligned, phase_mode::Explicit, phase_mode::Random>;

std::string_view phase_mode_name(const PhaseMode& mode);

/// A classical electron vortex: orbits of equal radius whose centers sit at
/// equally spaced azimuths on a circle of radius R_cen, so every electron
/// carries the same canonical angular momentum. Immutable after construction.
class VortexEnsemble {
  public:
    const PhysicalParams& params() const { return params_; }
    double radius() const { return radius_; }
    double center_distance() const { return center_distance_; }
    std::size_t n_orbits() const { return n_orbits_; }
    const PhaseMode& mode() const { return mode_; }
    double global_phase() const { return global_phase_; }

    /// One entry per orbit; theta is the azimuth of its center.
    const std::vector<CyclotronOrbit>& orbits() const { return orbits_; }
    /// One entry per electron; each electron is its own orbit with its own phase.
    const std::vector<CyclotronOrbit>& electrons() const { return electrons_; }
    /// Orbit index of each electron.
    const std::vector<std::size_t>& orbit_of() const { return orbit_of_; }
    std::size_t n_electrons() const { return electrons_.size(); }

  private:
    friend VortexEnsemble build_vortex(const PhysicalParams&, double, double, std::size_t,
                                       const PhaseMode&, double);
    explicit VortexEnsemble(const PhysicalParams& params) : params_(params) {}

    PhysicalParams params_;
    double radius_ = 0.0;
    double center_distance_ = 0.0;
    std::size_t n_orbits_ = 0;
    PhaseMode mode_;
    double global_phase_ = 0.0;
    std::vector<CyclotronOrbit> orbits_;
    std::vector<CyclotronOrbit> electrons_;
    std::vector<std::size_t> orbit_of_;
};

/// Per-electron averages over the ensemble at time t.
struct EnsembleObservables {
    double t = 0.0;
    double mean_rho_sq = 0.0;
    double mean_kinetic_Lz = 0.0;
    double mean_canonical_Lz = 0.0;
    double mean_diamagnetic_Lz = 0.0;
    double com_x = 0.0;
    double com_y = 0.0;
    double inertia_per_electron = 0.0;
};

struct TimeSeries {
    std::vector<double> t;
    std::vector<double> values;
};

/// offset + amplitude * cos(omega t + phase).
struct CosineLaw {
    double offset = 0.0;
    double amplitude = 0.0;
    double phase = 0.0;
    double omega = 0.0;

    double operator()(double t) const { return offset + amplitude * std::cos(omega * t + phase); }
};

/// Moment of inertia per electron about the axis split into the part about the
/// center of mass (own) and the center-of-mass transfer term.
struct ParallelAxis {
    double own = 0.0;
    double transfer = 0.0;
    double total = 0.0;
};

/// Throws ValidationError for R <= 0, R_cen < 0 or n_orbits == 0, ZeroFieldError in
/// zero field, and BadDistributionError for Uniform/Random with fewer than two
/// electrons per orbit or an Explicit list that does not match the orbits.
VortexEnsemble build_vortex(const PhysicalParams& params, double radius, double center_distance,
                            std::size_t n_orbits, const PhaseMode& mode, double global_phase = 0.0);

std::vector<ParticleState> ensemble_states(const VortexEnsemble& ensemble, double t);

EnsembleObservables observe(const VortexEnsemble& ensemble, double t);

/// Mean kinetic L_z sampled on t_grid (nonempty, strictly increasing).
TimeSeries kinetic_Lz_series(const VortexEnsemble& ensemble, std::span<const double> t_grid);

/// Closed-form mean kinetic L_z(t) of the ensemble. The offset is always m w R^2;
/// amplitude and phase follow from the phasor sum of the electrons' phases
/// relative to their orbit centers.
CosineLaw kinetic_Lz_law(const VortexEnsemble& ensemble);

/// Mean kinetic L_z averaged over n_samples >= 2 equally spaced times in one period.
double time_averaged_kinetic_Lz(const VortexEnsemble& ensemble, std::size_t n_samples = 32);

/// Kinetic energy per electron, (m/2) v^2 averaged over electrons.
double energy_per_electron(const VortexEnsemble& ensemble);

ParallelAxis parallel_axis(const VortexEnsemble& ensemble, double t);

}  // namespace cyclovortex
