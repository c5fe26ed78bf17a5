#pragma once

#include <cstddef>
#include <vector>

#include "cyclovortex/angular_momenta.hpp"
#include "cyclovortex/dynamics.hpp"
#include "cyclovortex/ensemble.hpp"

namespace cyclovortex {

/// Net azimuth swept about the origin during one cyclotron period.
struct WindingResult {
    double delta_phi = 0.0;   ///< radians
    double mean_omega = 0.0;  ///< delta_phi / T
    double current = 0.0;     ///< circulating current per electron, mean_omega / (2 pi)
};

/// Azimuthal current profile in equal-width radial shells.
struct RadialProfile {
    std::vector<double> bin_edges;
    /// Sum of v . phi_hat over the samples in a shell, divided by the number of time samples.
    std::vector<double> j_phi;
    /// Electron hits per shell, summed over all time samples.
    std::vector<std::size_t> counts;
    /// Indices of shells without any hit (their j_phi is reported as 0).
    std::vector<std::size_t> empty_bins;

    std::size_t n_bins() const { return j_phi.size(); }
};

/// Signed azimuthal velocity at the innermost and outermost radius reached by the orbits.
struct EdgeSpeeds {
    double inner = 0.0;
    double outer = 0.0;
};

inline constexpr double profile_edge_eps = 1e-12;

/// Unwraps the azimuth of orbit_state over one period on n_samples equal steps.
///
/// Step differences are wrapped to (-pi, pi]; steps that still turn by more than
/// pi/2 are bisected until resolved. For an orbit through the origin (Zero
/// category) the sampling grid is centered on the passage, and the passage
/// step keeps only its smooth part, so the result is pi * sign(w).
///
/// Throws ZeroFieldError when w = 0, DegenerateError for R = R_cen = 0 and
/// ValidationError for n_samples < 8.
WindingResult winding_angle(const CyclotronOrbit& orbit, const PhysicalParams& params,
                            std::size_t n_samples = 4096, double classify_tol = default_classify_tol);

/// Total azimuth swept along a sampled trajectory, accumulated from wrapped
/// step differences.
double unwrapped_azimuth_change(const std::vector<ParticleState>& states);

/// Bins electron positions sampled at t_samples equally spaced times of one period
/// into n_bins shells spanning [max(0, R_cen - R), R_cen + R].
RadialProfile current_profile(const VortexEnsemble& ensemble, std::size_t n_bins = 20,
                              std::size_t t_samples = 32);

EdgeSpeeds edge_azimuthal_speed(const VortexEnsemble& ensemble,
                                double classify_tol = default_classify_tol);

/// Number of sign changes across the nonempty shells of a profile.
std::size_t sign_changes(const RadialProfile& profile);

}  // namespace cyclovortex
