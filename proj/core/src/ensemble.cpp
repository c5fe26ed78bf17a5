#include "cyclovortex/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>

#include "cyclovortex/angular_momenta.hpp"
#include "cyclovortex/errors.hpp"

namespace cyclovortex {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Initial phases (before global_phase) of the electrons on orbit k with center azimuth alpha.
std::vector<double> phases_on_orbit(const PhaseMode& mode, std::size_t k, double alpha,
                                    std::mt19937_64* rng) {
    return std::visit(
        Overloaded{
            [&](const phase_mode::Uniform& u) {
                std::vector<double> out(u.n_per_orbit);
                for (std::size_t j = 0; j < u.n_per_orbit; ++j) {
                    out[j] = alpha + two_pi * static_cast<double>(j) /
                                         static_cast<double>(u.n_per_orbit);
                }
                return out;
            },
            [&](const phase_mode::Aligned&) { return std::vector<double>{alpha}; },
            [&](const phase_mode::Explicit& e) { return e.phases[k]; },
            [&](const phase_mode::Random& r) {
                std::uniform_real_distribution<double> dist(0.0, two_pi);
                std::vector<double> out(r.n_per_orbit);
                for (auto& p : out) p = dist(*rng);
                return out;
            },
        },
        mode);
}

void check_mode(const PhaseMode& mode, std::size_t n_orbits) {
    std::visit(Overloaded{
                   [](const phase_mode::Uniform& u) {
                       if (u.n_per_orbit < 2) {
                           throw BadDistributionError(
                               "uniform phase mode needs at least 2 electrons per orbit");
                       }
                   },
                   [](const phase_mode::Aligned&) {},
                   [&](const phase_mode::Explicit& e) {
                       if (e.phases.size() != n_orbits) {
                           throw BadDistributionError("explicit phase lists must match n_orbits (" +
                                                      std::to_string(e.phases.size()) + " vs " +
                                                      std::to_string(n_orbits) + ")");
                       }
                       for (const auto& list : e.phases) {
                           if (list.empty()) {
                               throw BadDistributionError("explicit phase list for an orbit is empty");
                           }
                           for (double p : list) {
                               if (!std::isfinite(p)) {
                                   throw BadDistributionError("explicit phases must be finite");
                               }
                           }
                       }
                   },
                   [](const phase_mode::Random& r) {
                       if (r.n_per_orbit < 2) {
                           throw BadDistributionError(
                               "random phase mode needs at least 2 electrons per orbit");
                       }
                   },
               },
               mode);
}

}  // namespace

std::string_view phase_mode_name(const PhaseMode& mode) {
    return std::visit(Overloaded{
                          [](const phase_mode::Uniform&) { return std::string_view("uniform"); },
                          [](const phase_mode::Aligned&) { return std::string_view("aligned"); },
                          [](const phase_mode::Explicit&) { return std::string_view("explicit"); },
                          [](const phase_mode::Random&) { return std::string_view("random"); },
                      },
                      mode);
}

VortexEnsemble build_vortex(const PhysicalParams& params, double radius, double center_distance,
                            std::size_t n_orbits, const PhaseMode& mode, double global_phase) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw ValidationError("R must be positive");
    if (!(center_distance >= 0.0) || !std::isfinite(center_distance)) {
        throw ValidationError("R_cen must be nonnegative");
    }
    if (n_orbits == 0) throw ValidationError("n_orbits must be at least 1");
    if (!std::isfinite(global_phase)) throw ValidationError("global_phase must be finite");
    if (params.omega_c() == 0.0) throw ZeroFieldError();
    check_mode(mode, n_orbits);

    VortexEnsemble ens(params);
    ens.radius_ = radius;
    ens.center_distance_ = center_distance;
    ens.n_orbits_ = n_orbits;
    ens.mode_ = mode;
    ens.global_phase_ = global_phase;

    std::mt19937_64 rng;
    if (const auto* r = std::get_if<phase_mode::Random>(&mode)) rng.seed(r->seed);

    const double reference_lz = 0.5 * params.mass() * params.omega_c() *
                                (radius * radius - center_distance * center_distance);
    const double lz_scale = std::max(1.0, std::abs(reference_lz));

    for (std::size_t k = 0; k < n_orbits; ++k) {
        const double alpha = two_pi * static_cast<double>(k) / static_cast<double>(n_orbits);
        CyclotronOrbit orbit{.x0 = center_distance * std::cos(alpha),
                             .y0 = center_distance * std::sin(alpha),
                             .radius = radius,
                             .theta = alpha};
        if (std::abs(orbit_canonical_Lz(orbit, params) - reference_lz) > 1e-12 * lz_scale) {
            throw Error("internal: orbit canonical L_z differs across the vortex");
        }
        ens.orbits_.push_back(orbit);
        for (double phase : phases_on_orbit(mode, k, alpha, &rng)) {
            CyclotronOrbit electron = orbit;
            electron.theta = phase + global_phase;
            ens.electrons_.push_back(electron);
            ens.orbit_of_.push_back(k);
        }
    }
    return ens;
}

std::vector<ParticleState> ensemble_states(const VortexEnsemble& ensemble, double t) {
    std::vector<ParticleState> out;
    out.reserve(ensemble.n_electrons());
    for (const auto& e : ensemble.electrons()) out.push_back(orbit_state(e, ensemble.params(), t));
    return out;
}

EnsembleObservables observe(const VortexEnsemble& ensemble, double t) {
    const auto& params = ensemble.params();
    EnsembleObservables obs;
    obs.t = t;
    // Sequential summation in electron order keeps outputs bitwise reproducible.
    for (const auto& e : ensemble.electrons()) {
        const ParticleState s = orbit_state(e, params, t);
        const AngularMomentumBreakdown am = angular_momenta(s, params);
        obs.mean_rho_sq += s.rho_squared();
        obs.mean_kinetic_Lz += am.kinetic;
        obs.mean_canonical_Lz += am.canonical;
        obs.mean_diamagnetic_Lz += am.diamagnetic;
        obs.com_x += s.x;
        obs.com_y += s.y;
    }
    const double n = static_cast<double>(ensemble.n_electrons());
    obs.mean_rho_sq /= n;
    obs.mean_kinetic_Lz /= n;
    obs.mean_canonical_Lz /= n;
    obs.mean_diamagnetic_Lz /= n;
    obs.com_x /= n;
    obs.com_y /= n;
    obs.inertia_per_electron = params.mass() * obs.mean_rho_sq;
    return obs;
}

TimeSeries kinetic_Lz_series(const VortexEnsemble& ensemble, std::span<const double> t_grid) {
    if (t_grid.empty()) throw ValidationError("time grid must be nonempty");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw ValidationError("time grid must be strictly increasing");
        }
    }
    TimeSeries series;
    series.t.assign(t_grid.begin(), t_grid.end());
    series.values.reserve(t_grid.size());
    for (double t : t_grid) series.values.push_back(observe(ensemble, t).mean_kinetic_Lz);
    return series;
}

CosineLaw kinetic_Lz_law(const VortexEnsemble& ensemble) {
    const auto& params = ensemble.params();
    const double m = params.mass();
    const double w = params.omega_c();
    const double r = ensemble.radius();

    std::complex<double> phasor{0.0, 0.0};
    for (const auto& e : ensemble.electrons()) {
        phasor += std::polar(1.0, e.theta - e.center_azimuth());
    }
    phasor /= static_cast<double>(ensemble.n_electrons());

    CosineLaw law;
    law.omega = w;
    law.offset = m * w * r * r;
    law.amplitude = m * w * r * ensemble.center_distance() * std::abs(phasor);
    law.phase = std::arg(phasor);
    return law;
}

double time_averaged_kinetic_Lz(const VortexEnsemble& ensemble, std::size_t n_samples) {
    if (n_samples < 2) throw ValidationError("time average needs at least 2 samples");
    const double period = ensemble.params().period();
    double sum = 0.0;
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double t = period * static_cast<double>(k) / static_cast<double>(n_samples);
        sum += observe(ensemble, t).mean_kinetic_Lz;
    }
    return sum / static_cast<double>(n_samples);
}

double energy_per_electron(const VortexEnsemble& ensemble) {
    double sum = 0.0;
    for (const auto& e : ensemble.electrons()) {
        sum += energy_2d(orbit_state(e, ensemble.params(), 0.0), ensemble.params());
    }
    return sum / static_cast<double>(ensemble.n_electrons());
}

ParallelAxis parallel_axis(const VortexEnsemble& ensemble, double t) {
    const auto states = ensemble_states(ensemble, t);
    const double n = static_cast<double>(states.size());
    const double m = ensemble.params().mass();

    double cx = 0.0;
    double cy = 0.0;
    for (const auto& s : states) {
        cx += s.x;
        cy += s.y;
    }
    cx /= n;
    cy /= n;

    double own = 0.0;
    for (const auto& s : states) {
        const double dx = s.x - cx;
        const double dy = s.y - cy;
        own += dx * dx + dy * dy;
    }
    ParallelAxis out;
    out.own = m * own / n;
    out.transfer = m * (cx * cx + cy * cy);
    out.total = out.own + out.transfer;
    return out;
}

}  // namespace cyclovortex
