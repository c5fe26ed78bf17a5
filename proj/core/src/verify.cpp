#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "cyclovortex/angular_momenta.hpp"
#include "cyclovortex/config.hpp"
#include "cyclovortex/currents.hpp"
#include "cyclovortex/ensemble.hpp"
#include "cyclovortex/errors.hpp"
#include "cyclovortex/oracles.hpp"

namespace cyclovortex {

namespace {

struct Category {
    const char* label;
    double radius;
    double center_distance;
    OrbitCategory expected;
    double omega_factor;  // expected mean azimuthal frequency / omega_c
};

constexpr std::array<Category, 3> categories{{
    {"positive", 2.0, 1.0, OrbitCategory::Positive, 1.0},
    {"zero", 1.0, 1.0, OrbitCategory::Zero, 0.5},
    {"negative", 1.0, 2.0, OrbitCategory::Negative, 0.0},
}};

CyclotronOrbit orbit_on_x_axis(double radius, double center_distance, double theta) {
    return CyclotronOrbit{.x0 = center_distance, .y0 = 0.0, .radius = radius, .theta = theta};
}

double max_position_error(const Trajectory& numeric, const CyclotronOrbit& orbit,
                          const PhysicalParams& params) {
    double worst = 0.0;
    for (const auto& s : numeric.states) {
        const ParticleState exact = orbit_state(orbit, params, s.t);
        worst = std::max(worst, std::hypot(s.x - exact.x, s.y - exact.y));
    }
    return worst;
}

double final_position_error(const Trajectory& numeric, const CyclotronOrbit& orbit,
                            const PhysicalParams& params) {
    const ParticleState& s = numeric.states.back();
    const ParticleState exact = orbit_state(orbit, params, s.t);
    return std::hypot(s.x - exact.x, s.y - exact.y);
}

Trajectory rk4_periods(const CyclotronOrbit& orbit, const PhysicalParams& params,
                       std::size_t steps_per_period, std::size_t periods) {
    const double dt = params.period() / static_cast<double>(steps_per_period);
    return integrate_lorentz(orbit_state(orbit, params, 0.0), params, dt,
                             steps_per_period * periods, Method::rk4);
}

class Catalog {
  public:
    using Body = std::function<double()>;

    void run(const std::string& name, double tolerance, const Body& body) {
        CheckResult c;
        c.name = name;
        c.tolerance = tolerance;
        try {
            c.residual = body();
            c.passed = std::isfinite(c.residual) && c.residual <= tolerance;
        } catch (const std::exception& e) {
            c.residual = std::nan("");
            c.passed = false;
            c.error = std::string(kind(e)) + ": " + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

    VerifyReport take() { return std::move(report_); }

  private:
    static const char* kind(const std::exception& e) {
        if (dynamic_cast<const ZeroFieldError*>(&e)) return "ZeroFieldError";
        if (dynamic_cast<const InvalidStepError*>(&e)) return "InvalidStepError";
        if (dynamic_cast<const BadDistributionError*>(&e)) return "BadDistributionError";
        if (dynamic_cast<const DegenerateError*>(&e)) return "DegenerateError";
        if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
        return "Error";
    }

    VerifyReport report_;
};

}  // namespace

VerifyReport verify_all(const RunConfig& config) {
    validate(config);
    const PhysicalParams params = config.params.physical();
    const auto& a = config.analysis;
    const auto& g = config.geometry;
    const double m = params.mass();
    const double w = params.omega_c();
    const double tol_classify = a.classify_tol;
    const CyclotronOrbit configured =
        orbit_on_x_axis(g.radius, g.center_distance, g.global_phase);

    Catalog cat;

    cat.run("rk4_period_accuracy", 1e-8, [&] {
        const Trajectory traj = rk4_periods(configured, params, a.rk4_steps_per_period, 1);
        return max_position_error(traj, configured, params) / configured.radius;
    });

    cat.run("rk4_convergence_order", 4.0, [&] {
        const double coarse = final_position_error(rk4_periods(configured, params, 1024, 1), configured, params);
        const double fine = final_position_error(rk4_periods(configured, params, 2048, 1), configured, params);
        return std::abs(coarse / fine - 16.0);
    });

    cat.run("free_streaming", 1e-12, [&] {
        const PhysicalParams free(params.mass(), params.charge(), 0.0, params.hbar());
        const std::size_t n = config.time.n_steps;
        const ParticleState start{.x = 0.0, .y = 0.0, .vx = 1.0, .vy = 0.0, .t = 0.0};
        double worst = 0.0;
        for (Method method : {Method::rk4, Method::boris}) {
            const auto end = integrate_lorentz(start, free, 1.0 / static_cast<double>(n), n, method)
                                 .states.back();
            worst = std::max({worst, std::abs(end.x - 1.0), std::abs(end.y)});
        }
        return worst;
    });

    cat.run("canonical_Lz_conservation_analytic", 1e-12, [&] {
        const std::size_t n = 10 * config.time.n_steps;
        const Trajectory traj = sample_orbit(configured, params, 0.0,
                                             10.0 * params.period() / static_cast<double>(n), n);
        const double l0 = canonical_Lz(traj.states.front(), params);
        double worst = 0.0;
        for (const auto& s : traj.states) worst = std::max(worst, std::abs(canonical_Lz(s, params) - l0));
        return worst;
    });

    cat.run("canonical_Lz_conservation_rk4", 1e-8, [&] {
        const Trajectory traj = rk4_periods(configured, params, 1024, 10);
        const double l0 = canonical_Lz(traj.states.front(), params);
        double worst = 0.0;
        for (const auto& s : traj.states) worst = std::max(worst, std::abs(canonical_Lz(s, params) - l0));
        return worst;
    });

    cat.run("boris_speed_conservation", 1e-10, [&] {
        const double period = params.period();
        const std::size_t per_period = config.time.n_steps;
        const Trajectory traj =
            integrate_lorentz(orbit_state(configured, params, 0.0), params,
                              period / static_cast<double>(per_period), 10 * per_period, Method::boris);
        const double v0 = traj.states.front().speed();
        double worst = 0.0;
        for (const auto& s : traj.states) worst = std::max(worst, std::abs(s.speed() - v0));
        return worst;
    });

    cat.run("rho_squared_ode_residual", 1e-6, [&] {
        const double period = params.period();
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            worst = std::max(worst, rho_squared_ode_residual(configured, params, period * k / 100.0,
                                                             a.fd_step));
        }
        return worst;
    });

    cat.run("canonical_Lz_orbit_vs_state", 1e-10, [&] {
        std::mt19937_64 rng(a.seed);
        std::uniform_real_distribution<double> coord(-3.0, 3.0);
        std::uniform_real_distribution<double> radius(0.0, 3.0);
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        std::uniform_real_distribution<double> time(0.0, 20.0);
        double worst = 0.0;
        for (std::size_t i = 0; i < a.property_samples; ++i) {
            const CyclotronOrbit o{.x0 = coord(rng), .y0 = coord(rng), .radius = radius(rng),
                                   .theta = angle(rng)};
            const double direct = canonical_Lz(orbit_state(o, params, time(rng)), params);
            worst = std::max(worst, std::abs(direct - orbit_canonical_Lz(o, params)));
        }
        return worst;
    });

    cat.run("kinetic_Lz_identity", 1e-12, [&] {
        std::mt19937_64 rng(a.seed + 1);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        double worst = 0.0;
        for (std::size_t i = 0; i < 10 * a.property_samples; ++i) {
            const ParticleState s{.x = u(rng), .y = u(rng), .vx = u(rng), .vy = u(rng), .t = 0.0};
            const auto am = angular_momenta(s, params);
            worst = std::max(worst, std::abs(am.kinetic - am.canonical - am.diamagnetic));
        }
        return worst;
    });

    cat.run("gauge_consistency", 1e-12, [&] {
        std::mt19937_64 rng(a.seed + 2);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        double worst = 0.0;
        for (std::size_t i = 0; i < a.property_samples; ++i) {
            const ParticleState s{.x = u(rng), .y = u(rng), .vx = u(rng), .vy = u(rng), .t = 0.0};
            worst = std::max(worst, std::abs(hamiltonian_cartesian(s, params) - energy_2d(s, params)));
        }
        return worst;
    });

    cat.run("orbit_classification", 0.0, [&] {
        double mismatches = 0.0;
        for (const auto& c : categories) {
            const auto o = orbit_on_x_axis(c.radius, c.center_distance, 0.0);
            if (classify_orbit(o, tol_classify) != c.expected) mismatches += 1.0;
            const double lz = orbit_canonical_Lz(o, params);
            if (c.expected != OrbitCategory::Zero && (lz > 0.0) != ((c.expected == OrbitCategory::Positive) == (w > 0.0))) {
                mismatches += 1.0;
            }
        }
        return mismatches;
    });

    cat.run("winding_frequencies", 1e-9, [&] {
        double worst = 0.0;
        for (const auto& c : categories) {
            const auto o = orbit_on_x_axis(c.radius, c.center_distance, 0.0);
            const WindingResult wr = winding_angle(o, params, a.winding_samples, tol_classify);
            worst = std::max(worst, std::abs(wr.mean_omega - c.omega_factor * w));
        }
        return worst;
    });

    cat.run("winding_vs_rk4_revolutions", 0.01, [&] {
        const double period = params.period();
        const double unit = std::abs(w) / two_pi;
        double worst = 0.0;
        for (const auto& c : categories) {
            if (c.expected == OrbitCategory::Zero) continue;
            const auto o = orbit_on_x_axis(c.radius, c.center_distance, 0.0);
            const Trajectory traj = rk4_periods(o, params, 1024, 20);
            const double revolutions_per_time =
                unwrapped_azimuth_change(traj.states) / two_pi / (20.0 * period);
            const double current = winding_angle(o, params, a.winding_samples, tol_classify).current;
            worst = std::max(worst, std::abs(revolutions_per_time - current) / unit);
        }
        return worst;
    });

    cat.run("kinetic_Lz_cosine_form", 1e-12, [&] {
        const double period = params.period();
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double t = period * k / 100.0;
            worst = std::max(worst, std::abs(kinetic_Lz(orbit_state(configured, params, t), params) -
                                             predicted_kinetic_Lz(configured, params, t)));
        }
        return worst;
    });

    cat.run("uniform_ensemble_constancy", 1e-12, [&] {
        const double period = params.period();
        double worst = 0.0;
        for (const auto& c : categories) {
            const auto ens = build_vortex(params, c.radius, c.center_distance, 8,
                                          phase_mode::Uniform{16});
            const double rho_sq = c.radius * c.radius + c.center_distance * c.center_distance;
            const double lkin = m * w * c.radius * c.radius;
            for (std::size_t k = 0; k < a.t_samples; ++k) {
                const auto obs = observe(ens, period * static_cast<double>(k) / static_cast<double>(a.t_samples));
                worst = std::max({worst, std::abs(obs.mean_rho_sq - rho_sq),
                                  std::abs(obs.mean_kinetic_Lz - lkin)});
            }
        }
        return worst;
    });

    cat.run("aligned_ensemble_cosine_law", 1e-12, [&] {
        const auto ens = build_vortex(params, 1.0, 2.0, 12, phase_mode::Aligned{});
        const double steady = m * w;
        const double start = observe(ens, 0.0).mean_kinetic_Lz;
        const auto grid = config.time.grid();
        const auto series = kinetic_Lz_series(ens, grid);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double expected = steady + (start - steady) * std::cos(w * grid[i]);
            worst = std::max(worst, std::abs(series.values[i] - expected));
        }
        return worst;
    });

    cat.run("configured_ensemble_cosine_law", 1e-10, [&] {
        const auto ens = build_vortex(params, g.radius, g.center_distance, g.n_orbits,
                                      config.phase_mode(), g.global_phase);
        const CosineLaw law = kinetic_Lz_law(ens);
        const auto grid = config.time.grid();
        const auto series = kinetic_Lz_series(ens, grid);
        double worst = std::abs(law.offset - m * w * g.radius * g.radius);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            worst = std::max(worst, std::abs(series.values[i] - law(grid[i])));
        }
        return worst;
    });

    cat.run("canonical_Lz_ensemble_constancy", 1e-12, [&] {
        const auto ens = build_vortex(params, g.radius, g.center_distance, g.n_orbits,
                                      config.phase_mode(), g.global_phase);
        const double expected = orbit_canonical_Lz(ens.orbits().front(), params);
        double worst = 0.0;
        for (double t : config.time.grid()) {
            worst = std::max(worst, std::abs(observe(ens, t).mean_canonical_Lz - expected));
        }
        return worst;
    });

    cat.run("parallel_axis_identity", 1e-12, [&] {
        const double period = params.period();
        std::vector<VortexEnsemble> ensembles;
        ensembles.push_back(build_vortex(params, g.radius, g.center_distance, g.n_orbits,
                                         config.phase_mode(), g.global_phase));
        ensembles.push_back(build_vortex(params, 1.0, 2.0, 8, phase_mode::Uniform{16}));
        ensembles.push_back(build_vortex(params, 1.0, 2.0, 12, phase_mode::Aligned{}));
        const auto single = build_vortex(params, 1.0, 2.0, 1, phase_mode::Aligned{});
        double worst = 0.0;
        for (std::size_t k = 0; k < a.t_samples; ++k) {
            const double t = period * static_cast<double>(k) / static_cast<double>(a.t_samples);
            for (const auto& ens : ensembles) {
                const ParallelAxis pa = parallel_axis(ens, t);
                worst = std::max(worst, std::abs(pa.own + pa.transfer - m * observe(ens, t).mean_rho_sq));
            }
            const ParallelAxis pa = parallel_axis(single, t);
            const double rho_sq = rho_squared(single.electrons().front(), params, t);
            worst = std::max({worst, std::abs(pa.transfer - m * rho_sq), std::abs(pa.own)});
        }
        return worst;
    });

    cat.run("energy_kinetic_Lz_relation", 1e-12, [&] {
        std::vector<VortexEnsemble> ensembles;
        ensembles.push_back(build_vortex(params, g.radius, g.center_distance, g.n_orbits,
                                         config.phase_mode(), g.global_phase));
        for (const auto& c : categories) {
            ensembles.push_back(build_vortex(params, c.radius, c.center_distance, 8, phase_mode::Uniform{16}));
            ensembles.push_back(build_vortex(params, c.radius, c.center_distance, 1, phase_mode::Aligned{}));
        }
        ensembles.push_back(build_vortex(params, 1.0, 2.0, 12, phase_mode::Aligned{}));
        double worst = 0.0;
        for (const auto& ens : ensembles) {
            const double lkin = time_averaged_kinetic_Lz(ens, a.t_samples < 2 ? 2 : a.t_samples);
            worst = std::max(worst, std::abs(energy_per_electron(ens) - energy_from_kinetic_Lz(lkin, params)));
        }
        return worst;
    });

    cat.run("landau_table", 0.0, [&] {
        if (w == 0.0) throw ZeroFieldError();
        struct Row {
            LandauIndex idx;
            double level;
        };
        const std::array<Row, 4> rows{{{{0, 0}, 0.5}, {{0, 1}, 1.5}, {{0, -1}, 0.5}, {{1, 0}, 1.5}}};
        double worst = 0.0;
        for (const auto& r : rows) {
            worst = std::max(worst, std::abs(landau_energy(r.idx, params) / (params.hbar() * w) - r.level));
        }
        return worst;
    });

    cat.run("landau_classical_correspondence", 1e-12, [&] {
        double worst = 0.0;
        for (int n = 0; n <= a.landau_n_max; ++n) {
            for (int l = 0; l <= std::max(0, a.landau_l_max); ++l) {
                worst = std::max(worst, correspondence_residual({n, l}, params));
            }
        }
        return worst;
    });

    cat.run("current_profile_signatures", 0.0, [&] {
        double violations = 0.0;
        const auto pos = current_profile(build_vortex(params, 2.0, 1.0, 8, phase_mode::Uniform{16}),
                                         a.n_bins, a.t_samples);
        for (std::size_t b = 0; b < pos.n_bins(); ++b) {
            if (pos.counts[b] > 0 && !(pos.j_phi[b] * w > 0.0)) violations += 1.0;
        }

        const auto neg = current_profile(build_vortex(params, 1.0, 2.0, 8, phase_mode::Uniform{16}),
                                         a.n_bins, a.t_samples);
        std::vector<double> filled;
        for (std::size_t b = 0; b < neg.n_bins(); ++b) {
            if (neg.counts[b] > 0) filled.push_back(neg.j_phi[b]);
        }
        if (filled.empty() || !(filled.front() * w < 0.0) || !(filled.back() * w > 0.0)) violations += 1.0;
        if (sign_changes(neg) != 1) violations += 1.0;

        const auto zero = current_profile(build_vortex(params, 1.0, 1.0, 8, phase_mode::Uniform{64}),
                                          20, a.t_samples);
        const double inner = std::abs(zero.j_phi.front());
        const double outer = std::abs(zero.j_phi.back());
        if (!(inner < 0.15 * outer)) violations += 1.0;
        return violations;
    });

    cat.run("edge_azimuthal_speeds", 1e-12, [&] {
        const double speed = std::abs(w);
        double worst = 0.0;
        for (const auto& c : categories) {
            if (c.expected == OrbitCategory::Zero) continue;
            const auto ens = build_vortex(params, c.radius, c.center_distance, 8, phase_mode::Uniform{16});
            const EdgeSpeeds e = edge_azimuthal_speed(ens, tol_classify);
            const double sign = w > 0.0 ? 1.0 : -1.0;
            const double inner_sign = c.expected == OrbitCategory::Positive ? sign : -sign;
            worst = std::max({worst, std::abs(e.outer - sign * c.radius * speed),
                              std::abs(e.inner - inner_sign * c.radius * speed)});
        }
        return worst;
    });

    VerifyReport report = cat.take();
    report.metadata["landau_interpretation"] = landau_interpretation;
    report.metadata["origin_passage_convention"] =
        "orbits through the axis sweep pi*sign(omega_c) per period";
    report.metadata["scenario"] = config.scenario ? std::string(to_string(*config.scenario)) : "none";
    return report;
}

}  // namespace cyclovortex
