#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cyclovortex/angular_momenta.hpp"
#include "cyclovortex/ensemble.hpp"
#include "cyclovortex/errors.hpp"
#include "oracle.hpp"

namespace cv = cyclovortex;
using oracle::pi;

namespace {

const cv::PhysicalParams defaults{};

std::vector<double> sorted_radii(const cv::VortexEnsemble& ens, double t) {
    std::vector<double> out;
    for (const auto& s : cv::ensemble_states(ens, t)) out.push_back(std::sqrt(s.rho_squared()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(BuildVortex, UniformPositive) {
    const auto ens = cv::build_vortex(defaults, 2, 1, 8, cv::phase_mode::Uniform{16});
    EXPECT_EQ(ens.n_electrons(), 128u);
    EXPECT_EQ(ens.orbits().size(), 8u);
    for (const auto& o : ens.orbits()) {
        EXPECT_NEAR(cv::orbit_canonical_Lz(o, defaults), 1.5, 1e-12);
        EXPECT_NEAR(o.center_distance(), 1.0, 1e-15);
    }
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(cv::wrap_angle(ens.orbits()[k].center_azimuth() - 2 * pi * k / 8), 0.0, 1e-14);
    }
}

TEST(BuildVortex, UniformZero) {
    const auto ens = cv::build_vortex(defaults, 1, 1, 8, cv::phase_mode::Uniform{16});
    for (const auto& e : ens.electrons()) EXPECT_NEAR(cv::orbit_canonical_Lz(e, defaults), 0.0, 1e-12);
}

TEST(BuildVortex, AlignedStartsAtOutmostPoint) {
    const auto ens = cv::build_vortex(defaults, 1, 2, 12, cv::phase_mode::Aligned{});
    EXPECT_EQ(ens.n_electrons(), 12u);
    for (const auto& s : cv::ensemble_states(ens, 0)) EXPECT_NEAR(std::sqrt(s.rho_squared()), 3.0, 1e-14);
    for (const auto& s : cv::ensemble_states(ens, pi)) EXPECT_NEAR(std::sqrt(s.rho_squared()), 1.0, 1e-14);
}

TEST(BuildVortex, Errors) {
    EXPECT_THROW(cv::build_vortex(defaults, 1, 1, 8, cv::phase_mode::Uniform{1}), cv::BadDistributionError);
    EXPECT_THROW(cv::build_vortex(defaults, 1, 1, 8, cv::phase_mode::Random{1, 3}), cv::BadDistributionError);
    EXPECT_THROW(cv::build_vortex(defaults, 1, 1, 2, cv::phase_mode::Explicit{{{0.0}}}), cv::BadDistributionError);
    EXPECT_THROW(cv::build_vortex(defaults, 1, 1, 2, cv::phase_mode::Explicit{{{0.0}, {}}}), cv::BadDistributionError);
    EXPECT_THROW(cv::build_vortex(defaults, 0, 1, 8, cv::phase_mode::Aligned{}), cv::ValidationError);
    EXPECT_THROW(cv::build_vortex(defaults, 1, -1, 8, cv::phase_mode::Aligned{}), cv::ValidationError);
    EXPECT_THROW(cv::build_vortex(defaults, 1, 1, 0, cv::phase_mode::Aligned{}), cv::ValidationError);
    EXPECT_THROW(cv::build_vortex(cv::PhysicalParams(1, -1, 0), 1, 1, 8, cv::phase_mode::Aligned{}),
                 cv::ZeroFieldError);
}

TEST(BuildVortex, GlobalPhaseShiftsAlignedElectrons) {
    const auto ens = cv::build_vortex(defaults, 1, 2, 4, cv::phase_mode::Aligned{}, pi);
    for (const auto& s : cv::ensemble_states(ens, 0)) EXPECT_NEAR(std::sqrt(s.rho_squared()), 1.0, 1e-14);
}

TEST(EnsembleStates, UniformRadiiInvariantUnderPhaseSpacingShift) {
    const auto ens = cv::build_vortex(defaults, 1, 2, 8, cv::phase_mode::Uniform{16});
    const double shift = 2 * pi / 16;
    for (double t : {0.0, 0.3, 1.9}) {
        const auto a = sorted_radii(ens, t);
        const auto b = sorted_radii(ens, t + shift);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
    }
}

TEST(Observe, UniformMatchesClosedFormAndBruteForce) {
    const auto ens = cv::build_vortex(defaults, 1, 2, 8, cv::phase_mode::Uniform{16});
    const oracle::BruteVortex brute{1, 2, 1, 1, oracle::uniform_phases(8, 16)};
    for (int k = 0; k < 32; ++k) {
        const double t = 2 * pi * k / 32 + 0.01;
        const auto obs = cv::observe(ens, t);
        EXPECT_NEAR(obs.mean_rho_sq, 5.0, 1e-12);
        EXPECT_NEAR(obs.mean_kinetic_Lz, 1.0, 1e-12);
        EXPECT_NEAR(obs.mean_rho_sq, brute.mean_rho_sq(t), 1e-12);
        EXPECT_NEAR(obs.mean_kinetic_Lz, brute.mean_kinetic(t), 1e-12);
        EXPECT_NEAR(obs.mean_kinetic_Lz, obs.mean_canonical_Lz + obs.mean_diamagnetic_Lz, 1e-12);
        EXPECT_NEAR(obs.mean_canonical_Lz, -1.5, 1e-12);
        EXPECT_DOUBLE_EQ(obs.inertia_per_electron, obs.mean_rho_sq);
        EXPECT_NEAR(obs.com_x, 0.0, 1e-14);
        EXPECT_NEAR(obs.com_y, 0.0, 1e-14);
    }
}

TEST(Observe, AlignedExamples) {
    const auto ens = cv::build_vortex(defaults, 1, 2, 12, cv::phase_mode::Aligned{});
    auto obs = cv::observe(ens, 0);
    EXPECT_NEAR(obs.mean_rho_sq, 9.0, 1e-13);
    EXPECT_NEAR(obs.mean_kinetic_Lz, 3.0, 1e-13);
    obs = cv::observe(ens, pi);
    EXPECT_NEAR(obs.mean_rho_sq, 1.0, 1e-13);
    EXPECT_NEAR(obs.mean_kinetic_Lz, -1.0, 1e-13);
}

TEST(KineticLzSeries, AlignedFollowsOnePlusTwoCos) {
    const auto ens = cv::build_vortex(defaults, 1, 2, 12, cv::phase_mode::Aligned{});
    std::vector<double> grid;
    for (int k = 0; k <= 256; ++k) grid.push_back(2 * pi * k / 256);
    const auto series = cv::kinetic_Lz_series(ens, grid);
    ASSERT_EQ(series.values.size(), grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(series.values[i], 1 + 2 * std::cos(grid[i]), 1e-12);
    }
}

TEST(KineticLzSeries, UniformAndCenteredAreConstant) {
    const std::vector<double> grid{0.0, 0.5, 1.0, 4.0};
    const auto uni = cv::kinetic_Lz_series(cv::build_vortex(defaults, 1, 2, 8, cv::phase_mode::Uniform{16}), grid);
    for (double v : uni.values) EXPECT_NEAR(v, 1.0, 1e-12);
    const auto centered = cv::kinetic_Lz_series(cv::build_vortex(defaults, 1.5, 0, 4, cv::phase_mode::Aligned{}), grid);
    for (double v : centered.values) EXPECT_NEAR(v, 2.25, 1e-12);
}

TEST(KineticLzSeries, RejectsBadGrid) {
    const auto ens = cv::build_vortex(defaults, 1, 2, 2, cv::phase_mode::Aligned{});
    EXPECT_THROW(cv::kinetic_Lz_series(ens, std::vector<double>{}), cv::ValidationError);
    EXPECT_THROW(cv::kinetic_Lz_series(ens, std::vector<double>{0.0, 0.0}), cv::ValidationError);
}

TEST(KineticLzLaw, CosineLawHoldsForArbitraryEnsembles) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0, 2 * pi);
    std::uniform_int_distribution<int> count(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n_orbits = 1 + trial % 5;
        std::vector<std::vector<double>> phases(n_orbits);
        for (auto& list : phases) {
            const int c = count(rng);
            for (int j = 0; j < c; ++j) list.push_back(u(rng));
        }
        const double r = 0.2 + u(rng) / 3;
        const double rc = u(rng) / 2;
        const auto ens = cv::build_vortex(defaults, r, rc, n_orbits, cv::phase_mode::Explicit{phases}, 0.1);
        const auto law = cv::kinetic_Lz_law(ens);
        EXPECT_NEAR(law.offset, r * r, 1e-15);
        for (int k = 0; k < 50; ++k) {
            const double t = 0.13 * k;
            const double lhs = cv::observe(ens, t).mean_kinetic_Lz;
            EXPECT_NEAR(lhs, law(t), 1e-10);
        }
    }
}

TEST(KineticLzLaw, LeastSquaresFitRecoversOffset) {
    // Independent check: fit a + b cos t + c sin t to brute-force means.
    const std::vector<std::vector<double>> phases{{0.3}, {1.1, 2.0}, {4.0}};
    const oracle::BruteVortex brute{0.9, 1.4, 1, 1, phases};
    const int n = 64;
    double a = 0, b = 0, c = 0;
    for (int k = 0; k < n; ++k) {
        const double t = 2 * pi * k / n;
        const double v = brute.mean_kinetic(t);
        a += v / n;
        b += 2 * v * std::cos(t) / n;
        c += 2 * v * std::sin(t) / n;
    }
    const auto law = cv::kinetic_Lz_law(cv::build_vortex(defaults, 0.9, 1.4, 3, cv::phase_mode::Explicit{phases}));
    EXPECT_NEAR(a, law.offset, 1e-12);
    EXPECT_NEAR(std::hypot(b, c), law.amplitude, 1e-12);
}

TEST(EnergyPerElectron, Examples) {
    const auto r1 = cv::build_vortex(defaults, 1, 2, 8, cv::phase_mode::Uniform{16});
    EXPECT_NEAR(cv::energy_per_electron(r1), 0.5, 1e-15);
    const auto r2 = cv::build_vortex(defaults, 2, 1, 8, cv::phase_mode::Uniform{16});
    EXPECT_NEAR(cv::energy_per_electron(r2), 2.0, 1e-14);
    EXPECT_NEAR(cv::energy_per_electron(r1), 0.5 * 1.0 * cv::time_averaged_kinetic_Lz(r1), 1e-12);
}

TEST(EnergyPerElectron, RelationHoldsForAlignedAndExplicit) {
    const auto aligned = cv::build_vortex(defaults, 1, 2, 12, cv::phase_mode::Aligned{});
    EXPECT_NEAR(cv::energy_per_electron(aligned), 0.5 * cv::time_averaged_kinetic_Lz(aligned), 1e-12);
    const auto expl = cv::build_vortex(defaults, 0.7, 1.3, 2, cv::phase_mode::Explicit{{{0.2}, {2.9, 3.0}}});
    EXPECT_NEAR(cv::energy_per_electron(expl), 0.5 * cv::time_averaged_kinetic_Lz(expl, 7), 1e-12);
    EXPECT_THROW(cv::time_averaged_kinetic_Lz(expl, 1), cv::ValidationError);
}

TEST(ParallelAxis, UniformExample) {
    const auto ens = cv::build_vortex(defaults, 1, 2, 8, cv::phase_mode::Uniform{16});
    for (double t : {0.0, 1.0, 2.5}) {
        const auto pa = cv::parallel_axis(ens, t);
        EXPECT_NEAR(pa.total, 5.0, 1e-12);
        EXPECT_NEAR(pa.own, 5.0, 1e-12);
        EXPECT_NEAR(pa.transfer, 0.0, 1e-12);
    }
}

TEST(ParallelAxis, AlignedOscillates) {
    const auto ens = cv::build_vortex(defaults, 1, 2, 12, cv::phase_mode::Aligned{});
    for (int k = 0; k < 32; ++k) {
        const double t = 2 * pi * k / 32;
        const auto pa = cv::parallel_axis(ens, t);
        EXPECT_NEAR(pa.total, 5 + 4 * std::cos(t), 1e-12);
        EXPECT_NEAR(pa.transfer, 0.0, 1e-12);
    }
}

TEST(ParallelAxis, SingleElectron) {
    const auto ens = cv::build_vortex(defaults, 1, 2, 1, cv::phase_mode::Aligned{});
    for (double t : {0.0, 0.9, 2.0}) {
        const auto pa = cv::parallel_axis(ens, t);
        EXPECT_NEAR(pa.own, 0.0, 1e-15);
        EXPECT_NEAR(pa.transfer, cv::rho_squared(ens.electrons()[0], defaults, t), 1e-12);
    }
}

TEST(ParallelAxis, DecompositionIdentityProperty) {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(0, 2 * pi);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<double>> phases(3);
        for (auto& list : phases) list = {u(rng), u(rng)};
        const auto ens = cv::build_vortex(cv::PhysicalParams(1.7), 0.5 + u(rng) / 4, u(rng) / 3, 3,
                                          cv::phase_mode::Explicit{phases});
        for (int k = 0; k < 32; ++k) {
            const double t = u(rng);
            const auto pa = cv::parallel_axis(ens, t);
            EXPECT_NEAR(pa.own + pa.transfer, 1.7 * cv::observe(ens, t).mean_rho_sq, 1e-12);
        }
    }
}

TEST(RandomPhases, DeterministicAndCloseToUniformAverages) {
    const auto a = cv::build_vortex(defaults, 1, 2, 8, cv::phase_mode::Random{256, 42});
    const auto b = cv::build_vortex(defaults, 1, 2, 8, cv::phase_mode::Random{256, 42});
    ASSERT_EQ(a.n_electrons(), b.n_electrons());
    for (std::size_t i = 0; i < a.n_electrons(); ++i) {
        EXPECT_EQ(a.electrons()[i].theta, b.electrons()[i].theta);
    }
    const double tol = 3.0 / std::sqrt(static_cast<double>(a.n_electrons()));
    const auto obs = cv::observe(a, 0.7);
    EXPECT_NEAR(obs.mean_kinetic_Lz, 1.0, tol * 2.0);  // amplitude m w R R_cen = 2
    EXPECT_NEAR(obs.mean_rho_sq, 5.0, tol * 4.0);      // amplitude 2 R R_cen = 4
}

TEST(PhaseMode, Names) {
    EXPECT_EQ(cv::phase_mode_name(cv::phase_mode::Uniform{}), "uniform");
    EXPECT_EQ(cv::phase_mode_name(cv::phase_mode::Aligned{}), "aligned");
    EXPECT_EQ(cv::phase_mode_name(cv::phase_mode::Explicit{}), "explicit");
    EXPECT_EQ(cv::phase_mode_name(cv::phase_mode::Random{}), "random");
}
