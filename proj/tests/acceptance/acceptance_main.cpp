// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails. argv[1] is the path of the command-line tool.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cyclovortex/angular_momenta.hpp"
#include "cyclovortex/config.hpp"
#include "cyclovortex/currents.hpp"
#include "cyclovortex/dynamics.hpp"
#include "cyclovortex/ensemble.hpp"
#include "cyclovortex/oracles.hpp"
#include "cyclovortex/output.hpp"
#include "oracle.hpp"

namespace cv = cyclovortex;
namespace fs = std::filesystem;
using oracle::pi;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void within(double value, double tol, const std::string& what) {
        std::ostringstream s;
        s << what << " = " << value << " (limit " << tol << ")";
        require(std::abs(value) < tol, s.str());
    }
};

const cv::PhysicalParams defaults{};

double rk4_period_error(const cv::CyclotronOrbit& o, std::size_t steps) {
    const double T = defaults.period();
    const auto traj =
        cv::integrate_lorentz(cv::orbit_state(o, defaults, 0), defaults, T / steps, steps, cv::Method::rk4);
    double worst = 0;
    for (const auto& s : traj.states) {
        const auto ref = oracle::on_circle(o.x0, o.y0, o.radius, o.theta, 1.0, s.t);
        worst = std::max(worst, std::hypot(s.x - ref.x, s.y - ref.y));
    }
    return worst;
}

Outcome integrator_fidelity() {
    Outcome r;
    const cv::CyclotronOrbit o{2, 0, 1, 0};
    const double e1024 = rk4_period_error(o, 1024);
    r.within(e1024, 1e-8 * o.radius, "rk4 max position error at T/1024");
    const double e512 = rk4_period_error(o, 512);
    const double ratio = e512 / e1024;
    r.require(ratio >= 12 && ratio <= 20, "error ratio " + std::to_string(ratio) + " outside [12, 20]");
    return r;
}

Outcome conservation() {
    Outcome r;
    const cv::CyclotronOrbit o{2, 0, 1, 0.3};
    const double T = defaults.period();
    const double l0 = cv::orbit_canonical_Lz(o, defaults);
    double drift = 0;
    for (const auto& s : cv::sample_orbit(o, defaults, 0, T / 1024, 10240).states) {
        drift = std::max(drift, std::abs(cv::canonical_Lz(s, defaults) - l0));
    }
    r.within(drift, 1e-12, "analytic canonical L_z drift");
    const auto s0 = cv::orbit_state(o, defaults, 0);
    drift = 0;
    for (const auto& s : cv::integrate_lorentz(s0, defaults, T / 1024, 10240, cv::Method::rk4).states) {
        drift = std::max(drift, std::abs(cv::canonical_Lz(s, defaults) - l0));
    }
    r.within(drift, 1e-8, "rk4 canonical L_z drift");
    drift = 0;
    for (const auto& s : cv::integrate_lorentz(s0, defaults, T / 64, 640, cv::Method::boris).states) {
        drift = std::max(drift, std::abs(s.speed() - s0.speed()));
    }
    r.within(drift, 1e-10, "boris speed drift");
    return r;
}

Outcome rho_squared_ode() {
    Outcome r;
    const cv::CyclotronOrbit o{2, 0, 1, 0};
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const double t = 2 * pi * k / 100;
        worst = std::max(worst, std::abs(cv::rho_squared_ode_residual(o, defaults, t, 1e-4)));
        const double lhs = oracle::second_derivative([&](double s) { return cv::rho_squared(o, defaults, s); }, t, 1e-3);
        r.within(lhs + 4 * std::cos(t), 1e-6, "d2 rho^2/dt2 vs -4 cos t");
    }
    r.within(worst, 1e-6, "rho^2 ODE residual");
    return r;
}

Outcome classification() {
    Outcome r;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-3, 3);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const cv::CyclotronOrbit o{u(rng), u(rng), std::abs(u(rng)), u(rng)};
        const auto s = cv::orbit_state(o, defaults, u(rng));
        worst = std::max(worst, std::abs(cv::canonical_Lz(s, defaults) - cv::orbit_canonical_Lz(o, defaults)));
    }
    r.within(worst, 1e-10, "orbit vs state canonical L_z");
    r.require(cv::classify_orbit({1, 0, 2, 0}) == cv::OrbitCategory::Positive, "(2,1) not Positive");
    r.require(cv::classify_orbit({1, 0, 1, 0}) == cv::OrbitCategory::Zero, "(1,1) not Zero");
    r.require(cv::classify_orbit({2, 0, 1, 0}) == cv::OrbitCategory::Negative, "(1,2) not Negative");
    return r;
}

Outcome winding() {
    Outcome r;
    const std::pair<cv::CyclotronOrbit, double> cases[] = {
        {{1, 0, 2, 0}, 1.0}, {{1, 0, 1, 0}, 0.5}, {{2, 0, 1, 0}, 0.0}};
    for (const auto& [o, expected] : cases) {
        r.within(cv::winding_angle(o, defaults, 4096).mean_omega - expected, 1e-9, "winding mean omega error");
    }
    return r;
}

Outcome kinetic_cosine_law() {
    Outcome r;
    const auto fig3 = cv::parse_config("scenario = fig3");
    const auto rows = cv::vortex_csv(fig3, fig3.cases()[0]);
    std::istringstream in(rows);
    std::string line;
    std::getline(in, line);
    double worst = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string t, rho, lkin;
        std::getline(ls, t, ',');
        std::getline(ls, rho, ',');
        std::getline(ls, lkin, ',');
        worst = std::max(worst, std::abs(std::stod(lkin) - (1 + 2 * std::cos(std::stod(t)))));
    }
    r.within(worst, 1e-12, "fig3 Lkin_mean - (1 + 2 cos t)");
    const auto fig2 = cv::parse_config("scenario = fig2");
    for (const auto& c : fig2.cases()) {
        const auto ens = cv::build_vortex(defaults, c.radius, c.center_distance, 8, cv::phase_mode::Uniform{16});
        for (double t : fig2.time.grid()) {
            r.within(cv::observe(ens, t).mean_kinetic_Lz - c.radius * c.radius, 1e-12,
                     "fig2 " + c.label + " Lkin_mean - m w R^2");
        }
    }
    return r;
}

Outcome ensemble_inertia() {
    Outcome r;
    for (auto [rad, rc] : {std::pair{2.0, 1.0}, std::pair{1.0, 1.0}, std::pair{1.0, 2.0}}) {
        const auto ens = cv::build_vortex(defaults, rad, rc, 8, cv::phase_mode::Uniform{16});
        for (int k = 0; k < 32; ++k) {
            const double t = 2 * pi * k / 32;
            const auto obs = cv::observe(ens, t);
            const auto pa = cv::parallel_axis(ens, t);
            r.within(obs.mean_rho_sq - (rad * rad + rc * rc), 1e-12, "mean rho^2 - (R^2 + R_cen^2)");
            r.within(pa.own + pa.transfer - obs.mean_rho_sq, 1e-12, "own + transfer - m mean rho^2");
        }
    }
    const auto single = cv::build_vortex(defaults, 1, 2, 1, cv::phase_mode::Aligned{});
    for (int k = 0; k < 32; ++k) {
        const double t = 2 * pi * k / 32;
        const auto p = oracle::on_circle(2, 0, 1, 0, 1, t);
        r.within(cv::parallel_axis(single, t).transfer - (p.x * p.x + p.y * p.y), 1e-12,
                 "single-electron transfer - rho^2");
    }
    return r;
}

Outcome energy_relation() {
    Outcome r;
    for (const char* name : {"fig1", "fig2", "fig3"}) {
        const auto cfg = cv::parse_config(std::string("scenario = ") + name);
        for (const auto& c : cfg.cases()) {
            const auto ens = cv::build_vortex(defaults, c.radius, c.center_distance, cfg.geometry.n_orbits,
                                              cfg.phase_mode());
            r.within(cv::energy_per_electron(ens) - 0.5 * cv::time_averaged_kinetic_Lz(ens), 1e-12,
                     std::string(name) + "/" + c.label + " energy - w Lkin / 2");
        }
    }
    return r;
}

Outcome landau() {
    Outcome r;
    const std::pair<cv::LandauIndex, double> table[] = {
        {{0, 0}, 0.5}, {{0, 1}, 1.5}, {{0, -1}, 0.5}, {{1, 0}, 1.5}};
    for (const auto& [idx, e] : table) {
        r.require(cv::landau_energy(idx, defaults) == e,
                  "E(" + std::to_string(idx.n) + "," + std::to_string(idx.l) + ") != " + std::to_string(e));
    }
    for (int n = 0; n < 4; ++n) {
        for (int l = 0; l < 4; ++l) {
            r.within(cv::correspondence_residual({n, l}, defaults), 1e-12, "classical-quantum correspondence");
        }
    }
    return r;
}

Outcome profile_structure() {
    Outcome r;
    auto nonempty = [](const cv::RadialProfile& p) {
        std::vector<double> out;
        for (std::size_t i = 0; i < p.n_bins(); ++i) {
            if (p.counts[i] > 0) out.push_back(p.j_phi[i]);
        }
        return out;
    };
    const auto pos = nonempty(cv::current_profile(cv::build_vortex(defaults, 2, 1, 8, cv::phase_mode::Uniform{16})));
    r.require(std::all_of(pos.begin(), pos.end(), [](double j) { return j > 0; }), "L_z > 0 profile not co-rotating");

    const auto zero = nonempty(cv::current_profile(cv::build_vortex(defaults, 1, 1, 8, cv::phase_mode::Uniform{64}), 20));
    r.require(zero.size() >= 2, "L_z = 0 profile has fewer than two populated bins");
    if (zero.size() >= 2) r.within(std::abs(zero.front() / zero.back()), 0.15, "L_z = 0 inner/outer ratio");

    const auto neg_prof = cv::current_profile(cv::build_vortex(defaults, 1, 2, 8, cv::phase_mode::Uniform{16}));
    r.require(cv::sign_changes(neg_prof) == 1, "L_z < 0 profile sign changes != 1");

    for (auto [rad, rc] : {std::pair{2.0, 1.0}, std::pair{1.0, 2.0}}) {
        const auto e = cv::edge_azimuthal_speed(cv::build_vortex(defaults, rad, rc, 8, cv::phase_mode::Uniform{16}));
        r.within(std::abs(e.inner) - rad, 1e-12, "inner edge speed - R |w|");
        r.within(std::abs(e.outer) - rad, 1e-12, "outer edge speed - R |w|");
    }
    const auto ez = cv::edge_azimuthal_speed(cv::build_vortex(defaults, 1, 1, 8, cv::phase_mode::Uniform{16}));
    r.within(std::abs(ez.outer) - 1.0, 1e-12, "zero-category outer edge speed - R |w|");
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_tool(const std::string& tool, const std::string& args) {
    const std::string cmd = "\"" + tool + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_determinism(const std::string& tool) {
    Outcome r;
    if (tool.empty()) {
        r.require(false, "no tool path given");
        return r;
    }
    const fs::path root = fs::current_path() / "acceptance_cli";
    fs::remove_all(root);
    const char* commands[] = {"orbit", "vortex", "field", "landau", "verify"};
    for (const char* scenario : {"fig2", "fig3"}) {
        for (const char* cmd : commands) {
            for (const char* run : {"a", "b"}) {
                const auto dir = root / scenario / run;
                const int code = run_tool(tool, std::string("--scenario ") + scenario + " --out \"" + dir.string() +
                                                    "\" " + cmd);
                r.require(code == 0, std::string(cmd) + " on " + scenario + " exited " + std::to_string(code));
            }
        }
        std::size_t compared = 0;
        for (const auto& entry : fs::directory_iterator(root / scenario / "a")) {
            const auto other = root / scenario / "b" / entry.path().filename();
            r.require(fs::exists(other) && slurp(entry.path()) == slurp(other),
                      entry.path().filename().string() + " differs between runs");
            ++compared;
        }
        r.require(compared > 0, "no output files produced");
    }
    const int verify_code = run_tool(tool, "--out \"" + (root / "defaults").string() + "\" verify");
    r.require(verify_code == 0, "verify on defaults exited " + std::to_string(verify_code));
    fs::remove_all(root);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string tool = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1  integrator fidelity", integrator_fidelity},
        {"2  conservation", conservation},
        {"3  rho^2 ODE residual", rho_squared_ode},
        {"4  orbit classification", classification},
        {"5  winding frequencies", winding},
        {"6  kinetic L_z cosine law", kinetic_cosine_law},
        {"7  ensemble radius and parallel axis", ensemble_inertia},
        {"8  energy vs kinetic L_z", energy_relation},
        {"9  Landau table and correspondence", landau},
        {"10 current profile structure", profile_structure},
        {"11 CLI determinism", [&] { return cli_determinism(tool); }},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %s%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.ok ? "" : ": ", o.detail.c_str());
        if (!o.ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
