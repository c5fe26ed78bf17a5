#include "cyclovortex/output.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "cyclovortex/angular_momenta.hpp"
#include "cyclovortex/ensemble.hpp"
#include "cyclovortex/errors.hpp"
#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

namespace cyclovortex {

std::string_view to_string(Command command) {
    switch (command) {
        case Command::orbit: return "orbit";
        case Command::vortex: return "vortex";
        case Command::field: return "field";
        case Command::landau: return "landau";
        case Command::verify: return "verify";
    }
    return "unknown";
}

std::string format_double(double value) {
    if (value == 0.0) return "0";  // also folds -0
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) return "nan";
    return std::string(buf.data(), ptr);
}

namespace {

class CsvRow {
  public:
    explicit CsvRow(std::string& out) : out_(out) {}
    ~CsvRow() { out_ += '\n'; }
    CsvRow(const CsvRow&) = delete;
    CsvRow& operator=(const CsvRow&) = delete;

    CsvRow& operator<<(double v) { return field(format_double(v)); }
    CsvRow& operator<<(std::size_t v) { return field(std::to_string(v)); }

  private:
    CsvRow& field(const std::string& s) {
        if (!first_) out_ += ',';
        out_ += s;
        first_ = false;
        return *this;
    }

    std::string& out_;
    bool first_ = true;
};

CyclotronOrbit single_orbit(const RunConfig& config, const GeometryCase& geometry) {
    return CyclotronOrbit{.x0 = geometry.center_distance,
                          .y0 = 0.0,
                          .radius = geometry.radius,
                          .theta = config.geometry.global_phase};
}

VortexEnsemble case_ensemble(const RunConfig& config, const GeometryCase& geometry) {
    return build_vortex(config.params.physical(), geometry.radius, geometry.center_distance,
                        config.geometry.n_orbits, config.phase_mode(), config.geometry.global_phase);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

std::string orbit_csv(const RunConfig& config, const GeometryCase& geometry) {
    const PhysicalParams params = config.params.physical();
    const CyclotronOrbit orbit = single_orbit(config, geometry);
    const auto& time = config.time;

    Trajectory traj;
    if (config.analysis.method == Method::analytic) {
        traj = sample_orbit(orbit, params, 0.0, time.dt(), time.n_steps);
    } else {
        traj = integrate_lorentz(orbit_state(orbit, params, 0.0), params, time.dt(), time.n_steps,
                                 config.analysis.method);
    }

    std::string out(orbit_csv_header);
    out += '\n';
    for (const auto& s : traj.states) {
        const auto am = angular_momenta(s, params);
        CsvRow(out) << s.t << s.x << s.y << s.vx << s.vy << s.rho_squared() << am.canonical
                    << am.kinetic << am.diamagnetic << energy_2d(s, params);
    }
    return out;
}

std::string vortex_csv(const RunConfig& config, const GeometryCase& geometry) {
    const VortexEnsemble ens = case_ensemble(config, geometry);
    std::string out(vortex_csv_header);
    out += '\n';
    for (double t : config.time.grid()) {
        const EnsembleObservables obs = observe(ens, t);
        const ParallelAxis pa = parallel_axis(ens, t);
        CsvRow(out) << obs.t << obs.mean_rho_sq << obs.mean_kinetic_Lz << obs.mean_canonical_Lz
                    << obs.mean_diamagnetic_Lz << obs.com_x << obs.com_y << pa.own << pa.transfer;
    }
    return out;
}

std::string profile_csv(const RadialProfile& profile) {
    std::string out(profile_csv_header);
    out += '\n';
    for (std::size_t b = 0; b < profile.n_bins(); ++b) {
        const double lo = profile.bin_edges[b];
        const double hi = profile.bin_edges[b + 1];
        CsvRow(out) << b << lo << hi << 0.5 * (lo + hi) << profile.counts[b] << profile.j_phi[b];
    }
    return out;
}

std::string profile_csv(const RunConfig& config, const GeometryCase& geometry) {
    return profile_csv(current_profile(case_ensemble(config, geometry), config.analysis.n_bins,
                                       config.analysis.t_samples));
}

std::string landau_json(const RunConfig& config) {
    const PhysicalParams params = config.params.physical();
    const auto& a = config.analysis;
    nlohmann::ordered_json doc;
    doc["interpretation"] = landau_interpretation;
    doc["hbar_omega_c"] = params.hbar() * params.omega_c();
    auto rows = nlohmann::ordered_json::array();
    for (int n = 0; n <= a.landau_n_max; ++n) {
        for (int l = a.landau_l_min; l <= a.landau_l_max; ++l) {
            const double e = landau_energy({n, l}, params);
            nlohmann::ordered_json row;
            row["n"] = n;
            row["l"] = l;
            row["energy"] = e;
            row["level"] = n + 0.5 * (std::abs(l) + l) + 0.5;
            if (params.omega_c() != 0.0) row["kinetic_Lz"] = landau_kinetic_Lz({n, l}, params);
            rows.push_back(std::move(row));
        }
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string output_filename(Command command, const GeometryCase& geometry, bool multiple_cases) {
    std::string stem;
    switch (command) {
        case Command::orbit: stem = "orbit"; break;
        case Command::vortex: stem = "vortex"; break;
        case Command::field: stem = "profile"; break;
        case Command::landau: return "landau.json";
        case Command::verify: return "verify.json";
    }
    if (multiple_cases) stem += "_" + geometry.label;
    return stem + ".csv";
}

RunResult run_command(Command command, const RunConfig& config, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir)) {
        throw IoError("cannot create output directory '" + out_dir.string() + "'");
    }

    RunResult result;
    auto emit = [&](const std::string& name, const std::string& contents) {
        const auto path = out_dir / name;
        write_file(path, contents);
        result.files.push_back(path);
    };

    switch (command) {
        case Command::landau:
            emit("landau.json", landau_json(config));
            break;
        case Command::verify: {
            const VerifyReport report = verify_all(config);
            emit("verify.json", report_to_json(report));
            result.exit_code = report.passed() ? exit_ok : exit_verify_failed;
            break;
        }
        case Command::orbit:
        case Command::vortex:
        case Command::field: {
            const auto cases = config.cases();
            const bool multiple = cases.size() > 1;
            for (const auto& c : cases) {
                std::string body;
                if (command == Command::orbit) body = orbit_csv(config, c);
                else if (command == Command::vortex) body = vortex_csv(config, c);
                else body = profile_csv(config, c);
                emit(output_filename(command, c, multiple), body);
            }
            break;
        }
    }
    return result;
}

}  // namespace cyclovortex
