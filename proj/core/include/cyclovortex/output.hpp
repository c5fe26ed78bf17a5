#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cyclovortex/config.hpp"
#include "cyclovortex/currents.hpp"
#include "cyclovortex/oracles.hpp"

namespace cyclovortex {

enum class Command { orbit, vortex, field, landau, verify };

std::string_view to_string(Command command);

/// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_verify_failed = 2;

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

inline constexpr std::string_view vortex_csv_header =
    "t,mean_rho_sq,Lkin_mean,Lz_mean,Ldia_mean,com_x,com_y,inertia_own,inertia_transfer";
inline constexpr std::string_view orbit_csv_header = "t,x,y,vx,vy,rho_sq,Lz,Lkin,Ldia,energy";
inline constexpr std::string_view profile_csv_header = "bin,r_lo,r_hi,r_mid,count,j_phi";

/// Per-step state and angular-momentum breakdown of the orbit centered at
/// (R_cen, 0) with initial phase global_phase.
std::string orbit_csv(const RunConfig& config, const GeometryCase& geometry);
/// Ensemble observables on the configured time grid.
std::string vortex_csv(const RunConfig& config, const GeometryCase& geometry);
std::string profile_csv(const RadialProfile& profile);
std::string profile_csv(const RunConfig& config, const GeometryCase& geometry);
std::string landau_json(const RunConfig& config);

/// File written for `command`, e.g. "vortex.csv" or "vortex_zero.csv" when the
/// scenario yields several cases.
std::string output_filename(Command command, const GeometryCase& geometry, bool multiple_cases);

/// Runs one command and writes its files into out_dir (created if missing).
/// Returns the paths written. Throws IoError when a file cannot be written.
struct RunResult {
    int exit_code = exit_ok;
    std::vector<std::filesystem::path> files;
};
RunResult run_command(Command command, const RunConfig& config, const std::filesystem::path& out_dir);

}  // namespace cyclovortex
