// Command-line front end: orbit | vortex | field | landau | verify.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "cyclovortex/config.hpp"
#include "cyclovortex/errors.hpp"
#include "cyclovortex/output.hpp"

namespace cv = cyclovortex;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cv::IoError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical electron vortices from ensembles of cyclotron orbits"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir = "out";
    std::string scenario;

    app.add_option("--config", config_path, "Config file (key = value, [sections], # comments)")
        ->check(CLI::ExistingFile);
    app.add_option("--set", overrides, "Override a config key, e.g. --set geometry.R=2")
        ->take_all();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--scenario", scenario,
                   "Preset: fig1, fig1-{positive,zero,negative}, fig2, fig2-{...}, fig3");

    const std::vector<std::pair<cv::Command, std::string>> commands{
        {cv::Command::orbit, "Single-orbit state and angular momenta per time step"},
        {cv::Command::vortex, "Ensemble observables time series"},
        {cv::Command::field, "Radial azimuthal current profile"},
        {cv::Command::landau, "Landau energy table"},
        {cv::Command::verify, "Run the full verification catalog"},
    };
    for (const auto& [cmd, help] : commands) {
        app.add_subcommand(std::string(cv::to_string(cmd)), help);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? cv::exit_ok : cv::exit_error;
    }

    cv::Command command = cv::Command::verify;
    for (const auto& [cmd, help] : commands) {
        if (app.got_subcommand(std::string(cv::to_string(cmd)))) command = cmd;
    }

    try {
        const std::string text = config_path.empty() ? std::string() : read_file(config_path);
        std::vector<std::string> all_overrides;
        if (!scenario.empty()) all_overrides.push_back("scenario=" + scenario);
        all_overrides.insert(all_overrides.end(), overrides.begin(), overrides.end());

        const cv::RunConfig config = cv::parse_config(text, all_overrides);
        const cv::RunResult result = cv::run_command(command, config, out_dir);
        for (const auto& path : result.files) std::cout << path.string() << '\n';
        if (result.exit_code == cv::exit_verify_failed) {
            std::cerr << "verify: one or more checks failed\n";
        }
        return result.exit_code;
    } catch (const cv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const cv::ValidationError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
    } catch (const cv::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return cv::exit_error;
}
