#include "cyclovortex/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>

#include "cyclovortex/errors.hpp"

namespace cyclovortex {

namespace {

struct ScenarioName {
    Scenario scenario;
    std::string_view name;
};

constexpr std::array<ScenarioName, 9> scenario_names{{
    {Scenario::fig1, "fig1"},
    {Scenario::fig1_positive, "fig1-positive"},
    {Scenario::fig1_zero, "fig1-zero"},
    {Scenario::fig1_negative, "fig1-negative"},
    {Scenario::fig2, "fig2"},
    {Scenario::fig2_positive, "fig2-positive"},
    {Scenario::fig2_zero, "fig2-zero"},
    {Scenario::fig2_negative, "fig2-negative"},
    {Scenario::fig3, "fig3"},
}};

// (R, R_cen) of the three orbit categories used by the fig1 and fig2 presets.
constexpr std::array<std::pair<double, double>, 3> category_geometry{{{2.0, 1.0}, {1.0, 1.0}, {1.0, 2.0}}};
constexpr std::array<std::string_view, 3> category_labels{"positive", "zero", "negative"};

constexpr std::array<std::string_view, 5> sections{"", "params", "geometry", "time", "analysis"};

// Canonical key -> section it belongs to.
const std::map<std::string, std::string, std::less<>>& key_sections() {
    static const std::map<std::string, std::string, std::less<>> table{
        {"scenario", ""},
        {"mass", "params"},
        {"charge", "params"},
        {"field", "params"},
        {"hbar", "params"},
        {"R", "geometry"},
        {"R_cen", "geometry"},
        {"n_orbits", "geometry"},
        {"phase_mode", "geometry"},
        {"n_per_orbit", "geometry"},
        {"global_phase", "geometry"},
        {"phases", "geometry"},
        {"t_max", "time"},
        {"n_steps", "time"},
        {"n_bins", "analysis"},
        {"t_samples", "analysis"},
        {"fd_step", "analysis"},
        {"seed", "analysis"},
        {"winding_samples", "analysis"},
        {"rk4_steps_per_period", "analysis"},
        {"classify_tol", "analysis"},
        {"property_samples", "analysis"},
        {"landau_n_max", "analysis"},
        {"landau_l_min", "analysis"},
        {"landau_l_max", "analysis"},
        {"method", "analysis"},
    };
    return table;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string value;
    int line = 0;  // 0 for command-line overrides
};

[[noreturn]] void bad_value(const std::string& key, const Entry& e, std::string_view expected) {
    std::ostringstream msg;
    if (e.line > 0) msg << "line " << e.line << ": ";
    msg << "key '" << key << "': expected " << expected << ", got '" << e.value << "'";
    throw ParseError(msg.str(), e.line, key);
}

std::optional<double> plain_number(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// Accepts plain numbers and multiples of pi: "pi", "-pi", "2pi", "2*pi", "pi/2", "3*pi/4".
std::optional<double> parse_real(std::string_view s) {
    s = trim(s);
    const auto pos = s.find("pi");
    if (pos == std::string_view::npos) return plain_number(s);

    std::string_view prefix = trim(s.substr(0, pos));
    std::string_view suffix = trim(s.substr(pos + 2));
    if (!prefix.empty() && prefix.back() == '*') prefix = trim(prefix.substr(0, prefix.size() - 1));

    double factor = 1.0;
    if (prefix == "-") {
        factor = -1.0;
    } else if (!prefix.empty() && prefix != "+") {
        const auto f = plain_number(prefix);
        if (!f) return std::nullopt;
        factor = *f;
    }
    double divisor = 1.0;
    if (!suffix.empty()) {
        if (suffix.front() != '/') return std::nullopt;
        const auto d = plain_number(suffix.substr(1));
        if (!d || *d == 0.0) return std::nullopt;
        divisor = *d;
    }
    return factor * std::numbers::pi / divisor;
}

double get_real(const std::string& key, const Entry& e) {
    const auto v = parse_real(e.value);
    if (!v) bad_value(key, e, "a real number");
    return *v;
}

template <class Int>
Int get_int(const std::string& key, const Entry& e) {
    std::string_view s = trim(e.value);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        bad_value(key, e, std::is_signed_v<Int> ? "an integer" : "a nonnegative integer");
    }
    return v;
}

std::vector<std::vector<double>> get_phase_lists(const std::string& key, const Entry& e) {
    std::vector<std::vector<double>> out;
    std::string_view rest = e.value;
    while (true) {
        const auto semi = rest.find(';');
        std::string_view group = trim(rest.substr(0, semi));
        std::vector<double> phases;
        while (!group.empty()) {
            const auto comma = group.find(',');
            const auto v = parse_real(group.substr(0, comma));
            if (!v) bad_value(key, e, "phase lists like '0, pi; pi/2'");
            phases.push_back(*v);
            if (comma == std::string_view::npos) break;
            group = group.substr(comma + 1);
        }
        out.push_back(std::move(phases));
        if (semi == std::string_view::npos) break;
        rest = rest.substr(semi + 1);
    }
    return out;
}

// Resolves "section.key" or "key" to the canonical key name.
std::string canonical_key(std::string_view raw, std::string_view section, int line) {
    std::string_view key = trim(raw);
    std::string_view given_section = section;
    if (const auto dot = key.find('.'); dot != std::string_view::npos) {
        given_section = key.substr(0, dot);
        key = key.substr(dot + 1);
    }
    const auto& table = key_sections();
    const auto it = table.find(key);
    if (it == table.end()) {
        throw ParseError((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                             "unknown key '" + std::string(key) + "'",
                         line, std::string(key));
    }
    if (!given_section.empty() && given_section != it->second) {
        throw ParseError((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                             "key '" + std::string(key) + "' belongs to section [" + it->second +
                             "], not [" + std::string(given_section) + "]",
                         line, std::string(key));
    }
    return it->first;
}

void apply_key(RunConfig& cfg, const std::string& key, const Entry& e) {
    auto& g = cfg.geometry;
    auto& a = cfg.analysis;
    if (key == "mass") cfg.params.mass = get_real(key, e);
    else if (key == "charge") cfg.params.charge = get_real(key, e);
    else if (key == "field") cfg.params.field = get_real(key, e);
    else if (key == "hbar") cfg.params.hbar = get_real(key, e);
    else if (key == "R") g.radius = get_real(key, e);
    else if (key == "R_cen") g.center_distance = get_real(key, e);
    else if (key == "n_orbits") g.n_orbits = get_int<std::size_t>(key, e);
    else if (key == "phase_mode") g.phase_mode = std::string(trim(e.value));
    else if (key == "n_per_orbit") g.n_per_orbit = get_int<std::size_t>(key, e);
    else if (key == "global_phase") g.global_phase = get_real(key, e);
    else if (key == "phases") g.phases = get_phase_lists(key, e);
    else if (key == "t_max") cfg.time.t_max = get_real(key, e);
    else if (key == "n_steps") cfg.time.n_steps = get_int<std::size_t>(key, e);
    else if (key == "n_bins") a.n_bins = get_int<std::size_t>(key, e);
    else if (key == "t_samples") a.t_samples = get_int<std::size_t>(key, e);
    else if (key == "fd_step") a.fd_step = get_real(key, e);
    else if (key == "seed") a.seed = get_int<std::uint64_t>(key, e);
    else if (key == "winding_samples") a.winding_samples = get_int<std::size_t>(key, e);
    else if (key == "rk4_steps_per_period") a.rk4_steps_per_period = get_int<std::size_t>(key, e);
    else if (key == "classify_tol") a.classify_tol = get_real(key, e);
    else if (key == "property_samples") a.property_samples = get_int<std::size_t>(key, e);
    else if (key == "landau_n_max") a.landau_n_max = get_int<int>(key, e);
    else if (key == "landau_l_min") a.landau_l_min = get_int<int>(key, e);
    else if (key == "landau_l_max") a.landau_l_max = get_int<int>(key, e);
    else if (key == "method") {
        try {
            a.method = method_from_string(trim(e.value));
        } catch (const ValidationError&) {
            bad_value(key, e, "analytic, rk4 or boris");
        }
    }
}

bool is_multi(Scenario s) { return s == Scenario::fig1 || s == Scenario::fig2; }

}  // namespace

std::string_view to_string(Scenario scenario) {
    for (const auto& s : scenario_names) {
        if (s.scenario == scenario) return s.name;
    }
    return "unknown";
}

std::optional<Scenario> scenario_from_string(std::string_view name) {
    for (const auto& s : scenario_names) {
        if (s.name == name) return s.scenario;
    }
    return std::nullopt;
}

std::vector<double> TimeConfig::grid() const {
    std::vector<double> out(n_steps + 1);
    for (std::size_t k = 0; k <= n_steps; ++k) {
        out[k] = t_max * static_cast<double>(k) / static_cast<double>(n_steps);
    }
    return out;
}

void apply_scenario(RunConfig& cfg, Scenario scenario) {
    auto& g = cfg.geometry;
    g.global_phase = 0.0;
    g.phases.clear();
    auto set_category = [&](std::size_t i) {
        g.radius = category_geometry[i].first;
        g.center_distance = category_geometry[i].second;
    };
    switch (scenario) {
        case Scenario::fig1:
        case Scenario::fig1_positive: set_category(0); break;
        case Scenario::fig1_zero: set_category(1); break;
        case Scenario::fig1_negative: set_category(2); break;
        case Scenario::fig2:
        case Scenario::fig2_positive: set_category(0); break;
        case Scenario::fig2_zero: set_category(1); break;
        case Scenario::fig2_negative: set_category(2); break;
        case Scenario::fig3: set_category(2); break;
    }
    switch (scenario) {
        case Scenario::fig1:
        case Scenario::fig1_positive:
        case Scenario::fig1_zero:
        case Scenario::fig1_negative:
            g.n_orbits = 1;
            g.phase_mode = "aligned";
            break;
        case Scenario::fig2:
        case Scenario::fig2_positive:
        case Scenario::fig2_zero:
        case Scenario::fig2_negative:
            g.n_orbits = 8;
            g.phase_mode = "uniform";
            g.n_per_orbit = 16;
            break;
        case Scenario::fig3:
            g.n_orbits = 12;
            g.phase_mode = "aligned";
            break;
    }
    cfg.scenario = scenario;
}

std::vector<GeometryCase> RunConfig::cases() const {
    const bool overridden = explicit_keys.contains("geometry.R") ||
                            explicit_keys.contains("geometry.R_cen");
    if (scenario && is_multi(*scenario) && !overridden) {
        std::vector<GeometryCase> out;
        for (std::size_t i = 0; i < 3; ++i) {
            out.push_back({std::string(category_labels[i]), category_geometry[i].first,
                           category_geometry[i].second});
        }
        return out;
    }
    std::string label = scenario && !overridden ? std::string(to_string(*scenario)) : "custom";
    return {{label, geometry.radius, geometry.center_distance}};
}

PhaseMode RunConfig::phase_mode() const {
    const auto& mode = geometry.phase_mode;
    if (mode == "uniform") return phase_mode::Uniform{geometry.n_per_orbit};
    if (mode == "aligned") return phase_mode::Aligned{};
    if (mode == "explicit") return phase_mode::Explicit{geometry.phases};
    if (mode == "random") return phase_mode::Random{geometry.n_per_orbit, analysis.seed};
    throw ValidationError("phase_mode must be uniform, aligned, explicit or random");
}

void validate(const RunConfig& cfg) {
    (void)cfg.params.physical();
    const auto& g = cfg.geometry;
    if (!(g.radius > 0.0) || !std::isfinite(g.radius)) throw ValidationError("R must be positive");
    if (!(g.center_distance >= 0.0) || !std::isfinite(g.center_distance)) {
        throw ValidationError("R_cen must be nonnegative");
    }
    if (g.n_orbits < 1) throw ValidationError("n_orbits must be at least 1");
    if (!std::isfinite(g.global_phase)) throw ValidationError("global_phase must be finite");
    (void)cfg.phase_mode();
    if ((g.phase_mode == "uniform" || g.phase_mode == "random") && g.n_per_orbit < 2) {
        throw ValidationError("n_per_orbit must be at least 2 for " + g.phase_mode + " phases");
    }
    if (g.phase_mode == "explicit") {
        if (g.phases.size() != g.n_orbits) {
            throw ValidationError("phases must list one group per orbit");
        }
        for (const auto& list : g.phases) {
            if (list.empty()) throw ValidationError("each phase group must be nonempty");
        }
    }

    if (!(cfg.time.t_max > 0.0) || !std::isfinite(cfg.time.t_max)) {
        throw ValidationError("t_max must be positive");
    }
    if (cfg.time.n_steps < 1) throw ValidationError("n_steps must be at least 1");

    const auto& a = cfg.analysis;
    if (a.n_bins < 4) throw ValidationError("n_bins must be at least 4");
    if (a.t_samples < 1) throw ValidationError("t_samples must be at least 1");
    if (!(a.fd_step > 0.0)) throw ValidationError("fd_step must be positive");
    if (a.winding_samples < 8) throw ValidationError("winding_samples must be at least 8");
    if (a.rk4_steps_per_period < 1) throw ValidationError("rk4_steps_per_period must be at least 1");
    if (!(a.classify_tol > 0.0)) throw ValidationError("classify_tol must be positive");
    if (a.property_samples < 1) throw ValidationError("property_samples must be at least 1");
    if (a.landau_n_max < 0) throw ValidationError("landau_n_max must be nonnegative");
    if (a.landau_l_min > a.landau_l_max) {
        throw ValidationError("landau_l_min must not exceed landau_l_max");
    }
}

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
    std::map<std::string, Entry> entries;

    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError("line " + std::to_string(line_no) + ": unterminated section header",
                                 line_no, "");
            }
            const std::string name(trim(line.substr(1, line.size() - 2)));
            if (std::find(sections.begin(), sections.end(), name) == sections.end() || name.empty()) {
                throw ParseError("line " + std::to_string(line_no) + ": unknown section [" + name + "]",
                                 line_no, name);
            }
            section = name;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'", line_no,
                             std::string(line));
        }
        const std::string key = canonical_key(line.substr(0, eq), section, line_no);
        const std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": key '" + key + "' has no value",
                             line_no, key);
        }
        if (entries.contains(key)) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'",
                             line_no, key);
        }
        entries[key] = Entry{std::string(value), line_no};
    }

    for (const auto& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos) {
            throw ParseError("override '" + ov + "' is not of the form key=value", 0, ov);
        }
        const std::string key = canonical_key(std::string_view(ov).substr(0, eq), "", 0);
        entries[key] = Entry{std::string(trim(std::string_view(ov).substr(eq + 1))), 0};
    }

    RunConfig cfg;
    if (const auto it = entries.find("scenario"); it != entries.end()) {
        const auto s = scenario_from_string(trim(it->second.value));
        if (!s) bad_value("scenario", it->second, "one of fig1, fig1-{positive,zero,negative}, fig2, "
                                                  "fig2-{positive,zero,negative}, fig3");
        apply_scenario(cfg, *s);
    }
    for (const auto& [key, entry] : entries) {
        if (key == "scenario") continue;
        apply_key(cfg, key, entry);
        cfg.explicit_keys.insert(key_sections().at(key) + "." + key);
    }
    if (cfg.geometry.phase_mode == "explicit" && !cfg.explicit_keys.contains("geometry.n_orbits")) {
        cfg.geometry.n_orbits = cfg.geometry.phases.size();
    }
    validate(cfg);
    return cfg;
}

}  // namespace cyclovortex
