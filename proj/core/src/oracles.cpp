#include "cyclovortex/oracles.hpp"

#include <cmath>
#include <cstdlib>

#include "cyclovortex/errors.hpp"
#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

namespace cyclovortex {

double energy_from_kinetic_Lz(double kinetic_lz, const PhysicalParams& params) {
    return 0.5 * params.omega_c() * kinetic_lz;
}

double landau_energy(const LandauIndex& idx, const PhysicalParams& params) {
    if (idx.n < 0) throw ValidationError("Landau radial index n must be nonnegative");
    const double level = idx.n + 0.5 * (std::abs(idx.l) + idx.l) + 0.5;
    return level * params.hbar() * params.omega_c();
}

double landau_kinetic_Lz(const LandauIndex& idx, const PhysicalParams& params) {
    const double w = params.omega_c();
    if (w == 0.0) throw ZeroFieldError();
    return 2.0 * landau_energy(idx, params) / w;
}

double correspondence_radius(const LandauIndex& idx, const PhysicalParams& params) {
    if (idx.n < 0) throw ValidationError("Landau radial index n must be nonnegative");
    if (idx.l < 0) throw ValidationError("classical correspondence needs l >= 0");
    const double w = params.omega_c();
    if (w == 0.0) throw ZeroFieldError();
    if (w < 0.0) throw ValidationError("classical correspondence needs omega_c > 0");
    return std::sqrt((2.0 * idx.n + 2.0 * idx.l + 1.0) * params.hbar() / (params.mass() * w));
}

double correspondence_residual(const LandauIndex& idx, const PhysicalParams& params) {
    const CyclotronOrbit centered{.x0 = 0.0, .y0 = 0.0, .radius = correspondence_radius(idx, params),
                                  .theta = 0.0};
    const double classical = energy_2d(orbit_state(centered, params, 0.0), params);
    return std::abs(classical - landau_energy(idx, params));
}

bool VerifyReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

const CheckResult* VerifyReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

using nlohmann::ordered_json;

ordered_json number_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

double number_from(const ordered_json& j) {
    if (j.is_null()) return std::nan("");
    return j.get<double>();
}

bool same_number(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

}  // namespace

std::string report_to_json(const VerifyReport& report) {
    ordered_json doc;
    doc["passed"] = report.passed();
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json item;
        item["name"] = c.name;
        item["passed"] = c.passed;
        item["residual"] = number_or_null(c.residual);
        item["tolerance"] = number_or_null(c.tolerance);
        if (c.error) item["error"] = *c.error;
        checks.push_back(std::move(item));
    }
    doc["checks"] = std::move(checks);
    ordered_json meta = ordered_json::object();
    for (const auto& [k, v] : report.metadata) meta[k] = v;
    doc["metadata"] = std::move(meta);
    return doc.dump(2) + "\n";
}

VerifyReport report_from_json(const std::string& text) {
    try {
        const auto doc = ordered_json::parse(text);
        VerifyReport report;
        for (const auto& item : doc.at("checks")) {
            CheckResult c;
            c.name = item.at("name").get<std::string>();
            c.passed = item.at("passed").get<bool>();
            c.residual = number_from(item.at("residual"));
            c.tolerance = number_from(item.at("tolerance"));
            if (item.contains("error")) c.error = item.at("error").get<std::string>();
            report.checks.push_back(std::move(c));
        }
        if (doc.contains("metadata")) {
            for (const auto& [k, v] : doc.at("metadata").items()) {
                report.metadata[k] = v.get<std::string>();
            }
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed verify report: ") + e.what(), 0, "");
    }
}

bool operator==(const CheckResult& a, const CheckResult& b) {
    return a.name == b.name && a.passed == b.passed && same_number(a.residual, b.residual) &&
           same_number(a.tolerance, b.tolerance) && a.error == b.error;
}

bool operator==(const VerifyReport& a, const VerifyReport& b) {
    return a.checks == b.checks && a.metadata == b.metadata;
}

}  // namespace cyclovortex
