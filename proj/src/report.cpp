#include "qwz/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace qwz {

namespace {

// Text mode keeps witness lines readable; JSON always carries the full
// payload.
constexpr size_t kTextWitnessCap = 320;

std::string text_witness(const std::string& w) {
    if (w.size() <= kTextWitnessCap)
        return w;
    return w.substr(0, kTextWitnessCap) + "... (+" +
           std::to_string(w.size() - kTextWitnessCap) + " chars)";
}

} // namespace

const std::string& tool_version() {
    static const std::string v = "0.1.0";
    return v;
}

std::string current_utc_timestamp() {
    using std::chrono::system_clock;
    std::time_t now = system_clock::to_time_t(system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

std::string emit(const Report& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["version"] = report.version;
        j["timestamp"] = report.timestamp;
        nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
        for (const auto& [key, value] : report.config)
            cfg[key] = value;
        j["config"] = cfg;
        j["checks"] = nlohmann::ordered_json::array();
        for (const CheckRecord& c : report.checks)
            j["checks"].push_back({{"name", c.name},
                                   {"params", c.params},
                                   {"status", c.status},
                                   {"witness", c.witness},
                                   {"elapsed_ms", c.elapsed_ms}});
        return j.dump(1) + "\n";
    }

    std::ostringstream out;
    out << "qwz " << report.version << " (" << report.timestamp << ")\n";
    out << "config:\n";
    for (const auto& [key, value] : report.config)
        out << "  " << key << " = " << value << "\n";
    size_t name_w = 4, params_w = 6;
    for (const CheckRecord& c : report.checks) {
        name_w = std::max(name_w, c.name.size());
        params_w = std::max(params_w, c.params.size());
    }
    out << "checks:\n";
    long pass = 0, fail = 0, error = 0;
    for (const CheckRecord& c : report.checks) {
        (c.status == "pass" ? pass : c.status == "fail" ? fail : error) += 1;
        out << "  " << std::left << std::setw(6) << c.status
            << std::setw(static_cast<int>(name_w) + 2) << c.name
            << std::setw(static_cast<int>(params_w) + 2) << c.params
            << text_witness(c.witness) << "  [" << std::fixed
            << std::setprecision(2) << c.elapsed_ms << " ms]\n";
    }
    out << "summary: " << report.checks.size() << " checks, " << pass
        << " pass, " << fail << " fail, " << error << " error\n";
    return out.str();
}

int exit_code(const Report& report) {
    bool any_fail = false;
    for (const CheckRecord& c : report.checks) {
        if (c.status == "error")
            return 2;
        any_fail = any_fail || c.status == "fail";
    }
    return any_fail ? 1 : 0;
}

} // namespace qwz
