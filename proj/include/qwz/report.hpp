#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qwz {

// One executed check, as reported.  status is "pass", "fail" or "error";
// witness is free text (JSON reports carry it untruncated, text reports may
// truncate polynomial payloads).
struct CheckRecord {
    std::string name;
    std::string params;
    std::string status;
    std::string witness;
    double elapsed_ms = 0.0;
};

struct Report {
    std::string version;
    std::string timestamp; // ISO-8601 UTC
    std::vector<std::pair<std::string, std::string>> config; // ordered
    std::vector<CheckRecord> checks;
};

enum class ReportFormat { text, json };

const std::string& tool_version();
std::string current_utc_timestamp(); // ISO-8601, second resolution

// Serialized report: JSON carries {"schema":1, version, timestamp, config,
// checks}; the layout depends only on version + config + check payloads, so
// reruns are byte-identical apart from timestamp and elapsed_ms.
std::string emit(const Report& report, ReportFormat format);

// 0 all pass, 1 any fail (and no error), 2 any error.
int exit_code(const Report& report);

// Full command-line front end, usable in-process: parses args (without the
// leading program name), runs the selected checks, writes the report to
// `out` or to the --out path.  Returns the process exit code (64 on usage
// errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out);

} // namespace qwz
