#pragma once

#include "p1146/linsys.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace p1146 {

enum class Status { pass, fail, skip };

std::string_view to_string(Status s);

/// One verified statement. A PASS record always has computed == expected.
struct CheckRecord {
    std::string check_id;
    std::string description;
    /// Short formula anchor for the statement being checked, or "plumbing".
    std::string paper_ref;
    Status status = Status::skip;
    std::string computed;
    std::string expected;
    std::chrono::duration<double> elapsed{0};
};

enum class Suite { wps, scroll, system_s, system_t, theorem };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);
const std::vector<Suite>& all_suites();

struct VerifyConfig {
    /// Pencil cubic in the polynomial grammar; the standard cubic when unset.
    std::optional<std::string> xi;
    /// Suites to run, in this order; every suite when empty.
    std::vector<Suite> suites;
    std::uint64_t seed = 72;
};

/// Resolves the configured cubic; throws ConfigError on invalid input.
PencilCubic resolve_cubic(const VerifyConfig& config);

std::vector<CheckRecord> run_suite(Suite suite, const PencilCubic& xi, std::uint64_t seed);

/// Runs the configured suites in declaration order. Invalid configuration throws
/// ConfigError before any check executes.
std::vector<CheckRecord> run_all(const VerifyConfig& config);

nlohmann::json to_json(const CheckRecord& record);
/// One JSON object per line.
std::string to_json_lines(const std::vector<CheckRecord>& records);
std::string format_table(const std::vector<CheckRecord>& records, bool with_anchor = false);

/// 0 when nothing failed, 1 otherwise.
int exit_code(const std::vector<CheckRecord>& records);

} // namespace p1146
