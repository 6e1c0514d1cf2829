#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "topcoh/verify.hpp"

namespace topcoh {

// A finished run: the JSON document to print and the process exit code.
// Errors are reported in-band as {"error": {kind, message[, position]}} with
// the matching nonzero exit code, never as exceptions.
struct RunResult {
    nlohmann::ordered_json document;
    int exit_code = 0;
};

// 2 for caller mistakes (parse-error, invalid-argument, unsupported,
// ring-mismatch), 3 for hypothesis-not-met, 4 for theorem-violation and
// anything unexpected.
int exit_code_for(const std::string& kind);

// Runs one job. `command` comes from the command line; the job may repeat it
// in a "command" field, which must then agree. `seed_override` replaces the
// verify suite seed.
RunResult run_job(const nlohmann::json& job, const std::string& command,
                  std::optional<std::uint64_t> seed_override);

// Same, from raw JSON text; malformed JSON becomes a parse-error result.
RunResult run_job_text(const std::string& text, const std::string& command,
                       std::optional<std::uint64_t> seed_override);

} // namespace topcoh
