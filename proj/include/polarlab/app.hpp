#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarlab/io.hpp"
#include "polarlab/types.hpp"

namespace polarlab {

inline constexpr const char* kToolVersion = "0.3.0";

enum class Mode { Validate, AnalyzeMueller, AnalyzeChannel, Synth, Sweep };
enum class Format { Auto, Report, Table };

struct AnalysisRequest {
    Mode mode = Mode::AnalyzeMueller;
    std::string input_path;            // empty only for seeded synth
    std::vector<std::string> probes;   // raw --probe values
    std::optional<io::GridSpec> grid;
    Format format = Format::Auto;
    std::optional<std::uint64_t> seed; // synth without an input file
    int rank = 4;
    Tolerances tol;
};

struct RunResult {
    nlohmann::ordered_json report;  // sections in fixed order
    std::string table;              // CSV rendering when requested
    int exit_status = 0;
    bool as_table = false;

    /// Rendered output: the table for table format, otherwise the report.
    std::string render() const;
};

/// Runs one request; never throws for input-dependent failures. The
/// report's "error" object carries the code and exit status.
RunResult run_request(const AnalysisRequest& req);

Mode parse_mode(const std::string& name);

}  // namespace polarlab
