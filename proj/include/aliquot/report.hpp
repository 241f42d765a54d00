#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aliquot/digit_set.hpp"
#include "aliquot/goldbach.hpp"
#include "aliquot/key_lemma.hpp"
#include "aliquot/preimage.hpp"
#include "aliquot/statistics.hpp"

namespace aliquot {

inline constexpr const char* kToolVersion = "0.1.0";

struct Provenance {
  std::string tool_version = kToolVersion;
  std::string timestamp;  // UTC, ISO-8601
  double wall_seconds = 0.0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Name + parameter block + result block. Blocks are flat JSON objects whose
// values are numbers, strings, booleans or arrays of those.
struct ExperimentReport {
  std::string experiment;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::optional<Provenance> provenance;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

enum class Format { json, csv };

Format parse_format(std::string_view name);

// One JSON object per report, sorted keys, newline-terminated.
std::string to_json_line(const ExperimentReport& report);
ExperimentReport parse_json_report(std::string_view text);

// Header row of sorted column names ("experiment", "parameters.<key>",
// "provenance.<key>", "results.<key>") followed by one row per report.
// Strings are written verbatim, everything else as JSON text; quoting per RFC 4180.
std::string to_csv(std::span<const ExperimentReport> reports);
std::vector<ExperimentReport> parse_csv(std::string_view text);

std::string emit_report(const ExperimentReport& report, Format format);
std::string emit_reports(std::span<const ExperimentReport> reports, Format format);

ExperimentReport to_report(const PreimageReport& r);
ExperimentReport to_report(const SplitReport& r);
ExperimentReport to_report(const KeyLemmaParams& r);
ExperimentReport to_report(const AbDecomposition& r);
ExperimentReport to_report(const OmegaStats& r);
ExperimentReport to_report(const ResidueCounts& r);
ExperimentReport to_report(const GoldbachReport& r);
ExperimentReport to_report(const EmsDeviation& r, const DigitSet& ds);

}  // namespace aliquot
