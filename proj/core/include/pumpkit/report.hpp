#pragma once

#include <string>
#include <string_view>

#include "pumpkit/pump_extractor.hpp"
#include "pumpkit/verifier.hpp"

namespace pumpkit {

inline constexpr std::string_view kReportFormatVersion = "pumpkit-report/1";

/// Everything `pumpkit pump` prints: the cut, how it was found, and both
/// verification routes.
struct PumpReport {
    Word word;
    ExtractionMode mode = ExtractionMode::BestEffort;
    Decomposition decomposition;
    Diagnostics diagnostics;
    VerificationReport verification;

    bool operator==(const PumpReport&) const = default;
};

/// Deterministic JSON with a trailing newline.
std::string report_to_json(const PumpReport& report);
/// Inverse of report_to_json. Throws ParseError.
PumpReport report_from_json(std::string_view json);

std::string report_to_text(const PumpReport& report);

/// JSON body describing a failed extraction (kind, message, diagnostics).
std::string failure_to_json(const ExtractionError& error);

} // namespace pumpkit
