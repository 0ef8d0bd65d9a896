#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pumpkit/decomposition.hpp"
#include "pumpkit/runner.hpp"

namespace pumpkit {

/// What extract saw on the way to its answer.
struct Diagnostics {
    ExtractionMode mode = ExtractionMode::BestEffort;
    std::size_t wordLength = 0;
    std::size_t pathLength = 0;
    std::vector<std::size_t> profile;
    std::size_t windowEnd = 0;     ///< k ≤ windowEnd when computing the level
    LevelResult level;             ///< level l over the window
    LevelResult wholePathLevel;    ///< level over the whole path, for comparison
    std::size_t case2Threshold = 0; ///< p' in strict mode; may be lowered in best-effort
    std::optional<LevelTriple> case2Triple; ///< triple whose heights were scanned
    std::size_t configurationDepth = 0;
    std::size_t case1Repeats = 0; ///< repeated configuration pairs in the window
    std::size_t case2Repeats = 0; ///< repeated full-state pairs in the triple
    std::optional<CaseTag> chosenCase;
    std::vector<std::string> notes; ///< rejected candidates and fallbacks, in order

    bool operator==(const Diagnostics&) const = default;
};

struct Extraction {
    Decomposition decomposition;
    Diagnostics diagnostics;
    RunPath path;
};

class ExtractionError : public Error {
public:
    enum class Kind {
        NotAccepted,
        StrictPreconditionViolated,
        NoWitnessFound,
        LimitExceeded,
        NoRepeatFound,
        MinimalityViolation,
    };

    ExtractionError(Kind kind, const std::string& message, Diagnostics diagnostics = {});
    Kind kind() const noexcept { return kind_; }
    const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

private:
    Kind kind_;
    Diagnostics diagnostics_;
};

std::string_view to_string(ExtractionError::Kind kind);

/// Finds a minimal accepting path, measures its level and cuts w = uvxyz
/// by repeated configurations (l < p') or repeated full states (l ≥ p').
/// Every returned decomposition already replays for n = 0 and n = 2.
Extraction extract(const NormalizedPda& pda, WordView word, ExtractionMode mode,
                   std::optional<SearchLimits> limits = std::nullopt);

/// First pair i < j among positions 0..min(p, |π|) with equal configurations
/// of depth max(l, 1); y = z = ε.
Decomposition case1_decompose(const RunPath& path, const PumpingParams& params, std::size_t level);

/// First pair of heights g < h (g ascending, then h) in `triple` with equal
/// full states.
Decomposition case2_decompose(const RunPath& path, const PumpingParams& params, const LevelTriple& triple);

} // namespace pumpkit
