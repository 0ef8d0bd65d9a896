#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "pumpkit/pda.hpp"

namespace pumpkit {

/// A concrete accepting computation π with its stack-size profile s_0..s_|π|
/// and the letters-read index ŵ(0)..ŵ(|π|).
struct RunPath {
    Word word;
    StateId initialState;
    std::vector<SymbolId> initialStack;
    std::vector<NormalizedTransition> steps;
    std::vector<std::size_t> profile;
    std::vector<std::size_t> lettersRead;

    std::size_t length() const noexcept { return steps.size(); }
    /// Number of path positions, |π| + 1.
    std::size_t positions() const noexcept { return steps.size() + 1; }
    StateId state_at(std::size_t pos) const;
    std::vector<std::size_t> step_indices() const;

    bool operator==(const RunPath&) const = default;
};

struct SearchLimits {
    std::size_t maxSteps = 1'000'000;
    std::size_t maxStackHeight = 1'000'000;

    /// max(10·(|w|+1), 4·p when p fits) capped at 10⁶; height bound = step bound.
    static SearchLimits defaults(std::size_t wordLength, std::optional<std::uint64_t> p = std::nullopt);
};

enum class LimitKind { Steps, StackHeight, Both };
std::string_view to_string(LimitKind kind);

struct NotAccepted {
    bool operator==(const NotAccepted&) const = default;
};
struct LimitExceeded {
    LimitKind which = LimitKind::Steps;
    bool operator==(const LimitExceeded&) const = default;
};

using SearchOutcome = std::variant<RunPath, NotAccepted, LimitExceeded>;

/// Breadth-first search over instantaneous descriptions; returns a path with
/// the fewest steps. Ties go to the transition declared first. NotAccepted
/// is returned only when no description was cut off by the limits.
SearchOutcome minimal_accepting_path(const NormalizedPda& pda, WordView word, const SearchLimits& limits);

enum class Verdict { Accepted, NotAccepted, LimitExceeded };
std::string_view to_string(Verdict v);

/// Membership only. Separate code path from minimal_accepting_path so it can
/// serve as an oracle.
Verdict accepts(const NormalizedPda& pda, WordView word, const SearchLimits& limits);

struct ReplayError {
    enum class Reason { Inapplicable, InputMismatch, NotAccepting, InputRemaining };
    std::size_t index = 0; ///< failing step; |steps| for end-of-run failures
    Reason reason = Reason::Inapplicable;

    bool operator==(const ReplayError&) const = default;
};
std::string_view to_string(ReplayError::Reason r);

using ReplayOutcome = std::variant<RunPath, ReplayError>;

/// Runs transition indices from the initial description with an explicit
/// stack. Succeeds iff every step fires and the run ends accepting with the
/// whole word consumed.
ReplayOutcome replay(const NormalizedPda& pda, std::span<const std::size_t> steps, WordView word);

} // namespace pumpkit
