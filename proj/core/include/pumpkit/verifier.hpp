#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pumpkit/decomposition.hpp"
#include "pumpkit/runner.hpp"

namespace pumpkit {

inline constexpr std::size_t kDefaultPumpCounts[] = {0, 1, 2, 3, 4};

/// u · vⁿ · x · yⁿ · z
Word pumped_word(const Decomposition& d, std::size_t n);

struct SearchCheck {
    std::size_t n = 0;
    Verdict verdict = Verdict::NotAccepted;

    bool operator==(const SearchCheck&) const = default;
};

/// Membership of each pumped word via runner::accepts. When `limits` is
/// empty, SearchLimits::defaults is used per word.
std::vector<SearchCheck> verify_by_search(const NormalizedPda& pda, const Decomposition& d,
                                          std::span<const std::size_t> counts,
                                          std::optional<SearchLimits> limits = std::nullopt);

/// The transition sequence of `path` with the pumped segments repeated n
/// times (Case 1: π[i,j); Case 2: π[lp(g),lp(h)) and π[fp(h),fp(g))).
std::vector<std::size_t> pumped_steps(const RunPath& path, const Decomposition& d, std::size_t n);

struct ReplayCheck {
    std::size_t n = 0;
    bool accepted = false;
    std::optional<ReplayError> error;
    std::size_t pathLength = 0;

    bool operator==(const ReplayCheck&) const = default;
};

/// Replays pumped_steps against pumped_word.
ReplayCheck verify_by_replay(const NormalizedPda& pda, const RunPath& path, const Decomposition& d, std::size_t n);

struct ConstraintReport {
    bool concatenationOk = false;
    bool lengthBoundOk = false; ///< |vxy| ≤ p
    bool nonTrivialOk = false;  ///< |vy| ≥ 1
    std::size_t vxyLength = 0;  ///< the bound actually achieved
    std::uint64_t bound = 0;    ///< p

    bool operator==(const ConstraintReport&) const = default;
};

ConstraintReport check_constraints(const Decomposition& d, const PumpingParams& params, WordView w);

struct PumpCheck {
    std::size_t n = 0;
    Verdict replay = Verdict::NotAccepted;
    Verdict search = Verdict::NotAccepted;
    std::optional<ReplayError> replayError;

    bool operator==(const PumpCheck&) const = default;
};

struct VerificationReport {
    ConstraintReport constraints;
    std::vector<PumpCheck> perN; ///< sorted by n
    bool verdictsAgree = false;  ///< replay == search wherever search stayed within limits
    bool overall = false;

    bool operator==(const VerificationReport&) const = default;
};

/// Runs check_constraints and both membership routes for every n. Search
/// verdicts for distinct n run concurrently.
VerificationReport verify(const NormalizedPda& pda, const RunPath& path, const Decomposition& d,
                          std::span<const std::size_t> counts = kDefaultPumpCounts,
                          std::optional<SearchLimits> limits = std::nullopt);

} // namespace pumpkit
