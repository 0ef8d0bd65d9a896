#pragma once

#include <cstdint>
#include <optional>

#include "pumpkit/pda.hpp"

namespace pumpkit {

/// p' = |A|²·|Γ| and p = |A|·(|Γ|+1)^p', over the normalized machine.
struct PumpingParams {
    std::uint64_t pPrime = 1;
    std::uint64_t p = 1;
    std::uint64_t stateCount = 1;
    std::uint64_t stackAlphabetSize = 1;
    /// Set only by saturating_pumping_params when p does not fit; p is then UINT64_MAX.
    bool pSaturated = false;

    bool operator==(const PumpingParams&) const = default;
};

class ParamsOverflow : public Error {
public:
    ParamsOverflow(std::uint64_t pPrime, std::uint64_t base);
    std::uint64_t pPrime() const noexcept { return pPrime_; }
    /// The would-be exponent of (|Γ|+1); equal to p'.
    std::uint64_t exponent() const noexcept { return pPrime_; }
    std::uint64_t base() const noexcept { return base_; }

private:
    std::uint64_t pPrime_;
    std::uint64_t base_;
};

/// Rewrites every transition into (*) form. Language-preserving, and
/// deterministic: fresh states are named after the source transition index
/// and the number of symbols still to push.
NormalizedPda normalize(const GeneralPda& pda);

/// Throws ParamsOverflow when p exceeds 64 bits.
PumpingParams pumping_params(const NormalizedPda& pda);
PumpingParams pumping_params(std::uint64_t stateCount, std::uint64_t stackAlphabetSize);

/// Like pumping_params, but clamps p to UINT64_MAX instead of throwing.
PumpingParams saturating_pumping_params(const NormalizedPda& pda);

} // namespace pumpkit
