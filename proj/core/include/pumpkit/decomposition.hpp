#pragma once

#include <string_view>
#include <variant>

#include "pumpkit/level_analysis.hpp"
#include "pumpkit/normalizer.hpp"

namespace pumpkit {

enum class CaseTag { Case1, Case2 };
enum class ExtractionMode { Strict, BestEffort };

std::string_view to_string(CaseTag tag);
std::string_view to_string(ExtractionMode mode);

/// Two path positions i < j with equal depth-`depth` configurations.
struct Case1Witness {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t depth = 0;

    bool operator==(const Case1Witness&) const = default;
};

/// Heights g < h inside `triple` with equal full states, and the four path
/// positions lp(g) ≤ lp(h) ≤ fp(h) ≤ fp(g).
struct Case2Witness {
    LevelTriple triple;
    std::size_t g = 0;
    std::size_t h = 0;
    std::size_t lpG = 0;
    std::size_t lpH = 0;
    std::size_t fpH = 0;
    std::size_t fpG = 0;

    bool operator==(const Case2Witness&) const = default;
};

/// w = u·v·x·y·z together with the path positions it was cut at.
struct Decomposition {
    Word u, v, x, y, z;
    std::variant<Case1Witness, Case2Witness> witness;
    PumpingParams params;

    CaseTag case_tag() const { return witness.index() == 0 ? CaseTag::Case1 : CaseTag::Case2; }
    Word word() const { return u + v + x + y + z; }
    bool operator==(const Decomposition&) const = default;
};

} // namespace pumpkit
