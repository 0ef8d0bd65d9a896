#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pumpkit/pda.hpp"

namespace pumpkit {

/// A canonical language with its automaton and deterministic word generators.
struct CorpusEntry {
    std::string name;
    std::string description;
    GeneralPda pda;
    std::string notes; ///< expected parameters after normalization
};

/// DYCK1, REG_AB, ANBN, GEN_PAL, and ANBN_GEN (a general-form a^n b^n).
std::vector<std::string> builtin_names();

/// Throws Error for unknown names.
CorpusEntry builtin(std::string_view name);

/// A word of the language. `size` is the generator's size parameter (pairs,
/// blocks or half-length); variant 0 is the canonical word, other variants
/// are seeded pseudo-random members where the language has several words of
/// that size. Throws Error for sizes outside the generator's domain.
Word generate(std::string_view name, std::size_t size, std::uint64_t variant = 0);

/// A word just outside the language. Throws Error for unsupported sizes.
Word generate_near_miss(std::string_view name, std::size_t size);

} // namespace pumpkit
