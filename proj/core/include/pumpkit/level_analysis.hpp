#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pumpkit/runner.hpp"

namespace pumpkit {

/// An N-level (i, j, k): the stack climbs N symbols from i to j and comes
/// back down by k, never leaving [s_i, s_j] in between.
struct LevelTriple {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    std::size_t n = 0;

    bool operator==(const LevelTriple&) const = default;
};

struct LevelResult {
    std::size_t level = 0;
    std::optional<LevelTriple> witness;

    bool operator==(const LevelResult&) const = default;
};

using Profile = std::span<const std::size_t>;

/// Checks every LevelTriple invariant literally.
bool is_level_triple(Profile profile, const LevelTriple& triple);

/// Largest N with an N-level whose k ≤ windowEnd. The witness is the first
/// one in (i, j, k) lexicographic order. O(|profile|²) worst case.
LevelResult max_level(Profile profile, std::size_t windowEnd);

/// Enumerates all (i, j, k) triples and tests the definition directly.
LevelResult brute_force_max_level(Profile profile, std::size_t windowEnd);

class LevelError : public Error {
public:
    using Error::Error;
};

/// lp(h) = max{y ≤ j : s_y = h}. Throws LevelError unless s_i ≤ h ≤ s_j.
std::size_t last_push(Profile profile, const LevelTriple& triple, std::size_t h);
/// fp(h) = min{y ≥ j : s_y = h}. Throws LevelError unless s_i ≤ h ≤ s_j.
std::size_t first_pop(Profile profile, const LevelTriple& triple, std::size_t h);

/// The `target`-level nested in `triple` that shares its peak j.
LevelTriple extract_sublevel(Profile profile, const LevelTriple& triple, std::size_t target);

/// A state plus the top `depth` stack symbols, top-first, padded with blanks.
struct Configuration {
    StateId state;
    std::vector<SymbolId> topStack;

    auto operator<=>(const Configuration&) const = default;
};

/// (state at lp(h), top symbol at lp(h), state at fp(h)).
struct FullState {
    StateId pushState;
    SymbolId topSymbol;
    StateId popState;

    auto operator<=>(const FullState&) const = default;
};

/// Stack contents at every position of a path, shared through parent links.
class PathTrace {
public:
    explicit PathTrace(const RunPath& path);

    std::size_t positions() const noexcept { return states_.size(); }
    StateId state_at(std::size_t pos) const { return states_.at(pos); }
    std::size_t height_at(std::size_t pos) const;
    /// Blank when the stack is empty.
    SymbolId top_at(std::size_t pos) const;
    Configuration configuration_at(std::size_t pos, std::size_t depth) const;

private:
    struct Node {
        SymbolId symbol;
        std::size_t below;
        std::size_t height;
    };
    static constexpr std::size_t kEmpty = 0;

    std::vector<Node> nodes_;
    std::vector<std::size_t> stackAt_;
    std::vector<StateId> states_;
};

Configuration configuration_at(const RunPath& path, std::size_t pos, std::size_t depth);

/// Throws LevelError for h outside [max(1, s_i), s_j], or when the top
/// symbols at lp(h) and fp(h) differ.
FullState full_state(const RunPath& path, const LevelTriple& triple, std::size_t h);
FullState full_state(const PathTrace& trace, Profile profile, const LevelTriple& triple, std::size_t h);

} // namespace pumpkit
