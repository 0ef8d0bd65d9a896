#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pumpkit/error.hpp"
#include "pumpkit/utf8.hpp"

namespace pumpkit {

/// Reserved bottom-of-stack marker. Must be the deepest initial stack symbol.
inline constexpr std::string_view kBottomMarker = "⊥"; // ⊥
/// Reserved padding symbol for truncated configurations; never part of Γ.
inline constexpr std::string_view kBlankSymbol = "␣"; // ␣

// ---------------------------------------------------------------------------
// General (unrestricted push) automata, as written by users.
// ---------------------------------------------------------------------------

/// Pops exactly the top symbol and pushes `push` (deepest-first, any length).
struct GeneralTransition {
    std::string from;
    std::optional<char32_t> input; ///< nullopt is ε
    std::string pop;
    std::vector<std::string> push;
    std::string to;

    bool operator==(const GeneralTransition&) const = default;
};

struct GeneralPda {
    std::vector<std::string> states;
    std::vector<char32_t> input_alphabet;
    std::vector<std::string> stack_alphabet;
    std::string initial_state;
    std::vector<std::string> initial_stack; ///< deepest-first
    std::vector<std::string> accept_states;
    std::vector<GeneralTransition> transitions;

    bool operator==(const GeneralPda&) const = default;
};

enum class PdaForm { General, Star };

struct Violation {
    enum class Kind {
        UndeclaredState,
        UndeclaredInputSymbol,
        UndeclaredStackSymbol,
        DuplicateDeclaration,
        EmptyName,
        EmptyInitialStack,
        MissingBottomMarker,
        BlankInStackAlphabet,
        StarFormViolation,
    };
    Kind kind;
    std::string message;
    std::optional<std::size_t> transition; ///< offending transition index, if any

    bool operator==(const Violation&) const = default;
};

std::string_view to_string(Violation::Kind kind);

/// Structural problems of an automaton. Warnings are lint only.
struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
    std::size_t count(Violation::Kind kind) const;
    bool operator==(const ValidationReport&) const = default;
};

/// Lists every violated structural invariant. With PdaForm::Star, also
/// reports each transition that is not in (*) form.
ValidationReport validate(const GeneralPda& pda, PdaForm form = PdaForm::General);

/// True iff every transition pushes nothing, or pushes [popped, extra].
bool is_star_form(const GeneralPda& pda);

class InvalidPda : public Error {
public:
    explicit InvalidPda(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

// ---------------------------------------------------------------------------
// (*)-form automata, compiled to dense ids.
// ---------------------------------------------------------------------------

struct StateId {
    std::uint32_t value = 0;
    auto operator<=>(const StateId&) const = default;
};

struct SymbolId {
    std::uint32_t value = 0;
    auto operator<=>(const SymbolId&) const = default;

    /// The padding symbol; distinct from every id of Γ.
    static constexpr SymbolId blank() { return SymbolId{0xFFFFFFFFU}; }
    constexpr bool is_blank() const { return value == 0xFFFFFFFFU; }
};

/// A (*)-form transition: pops `pop`, then pushes nothing (net -1) or
/// pushes [pop, *extra] (net +1).
struct NormalizedTransition {
    std::size_t index = 0; ///< position in NormalizedPda::transitions()
    StateId from;
    std::optional<char32_t> input; ///< nullopt is ε
    SymbolId pop;
    std::optional<SymbolId> extra; ///< PushOne(extra) when set, PopOnly otherwise
    StateId to;

    bool is_push() const { return extra.has_value(); }
    int stack_delta() const { return extra ? 1 : -1; }
    bool operator==(const NormalizedTransition&) const = default;
};

class NormalizedPda {
public:
    /// Compiles a well-formed (*)-form automaton. Throws InvalidPda otherwise.
    static NormalizedPda from_star_form(GeneralPda pda);

    /// The string-level description this machine was compiled from.
    const GeneralPda& description() const noexcept { return description_; }

    std::size_t state_count() const noexcept { return description_.states.size(); }
    std::size_t stack_alphabet_size() const noexcept { return description_.stack_alphabet.size(); }

    const std::string& state_name(StateId id) const { return description_.states.at(id.value); }
    /// Name of a stack symbol; the blank maps to kBlankSymbol.
    std::string symbol_name(SymbolId id) const;

    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<SymbolId> find_symbol(std::string_view name) const;
    bool has_input_symbol(char32_t symbol) const;

    StateId initial_state() const noexcept { return initial_state_; }
    const std::vector<SymbolId>& initial_stack() const noexcept { return initial_stack_; }
    bool is_accepting(StateId id) const { return accepting_.at(id.value); }

    const std::vector<NormalizedTransition>& transitions() const noexcept { return transitions_; }
    /// Indices of transitions leaving `state` with `top` on the stack, in declared order.
    std::span<const std::size_t> transitions_from(StateId state, SymbolId top) const;

    /// Human-readable rendering, e.g. "q0 --'('/⊥→⊥X--> q0".
    std::string describe(const NormalizedTransition& t) const;

private:
    NormalizedPda() = default;

    GeneralPda description_;
    std::unordered_map<std::string, std::uint32_t> state_index_;
    std::unordered_map<std::string, std::uint32_t> symbol_index_;
    std::vector<char32_t> sorted_inputs_;
    StateId initial_state_;
    std::vector<SymbolId> initial_stack_;
    std::vector<bool> accepting_;
    std::vector<NormalizedTransition> transitions_;
    std::vector<std::vector<std::size_t>> by_state_top_; ///< state * |Γ| + top
};

/// Overload for compiled machines; equivalent to validating the description
/// in PdaForm::Star.
ValidationReport validate(const NormalizedPda& pda);

// ---------------------------------------------------------------------------
// Instantaneous descriptions and single steps.
// ---------------------------------------------------------------------------

struct InstantaneousDescription {
    StateId state;
    std::size_t pos = 0;         ///< letters consumed
    std::vector<SymbolId> stack; ///< deepest-first; top is back()

    bool operator==(const InstantaneousDescription&) const = default;
};

InstantaneousDescription initial_description(const NormalizedPda& pda);

class InapplicableTransition : public Error {
public:
    using Error::Error;
};

/// Applies one transition. Throws InapplicableTransition when the source
/// state, the stack top or the next input letter does not match.
InstantaneousDescription step(const NormalizedPda& pda, const InstantaneousDescription& id,
                              const NormalizedTransition& t, WordView word);

/// Why `t` cannot fire from `id`, or nullopt when it can.
std::optional<std::string> inapplicability(const InstantaneousDescription& id,
                                           const NormalizedTransition& t, WordView word);

} // namespace pumpkit
