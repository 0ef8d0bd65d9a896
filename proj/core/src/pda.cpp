#include "pumpkit/pda.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pumpkit {

std::string_view to_string(Violation::Kind kind)
{
    switch (kind) {
    case Violation::Kind::UndeclaredState: return "undeclared-state";
    case Violation::Kind::UndeclaredInputSymbol: return "undeclared-input-symbol";
    case Violation::Kind::UndeclaredStackSymbol: return "undeclared-stack-symbol";
    case Violation::Kind::DuplicateDeclaration: return "duplicate-declaration";
    case Violation::Kind::EmptyName: return "empty-name";
    case Violation::Kind::EmptyInitialStack: return "empty-initial-stack";
    case Violation::Kind::MissingBottomMarker: return "missing-bottom-marker";
    case Violation::Kind::BlankInStackAlphabet: return "blank-in-stack-alphabet";
    case Violation::Kind::StarFormViolation: return "star-form-violation";
    }
    return "unknown";
}

std::size_t ValidationReport::count(Violation::Kind kind) const
{
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [kind](const Violation& v) { return v.kind == kind; }));
}

InvalidPda::InvalidPda(ValidationReport report)
    : Error([&] {
          std::string msg = "invalid pushdown automaton";
          for (const auto& v : report.violations)
              msg += "\n  " + std::string(to_string(v.kind)) + ": " + v.message;
          return msg;
      }()),
      report_(std::move(report))
{
}

namespace {

bool transition_is_star(const GeneralTransition& t)
{
    return t.push.empty() || (t.push.size() == 2 && t.push.front() == t.pop);
}

std::string transition_label(std::size_t index) { return "transition #" + std::to_string(index); }

template <typename T>
std::set<T> declare(const std::vector<T>& items, std::string_view what, ValidationReport& report)
{
    std::set<T> seen;
    for (const auto& item : items) {
        if (!seen.insert(item).second) {
            std::string shown;
            if constexpr (std::is_same_v<T, char32_t>)
                shown = encode_utf8(item);
            else
                shown = item;
            report.violations.push_back({Violation::Kind::DuplicateDeclaration,
                                         std::string(what) + " '" + shown + "' declared twice", std::nullopt});
        }
    }
    return seen;
}

} // namespace

ValidationReport validate(const GeneralPda& pda, PdaForm form)
{
    ValidationReport report;
    using Kind = Violation::Kind;

    const auto states = declare(pda.states, "state", report);
    const auto inputs = declare(pda.input_alphabet, "input symbol", report);
    const auto stack = declare(pda.stack_alphabet, "stack symbol", report);

    for (const auto& s : pda.states)
        if (s.empty())
            report.violations.push_back({Kind::EmptyName, "state with empty name", std::nullopt});
    for (const auto& s : pda.stack_alphabet)
        if (s.empty())
            report.violations.push_back({Kind::EmptyName, "stack symbol with empty name", std::nullopt});

    if (stack.contains(std::string(kBlankSymbol)))
        report.violations.push_back(
            {Kind::BlankInStackAlphabet, "the blank padding symbol is reserved and may not be in the stack alphabet",
             std::nullopt});
    if (!stack.contains(std::string(kBottomMarker)))
        report.violations.push_back(
            {Kind::MissingBottomMarker, "stack alphabet lacks the bottom marker", std::nullopt});

    if (!states.contains(pda.initial_state))
        report.violations.push_back(
            {Kind::UndeclaredState, "initial state '" + pda.initial_state + "' is not declared", std::nullopt});
    for (const auto& s : pda.accept_states)
        if (!states.contains(s))
            report.violations.push_back(
                {Kind::UndeclaredState, "accept state '" + s + "' is not declared", std::nullopt});

    if (pda.initial_stack.empty()) {
        report.violations.push_back({Kind::EmptyInitialStack, "initial stack is empty", std::nullopt});
    } else {
        if (pda.initial_stack.front() != kBottomMarker)
            report.violations.push_back(
                {Kind::MissingBottomMarker, "deepest initial stack symbol is not the bottom marker", std::nullopt});
        for (const auto& s : pda.initial_stack)
            if (!stack.contains(s))
                report.violations.push_back(
                    {Kind::UndeclaredStackSymbol, "initial stack symbol '" + s + "' is not declared", std::nullopt});
    }

    for (std::size_t i = 0; i < pda.transitions.size(); ++i) {
        const auto& t = pda.transitions[i];
        const auto where = transition_label(i);
        if (!states.contains(t.from))
            report.violations.push_back({Kind::UndeclaredState, where + " leaves undeclared state '" + t.from + "'", i});
        if (!states.contains(t.to))
            report.violations.push_back({Kind::UndeclaredState, where + " enters undeclared state '" + t.to + "'", i});
        if (t.input && !inputs.contains(*t.input))
            report.violations.push_back(
                {Kind::UndeclaredInputSymbol, where + " reads undeclared input '" + encode_utf8(*t.input) + "'", i});
        if (!stack.contains(t.pop))
            report.violations.push_back(
                {Kind::UndeclaredStackSymbol, where + " pops undeclared symbol '" + t.pop + "'", i});
        for (const auto& s : t.push)
            if (!stack.contains(s))
                report.violations.push_back(
                    {Kind::UndeclaredStackSymbol, where + " pushes undeclared symbol '" + s + "'", i});
        if (form == PdaForm::Star && !transition_is_star(t))
            report.violations.push_back({Kind::StarFormViolation,
                                         where + " pushes " + std::to_string(t.push.size()) +
                                             " symbol(s); (*) form allows nothing or [popped, extra]",
                                         i});
        if (t.pop == kBottomMarker && !t.push.empty() && t.push.front() != kBottomMarker)
            report.warnings.push_back(where +
                                      " pops the bottom marker and pushes a sequence whose deepest symbol is not "
                                      "the bottom marker; normalization cannot push onto the emptied stack");
    }
    return report;
}

bool is_star_form(const GeneralPda& pda)
{
    return std::all_of(pda.transitions.begin(), pda.transitions.end(), transition_is_star);
}

NormalizedPda NormalizedPda::from_star_form(GeneralPda pda)
{
    auto report = validate(pda, PdaForm::Star);
    if (!report.ok())
        throw InvalidPda(std::move(report));

    NormalizedPda out;
    for (std::uint32_t i = 0; i < pda.states.size(); ++i)
        out.state_index_.emplace(pda.states[i], i);
    for (std::uint32_t i = 0; i < pda.stack_alphabet.size(); ++i)
        out.symbol_index_.emplace(pda.stack_alphabet[i], i);
    out.sorted_inputs_ = pda.input_alphabet;
    std::sort(out.sorted_inputs_.begin(), out.sorted_inputs_.end());

    auto state = [&](const std::string& name) { return StateId{out.state_index_.at(name)}; };
    auto symbol = [&](const std::string& name) { return SymbolId{out.symbol_index_.at(name)}; };

    out.initial_state_ = state(pda.initial_state);
    for (const auto& s : pda.initial_stack)
        out.initial_stack_.push_back(symbol(s));
    out.accepting_.assign(pda.states.size(), false);
    for (const auto& s : pda.accept_states)
        out.accepting_[state(s).value] = true;

    const std::size_t gamma = pda.stack_alphabet.size();
    out.by_state_top_.resize(pda.states.size() * gamma);
    for (std::size_t i = 0; i < pda.transitions.size(); ++i) {
        const auto& t = pda.transitions[i];
        NormalizedTransition nt;
        nt.index = i;
        nt.from = state(t.from);
        nt.input = t.input;
        nt.pop = symbol(t.pop);
        if (!t.push.empty())
            nt.extra = symbol(t.push[1]);
        nt.to = state(t.to);
        out.transitions_.push_back(nt);
        out.by_state_top_[nt.from.value * gamma + nt.pop.value].push_back(i);
    }
    out.description_ = std::move(pda);
    return out;
}

std::string NormalizedPda::symbol_name(SymbolId id) const
{
    if (id.is_blank())
        return std::string(kBlankSymbol);
    return description_.stack_alphabet.at(id.value);
}

std::optional<StateId> NormalizedPda::find_state(std::string_view name) const
{
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end())
        return std::nullopt;
    return StateId{it->second};
}

std::optional<SymbolId> NormalizedPda::find_symbol(std::string_view name) const
{
    auto it = symbol_index_.find(std::string(name));
    if (it == symbol_index_.end())
        return std::nullopt;
    return SymbolId{it->second};
}

bool NormalizedPda::has_input_symbol(char32_t symbol) const
{
    return std::binary_search(sorted_inputs_.begin(), sorted_inputs_.end(), symbol);
}

std::span<const std::size_t> NormalizedPda::transitions_from(StateId state, SymbolId top) const
{
    if (top.is_blank() || top.value >= stack_alphabet_size() || state.value >= state_count())
        return {};
    return by_state_top_[state.value * stack_alphabet_size() + top.value];
}

std::string NormalizedPda::describe(const NormalizedTransition& t) const
{
    std::ostringstream os;
    os << state_name(t.from) << " --" << (t.input ? "'" + encode_utf8(*t.input) + "'" : std::string("ε"))
       << "/" << symbol_name(t.pop) << "→";
    if (t.extra)
        os << symbol_name(t.pop) << symbol_name(*t.extra);
    else
        os << "ε";
    os << "--> " << state_name(t.to);
    return os.str();
}

ValidationReport validate(const NormalizedPda& pda) { return validate(pda.description(), PdaForm::Star); }

InstantaneousDescription initial_description(const NormalizedPda& pda)
{
    return {pda.initial_state(), 0, pda.initial_stack()};
}

std::optional<std::string> inapplicability(const InstantaneousDescription& id, const NormalizedTransition& t,
                                           WordView word)
{
    if (t.from != id.state)
        return "transition leaves a different state";
    if (id.stack.empty())
        return "stack is empty";
    if (id.stack.back() != t.pop)
        return "stack top does not match the popped symbol";
    if (t.input) {
        if (id.pos >= word.size())
            return "input exhausted";
        if (word[id.pos] != *t.input)
            return "next input letter does not match";
    }
    return std::nullopt;
}

InstantaneousDescription step(const NormalizedPda& pda, const InstantaneousDescription& id,
                              const NormalizedTransition& t, WordView word)
{
    if (auto why = inapplicability(id, t, word))
        throw InapplicableTransition(pda.describe(t) + ": " + *why);
    InstantaneousDescription next = id;
    next.state = t.to;
    if (t.input)
        ++next.pos;
    // (*) semantics: pop the top; a push puts it back plus one more.
    if (t.extra)
        next.stack.push_back(*t.extra);
    else
        next.stack.pop_back();
    return next;
}

} // namespace pumpkit
