#include "pumpkit/runner.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "stack_pool.hpp"

namespace pumpkit {

StateId RunPath::state_at(std::size_t pos) const
{
    if (pos < steps.size())
        return steps[pos].from;
    return steps.empty() ? initialState : steps.back().to;
}

std::vector<std::size_t> RunPath::step_indices() const
{
    std::vector<std::size_t> out;
    out.reserve(steps.size());
    for (const auto& t : steps)
        out.push_back(t.index);
    return out;
}

SearchLimits SearchLimits::defaults(std::size_t wordLength, std::optional<std::uint64_t> p)
{
    constexpr std::uint64_t kCap = 1'000'000;
    std::uint64_t steps = 10 * (static_cast<std::uint64_t>(wordLength) + 1);
    if (p && *p <= kCap / 4)
        steps = std::max<std::uint64_t>(steps, 4 * *p);
    steps = std::min(steps, kCap);
    return {static_cast<std::size_t>(steps), static_cast<std::size_t>(steps)};
}

std::string_view to_string(LimitKind kind)
{
    switch (kind) {
    case LimitKind::Steps: return "max-steps";
    case LimitKind::StackHeight: return "max-stack-height";
    case LimitKind::Both: return "max-steps+max-stack-height";
    }
    return "unknown";
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Accepted: return "Accepted";
    case Verdict::NotAccepted: return "NotAccepted";
    case Verdict::LimitExceeded: return "LimitExceeded";
    }
    return "unknown";
}

std::string_view to_string(ReplayError::Reason r)
{
    switch (r) {
    case ReplayError::Reason::Inapplicable: return "inapplicable";
    case ReplayError::Reason::InputMismatch: return "input-mismatch";
    case ReplayError::Reason::NotAccepting: return "not-accepting";
    case ReplayError::Reason::InputRemaining: return "input-remaining";
    }
    return "unknown";
}

namespace {

using detail::StackPool;

struct DescriptionKey {
    std::uint32_t state;
    StackPool::Node stack;
    std::size_t pos;
    bool operator==(const DescriptionKey&) const = default;
};

struct DescriptionKeyHash {
    std::size_t operator()(const DescriptionKey& k) const noexcept
    {
        std::uint64_t h = (std::uint64_t{k.state} << 32) ^ k.stack;
        h ^= k.pos + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return std::hash<std::uint64_t>{}(h);
    }
};

struct TruncationFlags {
    bool steps = false;
    bool height = false;

    LimitExceeded outcome() const
    {
        if (steps && height)
            return {LimitKind::Both};
        return {height ? LimitKind::StackHeight : LimitKind::Steps};
    }
};

bool input_matches(const NormalizedTransition& t, WordView word, std::size_t pos)
{
    return !t.input || (pos < word.size() && word[pos] == *t.input);
}

} // namespace

SearchOutcome minimal_accepting_path(const NormalizedPda& pda, WordView word, const SearchLimits& limits)
{
    struct Record {
        DescriptionKey key;
        std::size_t parent;
        std::size_t transition;
        std::size_t depth;
    };
    constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

    StackPool pool;
    std::vector<Record> records;
    std::unordered_set<DescriptionKey, DescriptionKeyHash> seen;
    TruncationFlags truncated;

    const auto start = pool.from_sequence(pda.initial_stack());
    records.push_back({{pda.initial_state().value, start, 0}, kRoot, 0, 0});
    seen.insert(records.front().key);

    const auto& transitions = pda.transitions();
    for (std::size_t head = 0; head < records.size(); ++head) {
        const Record current = records[head];
        const auto& key = current.key;
        if (key.pos == word.size() && pda.is_accepting(StateId{key.state})) {
            std::vector<std::size_t> steps(current.depth);
            for (std::size_t r = head; records[r].parent != kRoot; r = records[r].parent)
                steps[records[r].depth - 1] = records[r].transition;
            auto replayed = replay(pda, steps, word);
            return std::get<RunPath>(std::move(replayed));
        }
        if (key.stack == StackPool::kEmpty)
            continue;
        for (std::size_t ti : pda.transitions_from(StateId{key.state}, pool.top(key.stack))) {
            const auto& t = transitions[ti];
            if (!input_matches(t, word, key.pos))
                continue;
            if (current.depth >= limits.maxSteps) {
                truncated.steps = true;
                break;
            }
            StackPool::Node next = pool.below(key.stack);
            if (t.extra) {
                if (pool.height(key.stack) + 1 > limits.maxStackHeight) {
                    truncated.height = true;
                    continue;
                }
                next = pool.push(key.stack, *t.extra);
            }
            const DescriptionKey succ{t.to.value, next, key.pos + (t.input ? 1 : 0)};
            if (seen.insert(succ).second)
                records.push_back({succ, head, ti, current.depth + 1});
        }
    }
    if (truncated.steps || truncated.height)
        return truncated.outcome();
    return NotAccepted{};
}

Verdict accepts(const NormalizedPda& pda, WordView word, const SearchLimits& limits)
{
    // Layer-synchronous exploration without parent links.
    StackPool pool;
    std::unordered_set<DescriptionKey, DescriptionKeyHash> visited;
    std::vector<DescriptionKey> layer{{pda.initial_state().value, pool.from_sequence(pda.initial_stack()), 0}};
    visited.insert(layer.front());
    TruncationFlags truncated;

    for (std::size_t depth = 0; !layer.empty(); ++depth) {
        std::vector<DescriptionKey> next;
        for (const auto& d : layer) {
            if (d.pos == word.size() && pda.is_accepting(StateId{d.state}))
                return Verdict::Accepted;
            if (d.stack == StackPool::kEmpty)
                continue;
            const auto top = pool.top(d.stack);
            for (const auto& t : pda.transitions()) {
                if (t.from.value != d.state || t.pop != top)
                    continue;
                if (t.input && (d.pos >= word.size() || word[d.pos] != *t.input))
                    continue;
                if (depth >= limits.maxSteps) {
                    truncated.steps = true;
                    continue;
                }
                if (t.extra && pool.height(d.stack) >= limits.maxStackHeight) {
                    truncated.height = true;
                    continue;
                }
                const auto stack = t.extra ? pool.push(d.stack, *t.extra) : pool.below(d.stack);
                DescriptionKey succ{t.to.value, stack, d.pos + (t.input ? 1U : 0U)};
                if (visited.insert(succ).second)
                    next.push_back(succ);
            }
        }
        layer = std::move(next);
    }
    return (truncated.steps || truncated.height) ? Verdict::LimitExceeded : Verdict::NotAccepted;
}

ReplayOutcome replay(const NormalizedPda& pda, std::span<const std::size_t> steps, WordView word)
{
    RunPath path;
    path.word = Word(word);
    path.initialState = pda.initial_state();
    path.initialStack = pda.initial_stack();
    path.steps.reserve(steps.size());
    path.profile.reserve(steps.size() + 1);
    path.lettersRead.reserve(steps.size() + 1);

    StateId state = pda.initial_state();
    std::vector<SymbolId> stack = pda.initial_stack();
    std::size_t pos = 0;
    path.profile.push_back(stack.size());
    path.lettersRead.push_back(0);

    const auto& transitions = pda.transitions();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] >= transitions.size())
            return ReplayError{i, ReplayError::Reason::Inapplicable};
        const auto& t = transitions[steps[i]];
        if (t.from != state || stack.empty() || stack.back() != t.pop)
            return ReplayError{i, ReplayError::Reason::Inapplicable};
        if (t.input) {
            if (pos >= word.size() || word[pos] != *t.input)
                return ReplayError{i, ReplayError::Reason::InputMismatch};
            ++pos;
        }
        if (t.extra)
            stack.push_back(*t.extra);
        else
            stack.pop_back();
        state = t.to;
        path.steps.push_back(t);
        path.profile.push_back(stack.size());
        path.lettersRead.push_back(pos);
    }
    if (!pda.is_accepting(state))
        return ReplayError{steps.size(), ReplayError::Reason::NotAccepting};
    if (pos != word.size())
        return ReplayError{steps.size(), ReplayError::Reason::InputRemaining};
    return path;
}

} // namespace pumpkit
