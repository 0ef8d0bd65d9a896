#include "pumpkit/normalizer.hpp"

#include <limits>
#include <set>

namespace pumpkit {

ParamsOverflow::ParamsOverflow(std::uint64_t pPrime, std::uint64_t base)
    : Error("pumping length overflows 64 bits: p = |A|·" + std::to_string(base) + "^" + std::to_string(pPrime) +
            " (p' = " + std::to_string(pPrime) + ")"),
      pPrime_(pPrime), base_(base)
{
}

namespace {

class FreshStates {
public:
    explicit FreshStates(const std::vector<std::string>& existing) : taken_(existing.begin(), existing.end()) {}

    std::string make(const std::string& from, std::size_t transition, const std::string& tag)
    {
        std::string name = from + "~t" + std::to_string(transition) + "." + tag;
        while (!taken_.insert(name).second)
            name += "'";
        created_.push_back(name);
        return name;
    }

    std::vector<std::string> created_;

private:
    std::set<std::string> taken_;
};

void push_chain(GeneralPda& out, const std::vector<std::string>& gamma, std::string state,
                const std::vector<std::string>& symbols, std::size_t first, const std::string& target,
                const std::string& origin, std::size_t transition, FreshStates& fresh)
{
    for (std::size_t i = first; i < symbols.size(); ++i) {
        const bool last = i + 1 == symbols.size();
        const std::string next = last ? target : fresh.make(origin, transition, std::to_string(symbols.size() - i - 1));
        for (const auto& top : gamma)
            out.transitions.push_back({state, std::nullopt, top, {top, symbols[i]}, next});
        state = next;
    }
}

} // namespace

NormalizedPda normalize(const GeneralPda& pda)
{
    auto report = validate(pda);
    if (!report.ok())
        throw InvalidPda(std::move(report));

    GeneralPda out = pda;
    out.transitions.clear();
    FreshStates fresh(pda.states);
    const auto& gamma = pda.stack_alphabet;

    for (std::size_t ti = 0; ti < pda.transitions.size(); ++ti) {
        const auto& t = pda.transitions[ti];
        const auto& push = t.push;
        if (push.empty() || (push.size() == 2 && push.front() == t.pop)) {
            out.transitions.push_back(t);
            continue;
        }
        if (push.front() == t.pop) {
            // The popped symbol stays in place; only the suffix is new.
            if (push.size() == 1) {
                // Net zero: push a copy, then pop it again.
                const auto mid = fresh.make(t.from, ti, "pop");
                out.transitions.push_back({t.from, t.input, t.pop, {t.pop, t.pop}, mid});
                out.transitions.push_back({mid, std::nullopt, t.pop, {}, t.to});
            } else {
                const auto mid = fresh.make(t.from, ti, std::to_string(push.size() - 2));
                out.transitions.push_back({t.from, t.input, t.pop, {t.pop, push[1]}, mid});
                push_chain(out, gamma, mid, push, 2, t.to, t.from, ti, fresh);
            }
            continue;
        }
        const auto mid = fresh.make(t.from, ti, std::to_string(push.size()));
        out.transitions.push_back({t.from, t.input, t.pop, {}, mid});
        push_chain(out, gamma, mid, push, 0, t.to, t.from, ti, fresh);
    }
    out.states.insert(out.states.end(), fresh.created_.begin(), fresh.created_.end());
    return NormalizedPda::from_star_form(std::move(out));
}

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        return std::nullopt;
    return r;
}

std::optional<PumpingParams> compute(std::uint64_t states, std::uint64_t gamma, std::uint64_t& pPrimeOut)
{
    auto sq = checked_mul(states, states);
    auto pPrime = sq ? checked_mul(*sq, gamma) : std::nullopt;
    if (!pPrime)
        throw ParamsOverflow(std::numeric_limits<std::uint64_t>::max(), gamma + 1);
    pPrimeOut = *pPrime;

    std::optional<std::uint64_t> p = states;
    for (std::uint64_t e = 0; e < *pPrime && p; ++e)
        p = checked_mul(*p, gamma + 1);
    if (!p)
        return std::nullopt;
    return PumpingParams{*pPrime, *p, states, gamma, false};
}

} // namespace

PumpingParams pumping_params(std::uint64_t stateCount, std::uint64_t stackAlphabetSize)
{
    std::uint64_t pPrime = 0;
    auto params = compute(stateCount, stackAlphabetSize, pPrime);
    if (!params)
        throw ParamsOverflow(pPrime, stackAlphabetSize + 1);
    return *params;
}

PumpingParams pumping_params(const NormalizedPda& pda)
{
    return pumping_params(pda.state_count(), pda.stack_alphabet_size());
}

PumpingParams saturating_pumping_params(const NormalizedPda& pda)
{
    std::uint64_t pPrime = 0;
    auto params = compute(pda.state_count(), pda.stack_alphabet_size(), pPrime);
    if (params)
        return *params;
    return PumpingParams{pPrime, std::numeric_limits<std::uint64_t>::max(), pda.state_count(),
                         pda.stack_alphabet_size(), true};
}

} // namespace pumpkit
