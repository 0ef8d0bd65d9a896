#include "pumpkit/verifier.hpp"

#include <algorithm>
#include <future>

namespace pumpkit {

std::string_view to_string(CaseTag tag) { return tag == CaseTag::Case1 ? "Case1" : "Case2"; }

std::string_view to_string(ExtractionMode mode) { return mode == ExtractionMode::Strict ? "strict" : "best-effort"; }

Word pumped_word(const Decomposition& d, std::size_t n)
{
    Word out = d.u;
    for (std::size_t r = 0; r < n; ++r)
        out += d.v;
    out += d.x;
    for (std::size_t r = 0; r < n; ++r)
        out += d.y;
    out += d.z;
    return out;
}

std::vector<SearchCheck> verify_by_search(const NormalizedPda& pda, const Decomposition& d,
                                          std::span<const std::size_t> counts, std::optional<SearchLimits> limits)
{
    std::vector<SearchCheck> out;
    for (std::size_t n : counts) {
        const auto word = pumped_word(d, n);
        const auto lim = limits.value_or(SearchLimits::defaults(word.size(), d.params.pSaturated
                                                                               ? std::nullopt
                                                                               : std::optional(d.params.p)));
        out.push_back({n, accepts(pda, word, lim)});
    }
    return out;
}

std::vector<std::size_t> pumped_steps(const RunPath& path, const Decomposition& d, std::size_t n)
{
    const auto all = path.step_indices();
    auto segment = [&](std::size_t from, std::size_t to) {
        return std::vector<std::size_t>(all.begin() + static_cast<std::ptrdiff_t>(from),
                                        all.begin() + static_cast<std::ptrdiff_t>(to));
    };
    auto repeat = [](std::vector<std::size_t>& out, const std::vector<std::size_t>& seg, std::size_t times) {
        for (std::size_t r = 0; r < times; ++r)
            out.insert(out.end(), seg.begin(), seg.end());
    };

    std::vector<std::size_t> out;
    if (const auto* c1 = std::get_if<Case1Witness>(&d.witness)) {
        out = segment(0, c1->i);
        repeat(out, segment(c1->i, c1->j), n);
        const auto tail = segment(c1->j, all.size());
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }
    const auto& c2 = std::get<Case2Witness>(d.witness);
    out = segment(0, c2.lpG);
    repeat(out, segment(c2.lpG, c2.lpH), n);
    const auto middle = segment(c2.lpH, c2.fpH);
    out.insert(out.end(), middle.begin(), middle.end());
    repeat(out, segment(c2.fpH, c2.fpG), n);
    const auto tail = segment(c2.fpG, all.size());
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

ReplayCheck verify_by_replay(const NormalizedPda& pda, const RunPath& path, const Decomposition& d, std::size_t n)
{
    const auto steps = pumped_steps(path, d, n);
    auto outcome = replay(pda, steps, pumped_word(d, n));
    ReplayCheck check{n, false, std::nullopt, steps.size()};
    if (std::holds_alternative<RunPath>(outcome))
        check.accepted = true;
    else
        check.error = std::get<ReplayError>(outcome);
    return check;
}

ConstraintReport check_constraints(const Decomposition& d, const PumpingParams& params, WordView w)
{
    ConstraintReport r;
    r.concatenationOk = d.word() == w;
    r.vxyLength = d.v.size() + d.x.size() + d.y.size();
    r.bound = params.p;
    r.lengthBoundOk = r.vxyLength <= params.p;
    r.nonTrivialOk = d.v.size() + d.y.size() >= 1;
    return r;
}

VerificationReport verify(const NormalizedPda& pda, const RunPath& path, const Decomposition& d,
                          std::span<const std::size_t> counts, std::optional<SearchLimits> limits)
{
    std::vector<std::size_t> sorted(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<std::future<SearchCheck>> searches;
    for (std::size_t n : sorted) {
        searches.push_back(std::async(std::launch::async, [&pda, &d, limits, n] {
            const std::size_t one[] = {n};
            return verify_by_search(pda, d, one, limits).front();
        }));
    }

    VerificationReport report;
    report.constraints = check_constraints(d, d.params, path.word);
    report.verdictsAgree = true;
    bool allAccepted = true;
    for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
        const auto replayed = verify_by_replay(pda, path, d, sorted[idx]);
        PumpCheck c;
        c.n = sorted[idx];
        c.replay = replayed.accepted ? Verdict::Accepted : Verdict::NotAccepted;
        c.replayError = replayed.error;
        c.search = searches[idx].get().verdict;
        if (c.search != Verdict::LimitExceeded && c.search != c.replay)
            report.verdictsAgree = false;
        allAccepted = allAccepted && c.replay == Verdict::Accepted && c.search == Verdict::Accepted;
        report.perN.push_back(c);
    }
    const auto& k = report.constraints;
    report.overall = k.concatenationOk && k.lengthBoundOk && k.nonTrivialOk && allAccepted && report.verdictsAgree;
    return report;
}

} // namespace pumpkit
