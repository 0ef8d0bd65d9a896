#include "pumpkit/pump_extractor.hpp"

#include <algorithm>
#include <map>

#include "pumpkit/verifier.hpp"

namespace pumpkit {

std::string_view to_string(ExtractionError::Kind kind)
{
    switch (kind) {
    case ExtractionError::Kind::NotAccepted: return "NotAccepted";
    case ExtractionError::Kind::StrictPreconditionViolated: return "StrictPreconditionViolated";
    case ExtractionError::Kind::NoWitnessFound: return "NoWitnessFound";
    case ExtractionError::Kind::LimitExceeded: return "LimitExceeded";
    case ExtractionError::Kind::NoRepeatFound: return "NoRepeatFound";
    case ExtractionError::Kind::MinimalityViolation: return "MinimalityViolation";
    }
    return "unknown";
}

ExtractionError::ExtractionError(Kind kind, const std::string& message, Diagnostics diagnostics)
    : Error(std::string(to_string(kind)) + ": " + message), kind_(kind), diagnostics_(std::move(diagnostics))
{
}

namespace {

// Bounds the work spent on rejected witnesses for pathological paths.
constexpr std::size_t kMaxCandidates = 4096;

Word slice(const Word& w, std::size_t from, std::size_t to) { return w.substr(from, to - from); }

Decomposition make_case1(const RunPath& path, const PumpingParams& params, const Case1Witness& c)
{
    const auto& w = path.word;
    const auto a = path.lettersRead[c.i];
    const auto b = path.lettersRead[c.j];
    return {slice(w, 0, a), slice(w, a, b), slice(w, b, w.size()), {}, {}, c, params};
}

Decomposition make_case2(const RunPath& path, const PumpingParams& params, const Case2Witness& c)
{
    const auto& w = path.word;
    const auto& hat = path.lettersRead;
    const auto a = hat[c.lpG], b = hat[c.lpH], e = hat[c.fpH], f = hat[c.fpG];
    return {slice(w, 0, a), slice(w, a, b), slice(w, b, e), slice(w, e, f), slice(w, f, w.size()), c, params};
}

struct Case1Scan {
    std::vector<Case1Witness> candidates;
    std::size_t repeats = 0;
};

/// Pairs ordered by j, then i; positions 0..windowEnd.
Case1Scan scan_case1(const PathTrace& trace, std::size_t depth, std::size_t windowEnd)
{
    Case1Scan scan;
    std::map<Configuration, std::vector<std::size_t>> seen;
    const std::size_t last = std::min(windowEnd, trace.positions() - 1);
    for (std::size_t j = 0; j <= last; ++j) {
        auto& earlier = seen[trace.configuration_at(j, depth)];
        scan.repeats += earlier.size();
        for (std::size_t i : earlier) {
            if (scan.candidates.size() >= kMaxCandidates)
                break;
            scan.candidates.push_back({i, j, depth});
        }
        earlier.push_back(j);
    }
    return scan;
}

struct Case2Scan {
    std::vector<Case2Witness> candidates;
    std::size_t repeats = 0;
};

/// Pairs ordered by g, then h.
Case2Scan scan_case2(const PathTrace& trace, Profile profile, const LevelTriple& triple)
{
    Case2Scan scan;
    const std::size_t lo = std::max<std::size_t>(1, profile[triple.i]);
    const std::size_t hi = profile[triple.j];
    std::vector<FullState> states;
    for (std::size_t h = lo; h <= hi; ++h)
        states.push_back(full_state(trace, profile, triple, h));
    for (std::size_t g = lo; g <= hi; ++g) {
        for (std::size_t h = g + 1; h <= hi; ++h) {
            if (states[g - lo] != states[h - lo])
                continue;
            ++scan.repeats;
            if (scan.candidates.size() < kMaxCandidates)
                scan.candidates.push_back({triple, g, h, last_push(profile, triple, g), last_push(profile, triple, h),
                                           first_pop(profile, triple, h), first_pop(profile, triple, g)});
        }
    }
    return scan;
}

std::string describe(const Decomposition& d)
{
    if (const auto* c1 = std::get_if<Case1Witness>(&d.witness))
        return "Case1 (i,j)=(" + std::to_string(c1->i) + "," + std::to_string(c1->j) + ")";
    const auto& c2 = std::get<Case2Witness>(d.witness);
    return "Case2 (g,h)=(" + std::to_string(c2.g) + "," + std::to_string(c2.h) + ")";
}

class CandidateJudge {
public:
    CandidateJudge(const NormalizedPda& pda, const RunPath& path, ExtractionMode mode, Diagnostics& diag)
        : pda_(pda), path_(path), mode_(mode), diag_(diag)
    {
    }

    /// True when `d` may be returned. Throws MinimalityViolation when an
    /// empty v·y still splices into an accepting path.
    bool accept(const Decomposition& d)
    {
        if (d.v.empty() && d.y.empty()) {
            if (verify_by_replay(pda_, path_, d, 0).accepted)
                throw ExtractionError(ExtractionError::Kind::MinimalityViolation,
                                      describe(d) + " reads no letters yet splices out of an accepting path", diag_);
            diag_.notes.push_back(describe(d) + " rejected: v and y are empty");
            return false;
        }
        if (mode_ == ExtractionMode::Strict && d.case_tag() == CaseTag::Case2 &&
            d.v.size() + d.x.size() + d.y.size() > d.params.p) {
            diag_.notes.push_back(describe(d) + " rejected: |vxy| exceeds p");
            return false;
        }
        for (std::size_t n : {std::size_t{0}, std::size_t{2}}) {
            const auto check = verify_by_replay(pda_, path_, d, n);
            if (!check.accepted) {
                diag_.notes.push_back(describe(d) + " rejected: replay for n=" + std::to_string(n) + " fails at step " +
                                      std::to_string(check.error->index) + " (" +
                                      std::string(to_string(check.error->reason)) + ")");
                return false;
            }
        }
        return true;
    }

private:
    const NormalizedPda& pda_;
    const RunPath& path_;
    ExtractionMode mode_;
    Diagnostics& diag_;
};

RunPath find_path(const NormalizedPda& pda, WordView word, const SearchLimits& limits, const Diagnostics& diag)
{
    auto outcome = minimal_accepting_path(pda, word, limits);
    if (std::holds_alternative<NotAccepted>(outcome))
        throw ExtractionError(ExtractionError::Kind::NotAccepted, "the word is not accepted", diag);
    if (const auto* lim = std::get_if<LimitExceeded>(&outcome))
        throw ExtractionError(ExtractionError::Kind::LimitExceeded,
                              "path search hit " + std::string(to_string(lim->which)), diag);
    return std::get<RunPath>(std::move(outcome));
}

} // namespace

Decomposition case1_decompose(const RunPath& path, const PumpingParams& params, std::size_t level)
{
    const std::size_t window = static_cast<std::size_t>(std::min<std::uint64_t>(params.p, path.length()));
    const auto scan = scan_case1(PathTrace(path), std::max<std::size_t>(level, 1), window);
    if (scan.candidates.empty())
        throw ExtractionError(ExtractionError::Kind::NoRepeatFound,
                              "no repeated configuration among the first " + std::to_string(window + 1) +
                                  " positions");
    auto d = make_case1(path, params, scan.candidates.front());
    if (d.v.empty())
        throw ExtractionError(ExtractionError::Kind::MinimalityViolation,
                              "repeated configuration reads no letters; the path is not minimal");
    return d;
}

Decomposition case2_decompose(const RunPath& path, const PumpingParams& params, const LevelTriple& triple)
{
    const auto scan = scan_case2(PathTrace(path), path.profile, triple);
    if (scan.candidates.empty())
        throw ExtractionError(ExtractionError::Kind::NoRepeatFound,
                              "no repeated full state among heights of the level triple");
    auto d = make_case2(path, params, scan.candidates.front());
    if (d.v.empty() && d.y.empty())
        throw ExtractionError(ExtractionError::Kind::MinimalityViolation,
                              "repeated full state reads no letters; the path is not minimal");
    return d;
}

Extraction extract(const NormalizedPda& pda, WordView word, ExtractionMode mode, std::optional<SearchLimits> limits)
{
    Diagnostics diag;
    diag.mode = mode;
    diag.wordLength = word.size();

    PumpingParams params;
    if (mode == ExtractionMode::Strict) {
        try {
            params = pumping_params(pda);
        } catch (const ParamsOverflow& e) {
            throw ExtractionError(ExtractionError::Kind::StrictPreconditionViolated,
                                  std::string("no word is longer than p: ") + e.what(), diag);
        }
        if (word.size() <= params.p)
            throw ExtractionError(ExtractionError::Kind::StrictPreconditionViolated,
                                  "|w| = " + std::to_string(word.size()) + " must exceed p = " +
                                      std::to_string(params.p),
                                  diag);
    } else {
        params = saturating_pumping_params(pda);
    }

    const auto searchLimits = limits.value_or(
        SearchLimits::defaults(word.size(), params.pSaturated ? std::nullopt : std::optional(params.p)));
    RunPath path = find_path(pda, word, searchLimits, diag);
    const PathTrace trace(path);

    diag.pathLength = path.length();
    diag.profile = path.profile;
    diag.windowEnd = mode == ExtractionMode::Strict
                         ? static_cast<std::size_t>(std::min<std::uint64_t>(params.p, path.length()))
                         : path.length();
    diag.level = max_level(path.profile, diag.windowEnd);
    diag.wholePathLevel = max_level(path.profile, path.length());
    if (diag.level.level != diag.wholePathLevel.level)
        diag.notes.push_back("level over the window is " + std::to_string(diag.level.level) +
                             ", over the whole path " + std::to_string(diag.wholePathLevel.level));

    CandidateJudge judge(pda, path, mode, diag);
    const std::size_t l = diag.level.level;
    const bool highLevel = l >= params.pPrime;

    auto finish = [&](Decomposition d) {
        diag.chosenCase = d.case_tag();
        return Extraction{std::move(d), diag, path};
    };

    auto try_case2 = [&](const LevelTriple& triple) -> std::optional<Decomposition> {
        diag.case2Triple = triple;
        const auto scan = scan_case2(trace, path.profile, triple);
        diag.case2Repeats = scan.repeats;
        if (scan.candidates.empty() && mode == ExtractionMode::Strict)
            throw ExtractionError(ExtractionError::Kind::NoRepeatFound,
                                  "no repeated full state in a " + std::to_string(triple.n) + "-level", diag);
        for (const auto& c : scan.candidates) {
            auto d = make_case2(path, params, c);
            if (judge.accept(d))
                return d;
        }
        return std::nullopt;
    };

    auto try_case1 = [&](std::size_t window) -> std::optional<Decomposition> {
        diag.configurationDepth = std::max<std::size_t>(l, 1);
        const auto scan = scan_case1(trace, diag.configurationDepth, window);
        diag.case1Repeats = scan.repeats;
        if (scan.candidates.empty() && mode == ExtractionMode::Strict)
            throw ExtractionError(ExtractionError::Kind::NoRepeatFound,
                                  "no repeated configuration among the first " + std::to_string(window + 1) +
                                      " positions",
                                  diag);
        for (const auto& c : scan.candidates) {
            auto d = make_case1(path, params, c);
            if (judge.accept(d))
                return d;
        }
        return std::nullopt;
    };

    if (highLevel) {
        diag.case2Threshold = static_cast<std::size_t>(params.pPrime);
        const auto triple = extract_sublevel(path.profile, *diag.level.witness, diag.case2Threshold);
        if (auto d = try_case2(triple))
            return finish(std::move(*d));
        if (mode == ExtractionMode::BestEffort) {
            diag.notes.push_back("no replay-valid full-state repeat; falling back to configurations");
            if (auto d = try_case1(path.length()))
                return finish(std::move(*d));
        }
    } else if (mode == ExtractionMode::Strict) {
        if (auto d = try_case1(diag.windowEnd))
            return finish(std::move(*d));
    } else {
        if (diag.level.witness) {
            diag.case2Threshold = l;
            if (auto d = try_case2(*diag.level.witness))
                return finish(std::move(*d));
            diag.notes.push_back("no replay-valid full-state repeat; falling back to configurations");
        }
        if (auto d = try_case1(path.length()))
            return finish(std::move(*d));
    }
    throw ExtractionError(ExtractionError::Kind::NoWitnessFound,
                          "no repeated configuration or full state yields a replay-valid decomposition", diag);
}

} // namespace pumpkit
