#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pumpkit/corpus.hpp"
#include "pumpkit/pump_extractor.hpp"
#include "pumpkit/verifier.hpp"

using namespace pumpkit;

namespace {

const std::string kBot(kBottomMarker);

NormalizedPda machine(const std::string& name) { return normalize(builtin(name).pda); }

ExtractionError::Kind failure_kind(const NormalizedPda& pda, const Word& w, ExtractionMode mode,
                                   std::optional<SearchLimits> limits = std::nullopt)
{
    try {
        (void)extract(pda, w, mode, limits);
    } catch (const ExtractionError& e) {
        return e.kind();
    }
    FAIL("extraction unexpectedly succeeded");
    return ExtractionError::Kind::NotAccepted;
}

/// q loops on ε through X pushes and pops; 'a' on ⊥ finishes.
NormalizedPda epsilon_loop_machine()
{
    return NormalizedPda::from_star_form(GeneralPda{
        {"q", "f"},
        {U'a'},
        {kBot, "X"},
        "q",
        {kBot},
        {"f"},
        {
            {"q", std::nullopt, kBot, {kBot, "X"}, "q"},
            {"q", std::nullopt, "X", {}, "q"},
            {"q", U'a', kBot, {}, "f"},
            {"q", std::nullopt, "X", {"X", "X"}, "q"},
        },
    });
}

RunPath replayed(const NormalizedPda& pda, const std::vector<std::size_t>& steps, const Word& w)
{
    auto out = replay(pda, steps, w);
    REQUIRE(std::holds_alternative<RunPath>(out));
    return std::get<RunPath>(std::move(out));
}

/// Structural checks every returned decomposition must pass, against the
/// language predicate rather than the machine.
void check_decomposition(const std::string& name, const Extraction& e)
{
    const auto& d = e.decomposition;
    const auto inLanguage = oracle::language_of(name);
    CHECK(d.word() == e.path.word);
    CHECK(d.v.size() + d.y.size() >= 1);
    for (std::size_t n : {0, 2})
        CHECK(inLanguage(pumped_word(d, n)));
    if (const auto* c2 = std::get_if<Case2Witness>(&d.witness)) {
        CHECK(is_level_triple(e.path.profile, c2->triple));
        CHECK(c2->g < c2->h);
        CHECK(c2->lpG < c2->lpH);
        CHECK(c2->lpH <= c2->fpH);
        CHECK(c2->fpH < c2->fpG);
        CHECK(full_state(e.path, c2->triple, c2->g) == full_state(e.path, c2->triple, c2->h));
        if (c2->h == e.path.profile[c2->triple.j]) {
            CHECK(c2->lpH == c2->triple.j);
            CHECK(c2->fpH == c2->triple.j);
            CHECK(d.x.empty());
        }
    } else {
        const auto& c1 = std::get<Case1Witness>(d.witness);
        CHECK(c1.i < c1.j);
        CHECK(d.y.empty());
        CHECK(d.z.empty());
        CHECK(configuration_at(e.path, c1.i, c1.depth) == configuration_at(e.path, c1.j, c1.depth));
    }
}

} // namespace

TEST_CASE("DYCK1 (((()))) best-effort golden")
{
    const auto e = extract(machine("DYCK1"), U"(((())))", ExtractionMode::BestEffort);
    const auto& d = e.decomposition;
    CHECK(d.u == U"(");
    CHECK(d.v == U"(");
    CHECK(d.x == U"(())");
    CHECK(d.y == U")");
    CHECK(d.z == U")");
    REQUIRE(d.case_tag() == CaseTag::Case2);
    CHECK(std::get<Case2Witness>(d.witness) == Case2Witness{{0, 4, 8, 4}, 2, 3, 1, 2, 6, 7});
    CHECK(e.diagnostics.level == LevelResult{4, LevelTriple{0, 4, 8, 4}});
    CHECK(e.diagnostics.profile == std::vector<std::size_t>{1, 2, 3, 4, 5, 4, 3, 2, 1, 0});
    CHECK(e.diagnostics.pathLength == 9);
    CHECK(e.diagnostics.windowEnd == 9);
    CHECK(e.diagnostics.chosenCase == CaseTag::Case2);
    CHECK(e.diagnostics.case2Threshold == 4);
    CHECK(e.diagnostics.case2Repeats == 6); // C(4,2) among heights 2..5
    check_decomposition("DYCK1", e);

    CHECK(case2_decompose(e.path, d.params, {0, 4, 8, 4}) == d);
}

TEST_CASE("REG_AB abab: configuration repeat at positions 0 and 2")
{
    const auto pda = machine("REG_AB");
    const auto e = extract(pda, U"abab", ExtractionMode::BestEffort);
    CHECK(e.decomposition.u.empty());
    CHECK(e.decomposition.v == U"ab");
    CHECK(e.decomposition.x == U"ab");
    CHECK(std::get<Case1Witness>(e.decomposition.witness) == Case1Witness{0, 2, 1});
    const auto direct = case1_decompose(e.path, pumping_params(pda), 1);
    CHECK(direct == e.decomposition);
    check_decomposition("REG_AB", e);
}

TEST_CASE("strict REG_AB (ab)^17 uses Case 1")
{
    const auto w = generate("REG_AB", 17);
    const auto e = extract(machine("REG_AB"), w, ExtractionMode::Strict);
    const auto& d = e.decomposition;
    REQUIRE(d.case_tag() == CaseTag::Case1);
    CHECK(d.params == PumpingParams{4, 32, 2, 1, false});
    CHECK(d.u.empty());
    CHECK(d.y.empty());
    CHECK(d.z.empty());
    CHECK(oracle::is_ab_star(d.v));
    CHECK_FALSE(d.v.empty());
    CHECK(e.diagnostics.windowEnd == 32);
    CHECK(e.diagnostics.level.level < 4);
    check_decomposition("REG_AB", e);
}

TEST_CASE("strict DYCK1 beyond p uses Case 2 on a p'-sublevel")
{
    const auto w = generate("DYCK1", 6601);
    const auto e = extract(machine("DYCK1"), w, ExtractionMode::Strict);
    const auto& d = e.decomposition;
    REQUIRE(d.case_tag() == CaseTag::Case2);
    const auto& c2 = std::get<Case2Witness>(d.witness);
    CHECK(c2.triple.n == 8);
    CHECK(c2.h > c2.g);
    CHECK(d.v == Word(c2.h - c2.g, U'('));
    CHECK(d.y == Word(c2.h - c2.g, U')'));
    CHECK(d.v.size() + d.x.size() + d.y.size() <= 13122);
    CHECK(e.diagnostics.level.level >= 8);
    CHECK(e.diagnostics.windowEnd == 13122);
    check_decomposition("DYCK1", e);
}

TEST_CASE("failure kinds")
{
    const auto dyck = machine("DYCK1");
    CHECK(failure_kind(dyck, U"(()", ExtractionMode::BestEffort) == ExtractionError::Kind::NotAccepted);
    CHECK(failure_kind(dyck, U"(())", ExtractionMode::Strict) == ExtractionError::Kind::StrictPreconditionViolated);
    CHECK(failure_kind(machine("GEN_PAL"), U"abba", ExtractionMode::Strict) ==
          ExtractionError::Kind::StrictPreconditionViolated);
    CHECK(failure_kind(dyck, U"(((())))", ExtractionMode::BestEffort, SearchLimits{4, 4}) ==
          ExtractionError::Kind::LimitExceeded);
    CHECK(failure_kind(dyck, U"", ExtractionMode::BestEffort) == ExtractionError::Kind::NoWitnessFound);
}

TEST_CASE("NoWitnessFound only when the path has no repeats at all")
{
    const auto pda = machine("ANBN");
    try {
        (void)extract(pda, U"aabb", ExtractionMode::BestEffort);
        FAIL("expected NoWitnessFound");
    } catch (const ExtractionError& e) {
        REQUIRE(e.kind() == ExtractionError::Kind::NoWitnessFound);
        const auto& diag = e.diagnostics();
        CHECK(diag.case1Repeats == 0);
        CHECK(diag.case2Repeats == 0);
        CHECK(diag.profile == std::vector<std::size_t>{1, 2, 3, 2, 1, 0});

        // Independent recount from simulated stacks.
        auto found = minimal_accepting_path(pda, U"aabb", SearchLimits{});
        const auto& path = std::get<RunPath>(found);
        const auto stacks = oracle::stacks_along(pda, path.step_indices());
        std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> configs;
        for (std::size_t pos = 0; pos < path.positions(); ++pos) {
            std::vector<std::uint32_t> top;
            for (std::size_t d = 0; d < diag.configurationDepth; ++d)
                top.push_back(d < stacks[pos].size() ? stacks[pos][stacks[pos].size() - 1 - d].value : ~0U);
            CHECK(configs.insert({path.state_at(pos).value, top}).second);
        }
    }
}

TEST_CASE("non-minimal hand-built paths trip the minimality assertions")
{
    const auto pda = epsilon_loop_machine();
    const auto params = pumping_params(pda);

    const auto loop = replayed(pda, {0, 1, 2}, U"a");
    REQUIRE(loop.profile == std::vector<std::size_t>{1, 2, 1, 0});
    try {
        (void)case1_decompose(loop, params, 1);
        FAIL("expected MinimalityViolation");
    } catch (const ExtractionError& e) {
        CHECK(e.kind() == ExtractionError::Kind::MinimalityViolation);
    }

    const auto hill = replayed(pda, {0, 3, 1, 1, 2}, U"a");
    REQUIRE(hill.profile == std::vector<std::size_t>{1, 2, 3, 2, 1, 0});
    try {
        (void)case2_decompose(hill, params, {0, 2, 4, 2});
        FAIL("expected MinimalityViolation");
    } catch (const ExtractionError& e) {
        CHECK(e.kind() == ExtractionError::Kind::MinimalityViolation);
    }

    // The search itself finds the one-step path and nothing to pump.
    const auto minimal = minimal_accepting_path(pda, U"a", SearchLimits{});
    CHECK(std::get<RunPath>(minimal).length() == 1);
}

TEST_CASE("case decomposers report missing repeats")
{
    const auto pda = machine("ANBN");
    auto found = minimal_accepting_path(pda, U"aabb", SearchLimits{});
    const auto& path = std::get<RunPath>(found);
    const auto params = pumping_params(pda);
    try {
        (void)case2_decompose(path, params, {0, 2, 4, 2});
        FAIL("expected NoRepeatFound");
    } catch (const ExtractionError& e) {
        CHECK(e.kind() == ExtractionError::Kind::NoRepeatFound);
    }
    try {
        (void)case1_decompose(path, params, 2);
        FAIL("expected NoRepeatFound");
    } catch (const ExtractionError& e) {
        CHECK(e.kind() == ExtractionError::Kind::NoRepeatFound);
    }
}

TEST_CASE("best-effort decompositions on generated words satisfy the structural checks")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const auto pda = machine(name);
        for (std::size_t size = 1; size <= 12; ++size) {
            for (std::uint64_t variant = 0; variant < 3; ++variant) {
                const auto w = generate(name, size, variant);
                CAPTURE(encode_utf8(w));
                try {
                    const auto e = extract(pda, w, ExtractionMode::BestEffort);
                    check_decomposition(name, e);
                    CHECK(e.diagnostics.chosenCase == e.decomposition.case_tag());
                } catch (const ExtractionError& e) {
                    CHECK(e.kind() == ExtractionError::Kind::NoWitnessFound);
                    CHECK(e.diagnostics().case1Repeats == 0);
                }
            }
        }
    }
}

TEST_CASE("extraction is deterministic")
{
    const auto pda = machine("GEN_PAL");
    const auto w = generate("GEN_PAL", 9, 5);
    const auto a = extract(pda, w, ExtractionMode::BestEffort);
    const auto b = extract(pda, w, ExtractionMode::BestEffort);
    CHECK(a.decomposition == b.decomposition);
    CHECK(a.diagnostics == b.diagnostics);
    CHECK(a.path == b.path);
}
