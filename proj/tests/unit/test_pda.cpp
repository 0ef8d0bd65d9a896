#include <doctest.h>

#include "pumpkit/corpus.hpp"
#include "pumpkit/pda.hpp"

using namespace pumpkit;

namespace {

const std::string kBot(kBottomMarker);

NormalizedPda dyck1() { return NormalizedPda::from_star_form(builtin("DYCK1").pda); }

const NormalizedTransition& find_transition(const NormalizedPda& pda, std::optional<char32_t> input,
                                            std::string_view pop)
{
    for (const auto& t : pda.transitions())
        if (t.input == input && pda.symbol_name(t.pop) == pop)
            return t;
    throw std::logic_error("no such transition");
}

} // namespace

TEST_CASE("utf8 round-trips scalars and rejects malformed input")
{
    const std::string text = "a(⊥␣😀";
    const Word w = decode_utf8(text);
    CHECK(w == U"a(⊥␣😀");
    CHECK(encode_utf8(w) == text);
    CHECK(encode_utf8(U'⊥') == kBot);
    CHECK_THROWS_AS(decode_utf8("\xff"), ParseError);
    CHECK_THROWS_AS(decode_utf8("\xe2\x8a"), ParseError);
    CHECK_THROWS_AS(decode_utf8("\xc0\xaf"), ParseError); // overlong
    CHECK_THROWS_AS(decode_utf8("\xed\xa0\x80"), ParseError); // surrogate
}

TEST_CASE("every builtin machine is well formed")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const auto report = validate(builtin(name).pda);
        CHECK(report.ok());
        CHECK(report.warnings.empty());
    }
}

TEST_CASE("an undeclared state in one transition is one violation")
{
    auto pda = builtin("DYCK1").pda;
    pda.transitions[1].to = "q9";
    const auto report = validate(pda);
    CHECK(report.violations.size() == 1);
    CHECK(report.count(Violation::Kind::UndeclaredState) == 1);
    REQUIRE(report.violations[0].transition);
    CHECK(*report.violations[0].transition == 1);
}

TEST_CASE("a three-symbol push violates (*) form exactly once")
{
    auto pda = builtin("DYCK1").pda;
    pda.transitions.push_back({"q0", U'(', "X", {"X", "X", "X"}, "q0"});
    CHECK(validate(pda, PdaForm::General).ok());
    const auto report = validate(pda, PdaForm::Star);
    CHECK(report.violations.size() == 1);
    CHECK(report.count(Violation::Kind::StarFormViolation) == 1);
    CHECK_THROWS_AS(NormalizedPda::from_star_form(pda), InvalidPda);
}

TEST_CASE("structural violations are all reported")
{
    GeneralPda pda{{"q", "q"}, {U'a'}, {"Z", std::string(kBlankSymbol), ""}, "r", {}, {"s"},
                   {{"q", U'b', "Y", {"W"}, "q"}}};
    const auto report = validate(pda);
    CHECK(report.count(Violation::Kind::DuplicateDeclaration) == 1);
    CHECK(report.count(Violation::Kind::EmptyName) == 1);
    CHECK(report.count(Violation::Kind::BlankInStackAlphabet) == 1);
    CHECK(report.count(Violation::Kind::MissingBottomMarker) == 1);
    CHECK(report.count(Violation::Kind::EmptyInitialStack) == 1);
    CHECK(report.count(Violation::Kind::UndeclaredState) == 2);
    CHECK(report.count(Violation::Kind::UndeclaredInputSymbol) == 1);
    CHECK(report.count(Violation::Kind::UndeclaredStackSymbol) == 2);
}

TEST_CASE("bottom marker must be deepest")
{
    auto pda = builtin("DYCK1").pda;
    pda.initial_stack = {"X", kBot};
    CHECK(validate(pda).count(Violation::Kind::MissingBottomMarker) == 1);
}

TEST_CASE("popping the bottom marker and pushing something else above nothing is linted")
{
    auto pda = builtin("DYCK1").pda;
    pda.transitions.push_back({"q0", U'(', kBot, {"X", "X"}, "q0"});
    const auto report = validate(pda);
    CHECK(report.ok());
    CHECK(report.warnings.size() == 1);
}

TEST_CASE("is_star_form")
{
    CHECK(is_star_form(builtin("DYCK1").pda));
    CHECK(is_star_form(builtin("REG_AB").pda));
    CHECK(is_star_form(builtin("ANBN").pda));
    CHECK_FALSE(is_star_form(builtin("GEN_PAL").pda));
    CHECK_FALSE(is_star_form(builtin("ANBN_GEN").pda));

    auto net0 = builtin("DYCK1").pda;
    net0.transitions.push_back({"q0", U'(', "X", {"X"}, "q0"});
    CHECK_FALSE(is_star_form(net0));

    auto wrongFirst = builtin("DYCK1").pda;
    wrongFirst.stack_alphabet.push_back("Y");
    wrongFirst.stack_alphabet.push_back("Z");
    wrongFirst.transitions.push_back({"q0", U'(', "X", {"Y", "Z"}, "q0"});
    CHECK_FALSE(is_star_form(wrongFirst));
}

TEST_CASE("compiled machine exposes names and indexed transitions")
{
    const auto pda = dyck1();
    CHECK(pda.state_count() == 2);
    CHECK(pda.stack_alphabet_size() == 2);
    CHECK(pda.state_name(pda.initial_state()) == "q0");
    CHECK(pda.symbol_name(SymbolId::blank()) == kBlankSymbol);
    REQUIRE(pda.find_state("qf"));
    CHECK(pda.is_accepting(*pda.find_state("qf")));
    CHECK_FALSE(pda.is_accepting(pda.initial_state()));
    CHECK(pda.has_input_symbol(U'('));
    CHECK_FALSE(pda.has_input_symbol(U'x'));
    CHECK_FALSE(pda.find_symbol(kBlankSymbol));
    for (std::size_t i = 0; i < pda.transitions().size(); ++i)
        CHECK(pda.transitions()[i].index == i);
    const auto bot = *pda.find_symbol(kBot);
    const auto fromBot = pda.transitions_from(pda.initial_state(), bot);
    REQUIRE(fromBot.size() == 2);
    CHECK(fromBot[0] < fromBot[1]);
    CHECK(validate(pda).ok());
    CHECK(pda.describe(pda.transitions()[0]).find("q0") != std::string::npos);
}

TEST_CASE("step applies (*) semantics")
{
    const auto pda = dyck1();
    const auto bot = *pda.find_symbol(kBot);
    const auto x = *pda.find_symbol("X");
    const auto q0 = pda.initial_state();
    const auto qf = *pda.find_state("qf");
    const Word word = U"()";

    SUBCASE("push on '('")
    {
        const auto start = initial_description(pda);
        CHECK(start == InstantaneousDescription{q0, 0, {bot}});
        const auto next = step(pda, start, find_transition(pda, U'(', kBot), word);
        CHECK(next == InstantaneousDescription{q0, 1, {bot, x}});
    }
    SUBCASE("pop-only epsilon to the final state")
    {
        const InstantaneousDescription id{q0, 2, {bot}};
        const auto next = step(pda, id, find_transition(pda, std::nullopt, kBot), word);
        CHECK(next == InstantaneousDescription{qf, 2, {}});
    }
    SUBCASE("wrong top is inapplicable")
    {
        const InstantaneousDescription id{q0, 0, {bot}};
        const auto& needsX = find_transition(pda, U'(', "X");
        CHECK(inapplicability(id, needsX, word));
        CHECK_THROWS_AS(step(pda, id, needsX, word), InapplicableTransition);
    }
    SUBCASE("wrong letter, exhausted input, wrong state and empty stack are inapplicable")
    {
        const auto& open = find_transition(pda, U'(', kBot);
        CHECK(inapplicability({q0, 1, {bot}}, open, word));
        CHECK(inapplicability({q0, 2, {bot}}, open, word));
        CHECK(inapplicability({qf, 0, {bot}}, open, word));
        CHECK(inapplicability({q0, 0, {}}, open, word));
        CHECK_FALSE(inapplicability({q0, 0, {bot}}, open, word));
    }
}
