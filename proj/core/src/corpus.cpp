#include "pumpkit/corpus.hpp"

#include <algorithm>
#include <random>

namespace pumpkit {

namespace {

const std::string kBot(kBottomMarker);

GeneralPda dyck1()
{
    return {
        {"q0", "qf"},
        {U'(', U')'},
        {kBot, "X"},
        "q0",
        {kBot},
        {"qf"},
        {
            {"q0", U'(', kBot, {kBot, "X"}, "q0"},
            {"q0", U'(', "X", {"X", "X"}, "q0"},
            {"q0", U')', "X", {}, "q0"},
            {"q0", std::nullopt, kBot, {}, "qf"},
        },
    };
}

GeneralPda reg_ab()
{
    return {
        {"q0", "q1"},
        {U'a', U'b'},
        {kBot},
        "q0",
        {kBot},
        {"q0"},
        {
            {"q0", U'a', kBot, {kBot, kBot}, "q1"},
            {"q1", U'b', kBot, {}, "q0"},
        },
    };
}

GeneralPda anbn()
{
    return {
        {"q0", "q1", "qf"},
        {U'a', U'b'},
        {kBot, "A"},
        "q0",
        {kBot},
        {"qf"},
        {
            {"q0", U'a', kBot, {kBot, "A"}, "q0"},
            {"q0", U'a', "A", {"A", "A"}, "q0"},
            {"q0", U'b', "A", {}, "q1"},
            {"q1", U'b', "A", {}, "q1"},
            {"q1", std::nullopt, kBot, {}, "qf"},
        },
    };
}

// Each a pushes two A's; each b removes two, the second b onwards by
// rewriting the top A into C and popping it.
GeneralPda anbn_general()
{
    return {
        {"q0", "q1", "q2", "q3", "qf"},
        {U'a', U'b'},
        {kBot, "A", "C"},
        "q0",
        {kBot},
        {"qf"},
        {
            {"q0", U'a', kBot, {kBot, "A", "A"}, "q0"},
            {"q0", U'a', "A", {"A", "A", "A"}, "q0"},
            {"q0", U'b', "A", {}, "q1"},
            {"q1", std::nullopt, "A", {}, "q2"},
            {"q2", U'b', "A", {"C"}, "q3"},
            {"q3", std::nullopt, "C", {}, "q1"},
            {"q2", std::nullopt, kBot, {kBot}, "qf"},
        },
    };
}

// Push the first half, guess the middle with a stack-neutral move, match the
// second half.
GeneralPda gen_pal()
{
    GeneralPda pda{
        {"q0", "q1", "qf"}, {U'a', U'b'}, {kBot, "A", "B"}, "q0", {kBot}, {"qf"}, {},
    };
    for (const std::string& z : {kBot, std::string("A"), std::string("B")}) {
        pda.transitions.push_back({"q0", U'a', z, {z, "A"}, "q0"});
        pda.transitions.push_back({"q0", U'b', z, {z, "B"}, "q0"});
    }
    for (const std::string& z : {kBot, std::string("A"), std::string("B")})
        pda.transitions.push_back({"q0", std::nullopt, z, {z}, "q1"});
    pda.transitions.push_back({"q1", U'a', "A", {}, "q1"});
    pda.transitions.push_back({"q1", U'b', "B", {}, "q1"});
    pda.transitions.push_back({"q1", std::nullopt, kBot, {kBot}, "qf"});
    return pda;
}

Word repeat(std::u32string_view piece, std::size_t times)
{
    Word out;
    for (std::size_t i = 0; i < times; ++i)
        out += piece;
    return out;
}

/// Uniformly shuffled sequence of m '(' and m ')' rotated into a Dyck word
/// (cycle lemma on m+1 openers, dropping the leading one).
Word random_dyck(std::size_t m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<int> steps(m + 1, 1);
    steps.insert(steps.end(), m, -1);
    std::shuffle(steps.begin(), steps.end(), rng);
    // Rotate to start after the last position reaching the minimum prefix sum.
    long sum = 0, best = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        sum += steps[i];
        if (sum <= best) {
            best = sum;
            start = i + 1;
        }
    }
    std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(start % steps.size()), steps.end());
    Word out;
    for (std::size_t i = 1; i < steps.size(); ++i)
        out.push_back(steps[i] > 0 ? U'(' : U')');
    return out;
}

Word palindrome(std::size_t half, std::uint64_t variant)
{
    Word first;
    if (variant == 0) {
        for (std::size_t i = 0; i < half; ++i)
            first.push_back(((i * i + i / 2) % 3 == 0) ? U'a' : U'b');
    } else {
        std::mt19937_64 rng(variant);
        for (std::size_t i = 0; i < half; ++i)
            first.push_back((rng() & 1U) ? U'a' : U'b');
    }
    Word out = first;
    out.append(first.rbegin(), first.rend());
    return out;
}

} // namespace

std::vector<std::string> builtin_names() { return {"DYCK1", "REG_AB", "ANBN", "GEN_PAL", "ANBN_GEN"}; }

CorpusEntry builtin(std::string_view name)
{
    if (name == "DYCK1")
        return {"DYCK1", "balanced parentheses", dyck1(), "(*)-form; |A|=2, |Γ|=2; p'=8, p=13122"};
    if (name == "REG_AB")
        return {"REG_AB", "(ab)*", reg_ab(), "(*)-form; |A|=2, |Γ|=1; p'=4, p=32"};
    if (name == "ANBN")
        return {"ANBN", "a^n b^n, n >= 1", anbn(), "(*)-form; |A|=3, |Γ|=2; p'=18, p=1162261467"};
    if (name == "GEN_PAL")
        return {"GEN_PAL", "even-length palindromes over {a,b}", gen_pal(),
                "general form; normalized machine has p overflowing 64 bits"};
    if (name == "ANBN_GEN")
        return {"ANBN_GEN", "a^n b^n, n >= 1, with multi-symbol pushes", anbn_general(),
                "general form; normalized machine has p overflowing 64 bits"};
    throw Error("unknown corpus entry '" + std::string(name) + "'");
}

Word generate(std::string_view name, std::size_t size, std::uint64_t variant)
{
    if (name == "DYCK1")
        return variant == 0 ? repeat(U"(", size) + repeat(U")", size) : random_dyck(size, variant);
    if (name == "REG_AB")
        return repeat(U"ab", size);
    if (name == "ANBN" || name == "ANBN_GEN") {
        if (size == 0)
            throw Error("a^n b^n needs n >= 1");
        return repeat(U"a", size) + repeat(U"b", size);
    }
    if (name == "GEN_PAL")
        return palindrome(size, variant);
    throw Error("unknown corpus entry '" + std::string(name) + "'");
}

Word generate_near_miss(std::string_view name, std::size_t size)
{
    if (size == 0)
        throw Error("near misses need size >= 1");
    if (name == "DYCK1")
        return repeat(U"(", size) + repeat(U")", size - 1);
    if (name == "REG_AB")
        return repeat(U"ab", size) + U"a";
    if (name == "ANBN" || name == "ANBN_GEN")
        return repeat(U"a", size) + repeat(U"b", size - 1);
    if (name == "GEN_PAL") {
        Word w = palindrome(size, 0);
        w.back() = w.back() == U'a' ? U'b' : U'a';
        return w;
    }
    throw Error("unknown corpus entry '" + std::string(name) + "'");
}

} // namespace pumpkit
