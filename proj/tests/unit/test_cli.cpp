#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "pumpkit/corpus.hpp"
#include "pumpkit/pda_json.hpp"
#include "pumpkit/report.hpp"

using namespace pumpkit;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir()
{
    auto dir = std::filesystem::temp_directory_path() / "pumpkit-cli-test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content)
{
    const auto path = temp_dir() / name;
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
}

std::string corpus_file(const std::string& name)
{
    return (std::filesystem::path(PUMPKIT_SOURCE_DIR) / "corpus" / name).string();
}

} // namespace

TEST_CASE("params")
{
    auto r = run({"params", corpus_file("dyck1.json")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("p'=8 p=13122\n", 0) == 0);
    CHECK(r.out.find("normalized: no") != std::string::npos);

    r = run({"params", "builtin:REG_AB"});
    CHECK(r.out.rfind("p'=4 p=32\n", 0) == 0);

    r = run({"params", "builtin:GEN_PAL"});
    CHECK(r.code == 0);
    CHECK(r.out.find("normalized: yes") != std::string::npos);

    CHECK(run({"params", write_file("bad.json", "{ not json")}).code == 2);
    CHECK(run({"params", "/no/such/file.json"}).code == 2);
    CHECK(run({"params", "builtin:NOPE"}).code == 1);
}

TEST_CASE("invalid machines exit 2 with diagnostics")
{
    auto doc = parse_pda_document(serialize_pda_document(
        {std::string(kPdaFormatVersion), builtin("DYCK1").pda, std::nullopt, std::nullopt}));
    doc.pda.transitions[0].to = "q9";
    const auto r = run({"params", write_file("invalid.json", serialize_pda_document(doc))});
    CHECK(r.code == 2);
    CHECK(r.err.find("q9") != std::string::npos);
}

TEST_CASE("normalize writes a (*)-form document deterministically")
{
    const auto out = (temp_dir() / "gen_pal_star.json").string();
    CHECK(run({"normalize", corpus_file("gen_pal.json"), out}).code == 0);
    const auto doc = load_pda_file(out);
    CHECK(is_star_form(doc.pda));
    CHECK(run({"normalize", corpus_file("gen_pal.json")}).out == serialize_pda_document(doc));

    const auto same = run({"normalize", corpus_file("dyck1.json")});
    CHECK(parse_pda_document(same.out).pda == builtin("DYCK1").pda);

    // Normalizing twice is a fixed point.
    CHECK(run({"normalize", out}).out == serialize_pda_document(doc));
}

TEST_CASE("check exit codes")
{
    CHECK(run({"check", "builtin:DYCK1", "(())"}).code == 0);
    CHECK(run({"check", "builtin:DYCK1", "(()"}).code == 1);
    CHECK(run({"check", "builtin:DYCK1", "(x)"}).code == 2);
    CHECK(run({"check", "builtin:DYCK1", "(((())))", "--max-steps", "3"}).code == 3);
    CHECK(run({"check", "builtin:DYCK1", "(())", "--max-steps", "0"}).code == 2);

    const auto words = write_file("words.txt", "()\n(()\n\n(())()\n");
    auto r = run({"check", "builtin:DYCK1", "--word-file", words});
    CHECK(r.code == 1);
    CHECK(r.out == "\"()\" Accepted\n\"(()\" NotAccepted\n\"\" Accepted\n\"(())()\" Accepted\n");
    const auto good = write_file("good.txt", "()\n(())\n");
    CHECK(run({"check", "builtin:DYCK1", "--word-file", good}).code == 0);
    CHECK(run({"check", "builtin:DYCK1", "--word-file", good, "--max-steps", "2"}).code == 3);
}

TEST_CASE("pump exit codes and reports")
{
    auto r = run({"pump", "builtin:DYCK1", "(((())))"});
    CHECK(r.code == 0);
    const auto report = report_from_json(r.out);
    CHECK(report.decomposition.u == U"(");
    CHECK(report.verification.overall);

    r = run({"pump", "builtin:DYCK1", "(((())))", "--report", "text", "--n", "0,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=2 replay=Accepted search=Accepted") != std::string::npos);
    CHECK(r.out.find("n=3") == std::string::npos);

    CHECK(run({"pump", "builtin:DYCK1", "(()"}).code == 1);
    CHECK(run({"pump", "builtin:DYCK1", "(())", "--mode", "strict"}).code == 2);
    CHECK(run({"pump", "builtin:ANBN", "aabb"}).code == 4);
    CHECK(run({"pump", "builtin:DYCK1", "(((())))", "--max-steps", "4"}).code == 3);
    CHECK(run({"pump", "builtin:DYCK1", "(((())))", "--mode", "sideways"}).code == 2);

    CHECK(run({"pump", "builtin:REG_AB", "abxb"}).code == 2);

    // Case 1 with x = rest overshoots |vxy| <= p: reported, exit 1.
    std::string ab;
    for (int i = 0; i < 17; ++i)
        ab += "ab";
    r = run({"pump", "builtin:REG_AB", ab, "--mode", "strict"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["verification"]["lengthBoundOk"] == false);

    r = run({"pump", "builtin:ANBN", "aabb"});
    CHECK(nlohmann::json::parse(r.out)["error"] == "NoWitnessFound");
}

TEST_CASE("profile renders ASCII and SVG")
{
    auto r = run({"profile", "builtin:DYCK1", "(((())))", "--annotate"});
    CHECK(r.code == 0);
    CHECK(r.out.find("  cuts\n") != std::string::npos);

    const auto svg = (temp_dir() / "p.svg").string();
    r = run({"profile", "builtin:DYCK1", "(((())))", "--render", "svg", "--out", svg});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(svg);
    std::string first;
    std::getline(in, first);
    CHECK(first.rfind("<?xml", 0) == 0);

    CHECK(run({"profile", "builtin:DYCK1", "(()"}).code == 1);
    CHECK(run({"profile", "builtin:ANBN", "aabb", "--annotate"}).code == 4);
    CHECK(run({"profile", "builtin:ANBN", "aabb"}).code == 0);
}

TEST_CASE("usage errors and help")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"pump", "builtin:DYCK1"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("pump") != std::string::npos);
}

TEST_CASE("corpus listing and export")
{
    auto r = run({"corpus"});
    CHECK(r.code == 0);
    CHECK(r.out.find("DYCK1: balanced parentheses") != std::string::npos);

    const auto dir = temp_dir() / "export";
    std::filesystem::create_directories(dir);
    CHECK(run({"corpus", "--export", dir.string()}).code == 0);
    for (const auto& name : {"dyck1", "reg_ab", "anbn", "gen_pal", "anbn_gen"}) {
        std::ifstream a(dir / (std::string(name) + ".json")), b(corpus_file(std::string(name) + ".json"));
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        CHECK(sa.str() == sb.str());
    }
}
