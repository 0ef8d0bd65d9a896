#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pumpkit/chart.hpp"
#include "pumpkit/corpus.hpp"
#include "pumpkit/normalizer.hpp"
#include "pumpkit/pda_json.hpp"
#include "pumpkit/report.hpp"
#include "pumpkit/verifier.hpp"

namespace pumpkit::cli {

namespace {

/// Thrown to leave a subcommand with a specific exit code.
struct Exit {
    int code;
};

struct LoadedPda {
    PdaDocument document;
    NormalizedPda machine;
    bool changed; ///< normalization rewrote the machine
};

PdaDocument read_document(const std::string& source)
{
    constexpr std::string_view kBuiltin = "builtin:";
    if (source.rfind(kBuiltin, 0) == 0) {
        const auto entry = builtin(source.substr(kBuiltin.size()));
        return {std::string(kPdaFormatVersion), entry.pda, entry.name, entry.description};
    }
    return load_pda_file(source);
}

LoadedPda load(const std::string& source, std::ostream& err)
{
    auto doc = read_document(source);
    const auto report = validate(doc.pda);
    for (const auto& w : report.warnings)
        err << "warning: " << w << "\n";
    if (!report.ok())
        throw InvalidPda(report);
    const bool star = is_star_form(doc.pda);
    auto machine = star ? NormalizedPda::from_star_form(doc.pda) : normalize(doc.pda);
    return {std::move(doc), std::move(machine), !star};
}

Word read_word(const NormalizedPda& pda, const std::string& text)
{
    auto word = decode_utf8(text);
    for (std::size_t i = 0; i < word.size(); ++i)
        if (!pda.has_input_symbol(word[i]))
            throw ParseError("symbol '" + encode_utf8(word[i]) + "' at position " + std::to_string(i) +
                             " is not in the input alphabet");
    return word;
}

SearchLimits limits_for(std::size_t wordLength, const NormalizedPda& pda, std::optional<std::size_t> maxSteps,
                        std::optional<std::size_t> maxHeight)
{
    const auto params = saturating_pumping_params(pda);
    auto limits = SearchLimits::defaults(wordLength, params.pSaturated ? std::nullopt : std::optional(params.p));
    if (maxSteps)
        limits.maxSteps = *maxSteps;
    if (maxHeight)
        limits.maxStackHeight = *maxHeight;
    if (limits.maxSteps == 0 || limits.maxStackHeight == 0)
        throw ParseError("search limits must be at least 1");
    return limits;
}

ExtractionMode parse_mode(const std::string& mode)
{
    return mode == "strict" ? ExtractionMode::Strict : ExtractionMode::BestEffort;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw ParseError("cannot write '" + path + "'");
    file << content;
}

int exit_code_for(ExtractionError::Kind kind)
{
    switch (kind) {
    case ExtractionError::Kind::NotAccepted: return kRejected;
    case ExtractionError::Kind::StrictPreconditionViolated: return kUsage;
    case ExtractionError::Kind::LimitExceeded: return kLimits;
    case ExtractionError::Kind::NoWitnessFound: return kNoWitness;
    case ExtractionError::Kind::NoRepeatFound:
    case ExtractionError::Kind::MinimalityViolation: return kRejected;
    }
    return kRejected;
}

struct SearchOptions {
    std::optional<std::size_t> maxSteps;
    std::optional<std::size_t> maxHeight;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--max-steps", maxSteps, "Bound on path length explored");
        cmd->add_option("--max-height", maxHeight, "Bound on stack height explored");
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"pumpkit: pushdown automata and pumping decompositions", "pumpkit"};
    app.require_subcommand(1);

    // params
    std::string paramsPda;
    auto* params = app.add_subcommand("params", "Print pumping parameters of the normalized machine");
    params->add_option("pda", paramsPda, "PDA file or builtin:NAME")->required();

    // normalize
    std::string normIn, normOut;
    auto* normalizeCmd = app.add_subcommand("normalize", "Rewrite a PDA into (*) form");
    normalizeCmd->add_option("input", normIn, "PDA file or builtin:NAME")->required();
    normalizeCmd->add_option("output", normOut, "Output file (default: standard output)");

    // check
    std::string checkPda, checkWord, checkWordFile;
    SearchOptions checkLimits;
    auto* check = app.add_subcommand("check", "Decide membership of a word");
    check->add_option("pda", checkPda, "PDA file or builtin:NAME")->required();
    auto* checkWordOpt = check->add_option("word", checkWord, "Word (UTF-8, one symbol per scalar)");
    check->add_option("--word-file", checkWordFile, "File with one word per line")->excludes(checkWordOpt);
    checkLimits.attach(check);

    // pump
    std::string pumpPda, pumpWord, pumpMode = "best-effort", pumpFormat = "json";
    std::vector<std::size_t> pumpCounts(std::begin(kDefaultPumpCounts), std::end(kDefaultPumpCounts));
    SearchOptions pumpLimits;
    auto* pump = app.add_subcommand("pump", "Extract and verify a pumping decomposition");
    pump->add_option("pda", pumpPda, "PDA file or builtin:NAME")->required();
    pump->add_option("word", pumpWord, "Word to decompose")->required();
    pump->add_option("--mode", pumpMode)->check(CLI::IsMember({"strict", "best-effort"}));
    pump->add_option("--n", pumpCounts, "Pump counts to verify")->delimiter(',');
    pump->add_option("--report", pumpFormat)->check(CLI::IsMember({"json", "text"}));
    pumpLimits.attach(pump);

    // profile
    std::string profPda, profWord, profRender = "ascii", profMode = "best-effort", profOut;
    bool profAnnotate = false;
    SearchOptions profLimits;
    auto* profile = app.add_subcommand("profile", "Chart the stack profile of the minimal accepting path");
    profile->add_option("pda", profPda, "PDA file or builtin:NAME")->required();
    profile->add_option("word", profWord, "Word")->required();
    profile->add_option("--render", profRender)->check(CLI::IsMember({"ascii", "svg"}));
    profile->add_flag("--annotate", profAnnotate, "Mark the level triple, cuts and u/v/x/y/z spans");
    profile->add_option("--mode", profMode)->check(CLI::IsMember({"strict", "best-effort"}));
    profile->add_option("--out", profOut, "Output file (default: standard output)");
    profLimits.attach(profile);

    // corpus
    std::string corpusDir;
    auto* corpus = app.add_subcommand("corpus", "List built-in machines, or export them as PDA files");
    corpus->add_option("--export", corpusDir, "Directory to write <name>.json files into");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*params) {
            const auto pda = load(paramsPda, err);
            const auto p = saturating_pumping_params(pda.machine);
            out << "p'=" << p.pPrime << " p=";
            if (p.pSaturated)
                out << "overflow (exceeds 2^64-1)";
            else
                out << p.p;
            out << "\n"
                << "|A|=" << p.stateCount << " |Γ|=" << p.stackAlphabetSize << "\n"
                << "normalized: " << (pda.changed ? "yes (machine rewritten)" : "no (already in (*) form)") << "\n";
            return kSuccess;
        }

        if (*normalizeCmd) {
            const auto pda = load(normIn, err);
            PdaDocument doc = pda.document;
            doc.pda = pda.machine.description();
            write_output(normOut, serialize_pda_document(doc), out);
            return kSuccess;
        }

        if (*check) {
            const auto pda = load(checkPda, err);
            std::vector<std::string> words;
            if (!checkWordFile.empty()) {
                std::ifstream in(checkWordFile);
                if (!in)
                    throw ParseError("cannot open '" + checkWordFile + "'");
                for (std::string line; std::getline(in, line);) {
                    if (!line.empty() && line.back() == '\r')
                        line.pop_back();
                    words.push_back(line);
                }
            } else {
                words.push_back(checkWord);
            }
            bool anyRejected = false, anyLimited = false;
            for (const auto& text : words) {
                const auto word = read_word(pda.machine, text);
                const auto verdict = accepts(pda.machine, word,
                                             limits_for(word.size(), pda.machine, checkLimits.maxSteps,
                                                        checkLimits.maxHeight));
                anyRejected = anyRejected || verdict == Verdict::NotAccepted;
                anyLimited = anyLimited || verdict == Verdict::LimitExceeded;
                if (words.size() > 1)
                    out << "\"" << text << "\" ";
                out << to_string(verdict) << "\n";
            }
            return anyLimited ? kLimits : anyRejected ? kRejected : kSuccess;
        }

        if (*pump) {
            const auto pda = load(pumpPda, err);
            const auto word = read_word(pda.machine, pumpWord);
            const auto mode = parse_mode(pumpMode);
            std::optional<SearchLimits> limits;
            if (pumpLimits.maxSteps || pumpLimits.maxHeight)
                limits = limits_for(word.size(), pda.machine, pumpLimits.maxSteps, pumpLimits.maxHeight);
            try {
                auto extraction = extract(pda.machine, word, mode, limits);
                PumpReport report{word, mode, extraction.decomposition, extraction.diagnostics, {}};
                report.verification = verify(pda.machine, extraction.path, extraction.decomposition, pumpCounts, limits);
                out << (pumpFormat == "json" ? report_to_json(report) : report_to_text(report));
                return report.verification.overall ? kSuccess : kRejected;
            } catch (const ExtractionError& e) {
                if (pumpFormat == "json")
                    out << failure_to_json(e);
                err << "error: " << e.what() << "\n";
                return exit_code_for(e.kind());
            }
        }

        if (*profile) {
            const auto pda = load(profPda, err);
            const auto word = read_word(pda.machine, profWord);
            const auto limits = limits_for(word.size(), pda.machine, profLimits.maxSteps, profLimits.maxHeight);
            std::string chart;
            if (profAnnotate) {
                try {
                    const auto extraction = extract(pda.machine, word, parse_mode(profMode), limits);
                    chart = profRender == "svg" ? render_svg(extraction.path, &extraction)
                                                : render_ascii(extraction.path, &extraction);
                } catch (const ExtractionError& e) {
                    err << "error: " << e.what() << "\n";
                    return exit_code_for(e.kind());
                }
            } else {
                auto outcome = minimal_accepting_path(pda.machine, word, limits);
                if (std::holds_alternative<NotAccepted>(outcome)) {
                    err << "error: the word is not accepted\n";
                    return kRejected;
                }
                if (const auto* lim = std::get_if<LimitExceeded>(&outcome)) {
                    err << "error: path search hit " << to_string(lim->which) << "\n";
                    return kLimits;
                }
                const auto& path = std::get<RunPath>(outcome);
                chart = profRender == "svg" ? render_svg(path) : render_ascii(path);
            }
            write_output(profOut, chart, out);
            return kSuccess;
        }

        if (*corpus) {
            for (const auto& name : builtin_names()) {
                const auto entry = builtin(name);
                if (corpusDir.empty()) {
                    out << name << ": " << entry.description << " [" << entry.notes << "]\n";
                    continue;
                }
                std::string file = name;
                std::transform(file.begin(), file.end(), file.begin(), [](unsigned char c) { return std::tolower(c); });
                write_output(corpusDir + "/" + file + ".json",
                             serialize_pda_document({std::string(kPdaFormatVersion), entry.pda, entry.name,
                                                     entry.description}),
                             out);
            }
            return kSuccess;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidPda& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParamsOverflow& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kRejected;
    }
    return kUsage;
}

} // namespace pumpkit::cli
