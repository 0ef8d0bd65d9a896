#include "pumpkit/report.hpp"

#include <sstream>

#include <json.hpp>

namespace pumpkit {

using Json = nlohmann::ordered_json;

namespace {

// ---- writers --------------------------------------------------------------

Json triple_json(const LevelTriple& t) { return {{"i", t.i}, {"j", t.j}, {"k", t.k}, {"n", t.n}}; }

Json level_json(const LevelResult& r)
{
    return {{"level", r.level}, {"witness", r.witness ? triple_json(*r.witness) : Json(nullptr)}};
}

Json params_json(const PumpingParams& p)
{
    return {{"pPrime", p.pPrime},
            {"p", p.p},
            {"stateCount", p.stateCount},
            {"stackAlphabetSize", p.stackAlphabetSize},
            {"pSaturated", p.pSaturated}};
}

Json witness_json(const Decomposition& d)
{
    if (const auto* c1 = std::get_if<Case1Witness>(&d.witness))
        return {{"i", c1->i}, {"j", c1->j}, {"depth", c1->depth}};
    const auto& c2 = std::get<Case2Witness>(d.witness);
    return {{"triple", triple_json(c2.triple)}, {"g", c2.g},       {"h", c2.h},      {"lpG", c2.lpG},
            {"lpH", c2.lpH},                    {"fpH", c2.fpH},   {"fpG", c2.fpG}};
}

Json decomposition_json(const Decomposition& d)
{
    return {{"u", encode_utf8(d.u)},
            {"v", encode_utf8(d.v)},
            {"x", encode_utf8(d.x)},
            {"y", encode_utf8(d.y)},
            {"z", encode_utf8(d.z)},
            {"caseTag", to_string(d.case_tag())},
            {"witnesses", witness_json(d)},
            {"params", params_json(d.params)}};
}

Json diagnostics_json(const Diagnostics& g)
{
    return {{"mode", to_string(g.mode)},
            {"wordLength", g.wordLength},
            {"pathLength", g.pathLength},
            {"windowEnd", g.windowEnd},
            {"level", level_json(g.level)},
            {"wholePathLevel", level_json(g.wholePathLevel)},
            {"case2Threshold", g.case2Threshold},
            {"case2Triple", g.case2Triple ? triple_json(*g.case2Triple) : Json(nullptr)},
            {"configurationDepth", g.configurationDepth},
            {"case1Repeats", g.case1Repeats},
            {"case2Repeats", g.case2Repeats},
            {"chosenCase", g.chosenCase ? Json(to_string(*g.chosenCase)) : Json(nullptr)},
            {"notes", g.notes},
            {"profile", g.profile}};
}

Json verification_json(const VerificationReport& v)
{
    Json perN = Json::array();
    for (const auto& c : v.perN) {
        Json e{{"n", c.n}, {"replay", to_string(c.replay)}, {"search", to_string(c.search)}};
        if (c.replayError)
            e["replayError"] = {{"index", c.replayError->index}, {"reason", to_string(c.replayError->reason)}};
        perN.push_back(std::move(e));
    }
    const auto& k = v.constraints;
    return {{"concatenationOk", k.concatenationOk},
            {"lengthBoundOk", k.lengthBoundOk},
            {"nonTrivialOk", k.nonTrivialOk},
            {"vxyLength", k.vxyLength},
            {"bound", k.bound},
            {"perN", perN},
            {"verdictsAgree", v.verdictsAgree},
            {"overall", v.overall}};
}

// ---- readers --------------------------------------------------------------

const Json& at(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("report is missing '") + key + "'");
    return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key)
{
    try {
        return at(j, key).get<T>();
    } catch (const Json::type_error&) {
        throw ParseError(std::string("report field '") + key + "' has the wrong type");
    }
}

Word word_at(const Json& j, const char* key) { return decode_utf8(get<std::string>(j, key)); }

LevelTriple triple_from(const Json& j)
{
    return {get<std::size_t>(j, "i"), get<std::size_t>(j, "j"), get<std::size_t>(j, "k"), get<std::size_t>(j, "n")};
}

std::optional<LevelTriple> optional_triple(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    return triple_from(j);
}

LevelResult level_from(const Json& j) { return {get<std::size_t>(j, "level"), optional_triple(at(j, "witness"))}; }

PumpingParams params_from(const Json& j)
{
    return {get<std::uint64_t>(j, "pPrime"), get<std::uint64_t>(j, "p"), get<std::uint64_t>(j, "stateCount"),
            get<std::uint64_t>(j, "stackAlphabetSize"), get<bool>(j, "pSaturated")};
}

CaseTag case_from(const std::string& s)
{
    if (s == "Case1")
        return CaseTag::Case1;
    if (s == "Case2")
        return CaseTag::Case2;
    throw ParseError("unknown case tag '" + s + "'");
}

ExtractionMode mode_from(const std::string& s)
{
    if (s == "strict")
        return ExtractionMode::Strict;
    if (s == "best-effort")
        return ExtractionMode::BestEffort;
    throw ParseError("unknown mode '" + s + "'");
}

Verdict verdict_from(const std::string& s)
{
    for (auto v : {Verdict::Accepted, Verdict::NotAccepted, Verdict::LimitExceeded})
        if (to_string(v) == s)
            return v;
    throw ParseError("unknown verdict '" + s + "'");
}

ReplayError::Reason reason_from(const std::string& s)
{
    using R = ReplayError::Reason;
    for (auto r : {R::Inapplicable, R::InputMismatch, R::NotAccepting, R::InputRemaining})
        if (to_string(r) == s)
            return r;
    throw ParseError("unknown replay failure '" + s + "'");
}

Decomposition decomposition_from(const Json& j)
{
    Decomposition d;
    d.u = word_at(j, "u");
    d.v = word_at(j, "v");
    d.x = word_at(j, "x");
    d.y = word_at(j, "y");
    d.z = word_at(j, "z");
    d.params = params_from(at(j, "params"));
    const auto& w = at(j, "witnesses");
    if (case_from(get<std::string>(j, "caseTag")) == CaseTag::Case1) {
        d.witness = Case1Witness{get<std::size_t>(w, "i"), get<std::size_t>(w, "j"), get<std::size_t>(w, "depth")};
    } else {
        d.witness = Case2Witness{triple_from(at(w, "triple")), get<std::size_t>(w, "g"),   get<std::size_t>(w, "h"),
                                 get<std::size_t>(w, "lpG"),  get<std::size_t>(w, "lpH"), get<std::size_t>(w, "fpH"),
                                 get<std::size_t>(w, "fpG")};
    }
    return d;
}

Diagnostics diagnostics_from(const Json& j)
{
    Diagnostics g;
    g.mode = mode_from(get<std::string>(j, "mode"));
    g.wordLength = get<std::size_t>(j, "wordLength");
    g.pathLength = get<std::size_t>(j, "pathLength");
    g.windowEnd = get<std::size_t>(j, "windowEnd");
    g.level = level_from(at(j, "level"));
    g.wholePathLevel = level_from(at(j, "wholePathLevel"));
    g.case2Threshold = get<std::size_t>(j, "case2Threshold");
    g.case2Triple = optional_triple(at(j, "case2Triple"));
    g.configurationDepth = get<std::size_t>(j, "configurationDepth");
    g.case1Repeats = get<std::size_t>(j, "case1Repeats");
    g.case2Repeats = get<std::size_t>(j, "case2Repeats");
    if (const auto& c = at(j, "chosenCase"); !c.is_null())
        g.chosenCase = case_from(c.get<std::string>());
    g.notes = get<std::vector<std::string>>(j, "notes");
    g.profile = get<std::vector<std::size_t>>(j, "profile");
    return g;
}

VerificationReport verification_from(const Json& j)
{
    VerificationReport v;
    v.constraints = {get<bool>(j, "concatenationOk"), get<bool>(j, "lengthBoundOk"), get<bool>(j, "nonTrivialOk"),
                     get<std::size_t>(j, "vxyLength"), get<std::uint64_t>(j, "bound")};
    for (const auto& e : at(j, "perN")) {
        PumpCheck c;
        c.n = get<std::size_t>(e, "n");
        c.replay = verdict_from(get<std::string>(e, "replay"));
        c.search = verdict_from(get<std::string>(e, "search"));
        if (e.contains("replayError")) {
            const auto& r = e.at("replayError");
            c.replayError = ReplayError{get<std::size_t>(r, "index"), reason_from(get<std::string>(r, "reason"))};
        }
        v.perN.push_back(c);
    }
    v.verdictsAgree = get<bool>(j, "verdictsAgree");
    v.overall = get<bool>(j, "overall");
    return v;
}

} // namespace

std::string report_to_json(const PumpReport& r)
{
    Json root{{"version", kReportFormatVersion},
              {"word", encode_utf8(r.word)},
              {"mode", to_string(r.mode)},
              {"decomposition", decomposition_json(r.decomposition)},
              {"verification", verification_json(r.verification)},
              {"diagnostics", diagnostics_json(r.diagnostics)}};
    return root.dump(2) + "\n";
}

PumpReport report_from_json(std::string_view text)
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed report JSON: ") + e.what());
    }
    if (get<std::string>(root, "version") != kReportFormatVersion)
        throw ParseError("unsupported report version");
    PumpReport r;
    r.word = word_at(root, "word");
    r.mode = mode_from(get<std::string>(root, "mode"));
    r.decomposition = decomposition_from(at(root, "decomposition"));
    r.verification = verification_from(at(root, "verification"));
    r.diagnostics = diagnostics_from(at(root, "diagnostics"));
    return r;
}

std::string report_to_text(const PumpReport& r)
{
    const auto& d = r.decomposition;
    const auto& k = r.verification.constraints;
    std::ostringstream os;
    auto quoted = [](const Word& w) {
        constexpr std::size_t kMax = 60;
        if (w.size() <= kMax)
            return "\"" + encode_utf8(w) + "\"";
        return "\"" + encode_utf8(w.substr(0, kMax)) + "…\" (" + std::to_string(w.size()) + " letters)";
    };
    os << "mode: " << to_string(r.mode) << "\n";
    os << "word length: " << r.word.size() << ", path length: " << r.diagnostics.pathLength << "\n";
    os << "params: p'=" << d.params.pPrime << " p=" << (d.params.pSaturated ? std::string(">2^64")
                                                                             : std::to_string(d.params.p))
       << " |A|=" << d.params.stateCount << " |Γ|=" << d.params.stackAlphabetSize << "\n";
    os << "level: " << r.diagnostics.level.level << " (window k <= " << r.diagnostics.windowEnd << ")\n";
    os << to_string(d.case_tag()) << ": ";
    if (const auto* c1 = std::get_if<Case1Witness>(&d.witness)) {
        os << "configuration repeat at positions (" << c1->i << ", " << c1->j << "), depth " << c1->depth << "\n";
    } else {
        const auto& c2 = std::get<Case2Witness>(d.witness);
        os << "triple (" << c2.triple.i << ", " << c2.triple.j << ", " << c2.triple.k << ") n=" << c2.triple.n
           << ", heights (g,h)=(" << c2.g << ", " << c2.h << "), lp(g)=" << c2.lpG << " lp(h)=" << c2.lpH
           << " fp(h)=" << c2.fpH << " fp(g)=" << c2.fpG << "\n";
    }
    os << "u=" << quoted(d.u) << " v=" << quoted(d.v) << " x=" << quoted(d.x) << " y=" << quoted(d.y)
       << " z=" << quoted(d.z) << "\n";
    os << "concatenation " << (k.concatenationOk ? "ok" : "FAILED") << ", |vy| >= 1 "
       << (k.nonTrivialOk ? "ok" : "FAILED") << ", |vxy| = " << k.vxyLength << " <= p "
       << (k.lengthBoundOk ? "ok" : "FAILED") << "\n";
    for (const auto& c : r.verification.perN)
        os << "  n=" << c.n << " replay=" << to_string(c.replay) << " search=" << to_string(c.search) << "\n";
    for (const auto& note : r.diagnostics.notes)
        os << "note: " << note << "\n";
    os << "overall: " << (r.verification.overall ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string failure_to_json(const ExtractionError& error)
{
    Json root{{"version", kReportFormatVersion},
              {"error", to_string(error.kind())},
              {"message", error.what()},
              {"diagnostics", diagnostics_json(error.diagnostics())}};
    return root.dump(2) + "\n";
}

} // namespace pumpkit
