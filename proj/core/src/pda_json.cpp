#include "pumpkit/pda_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pumpkit {

using Json = nlohmann::ordered_json;

namespace {

const Json& field(const Json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::string as_string(const Json& j, const std::string& what)
{
    if (!j.is_string())
        throw ParseError(what + " must be a string");
    return j.get<std::string>();
}

std::vector<std::string> as_strings(const Json& j, const std::string& what)
{
    if (!j.is_array())
        throw ParseError(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : j)
        out.push_back(as_string(item, what + " entry"));
    return out;
}

char32_t as_symbol(const Json& j, const std::string& what)
{
    const auto decoded = decode_utf8(as_string(j, what));
    if (decoded.size() != 1)
        throw ParseError(what + " must be exactly one Unicode scalar");
    return decoded.front();
}

} // namespace

PdaDocument parse_pda_document(std::string_view text)
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ParseError("PDA document must be a JSON object");

    PdaDocument doc;
    doc.version = as_string(field(root, "version"), "version");
    if (doc.version != kPdaFormatVersion)
        throw ParseError("unsupported format version '" + doc.version + "'");
    if (auto it = root.find("name"); it != root.end())
        doc.name = as_string(*it, "name");
    if (auto it = root.find("description"); it != root.end())
        doc.description = as_string(*it, "description");

    auto& pda = doc.pda;
    pda.states = as_strings(field(root, "states"), "states");
    const auto& sigma = field(root, "input_alphabet");
    if (!sigma.is_array())
        throw ParseError("input_alphabet must be an array");
    for (const auto& s : sigma)
        pda.input_alphabet.push_back(as_symbol(s, "input symbol"));
    pda.stack_alphabet = as_strings(field(root, "stack_alphabet"), "stack_alphabet");
    pda.initial_state = as_string(field(root, "initial_state"), "initial_state");
    pda.initial_stack = as_strings(field(root, "initial_stack"), "initial_stack");
    pda.accept_states = as_strings(field(root, "accept_states"), "accept_states");

    const auto& transitions = field(root, "transitions");
    if (!transitions.is_array())
        throw ParseError("transitions must be an array");
    for (const auto& t : transitions) {
        if (!t.is_object())
            throw ParseError("each transition must be an object");
        GeneralTransition gt;
        gt.from = as_string(field(t, "from"), "transition.from");
        const auto& input = field(t, "input");
        if (!input.is_null())
            gt.input = as_symbol(input, "transition.input");
        gt.pop = as_string(field(t, "pop"), "transition.pop");
        gt.push = as_strings(field(t, "push"), "transition.push");
        gt.to = as_string(field(t, "to"), "transition.to");
        pda.transitions.push_back(std::move(gt));
    }
    return doc;
}

std::string serialize_pda_document(const PdaDocument& doc)
{
    Json root;
    root["version"] = doc.version;
    if (doc.name)
        root["name"] = *doc.name;
    if (doc.description)
        root["description"] = *doc.description;
    const auto& pda = doc.pda;
    root["states"] = pda.states;
    Json sigma = Json::array();
    for (char32_t c : pda.input_alphabet)
        sigma.push_back(encode_utf8(c));
    root["input_alphabet"] = sigma;
    root["stack_alphabet"] = pda.stack_alphabet;
    root["initial_state"] = pda.initial_state;
    root["initial_stack"] = pda.initial_stack;
    root["accept_states"] = pda.accept_states;
    Json transitions = Json::array();
    for (const auto& t : pda.transitions) {
        Json jt;
        jt["from"] = t.from;
        jt["input"] = t.input ? Json(encode_utf8(*t.input)) : Json(nullptr);
        jt["pop"] = t.pop;
        jt["push"] = t.push;
        jt["to"] = t.to;
        transitions.push_back(std::move(jt));
    }
    root["transitions"] = transitions;
    return root.dump(2) + "\n";
}

PdaDocument load_pda_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pda_document(buf.str());
}

} // namespace pumpkit
