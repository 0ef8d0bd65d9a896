#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pumpkit/pda.hpp"

namespace pumpkit {

inline constexpr std::string_view kPdaFormatVersion = "pumpkit/1";

/// On-disk automaton: one JSON object, general and (*)-form alike.
struct PdaDocument {
    std::string version{kPdaFormatVersion};
    GeneralPda pda;
    std::optional<std::string> name;
    std::optional<std::string> description;

    bool operator==(const PdaDocument&) const = default;
};

/// Throws ParseError on malformed JSON, missing fields, wrong types, an
/// unknown version, or input symbols that are not a single Unicode scalar.
PdaDocument parse_pda_document(std::string_view json);

/// Deterministic: fixed key order, two-space indent, trailing newline.
std::string serialize_pda_document(const PdaDocument& doc);

PdaDocument load_pda_file(const std::string& path);

} // namespace pumpkit
