#pragma once

// Character table documents. Layout:
//
//   {"name", "order": "<int>", "exponent", "N", "identity",
//    "classes": [{"size": "<int>", "inverse": idx, "powers": {"2": idx, ...}}],
//    "irreducibles": [[CycNum, ...], ...],
//    "embeddings": [{"name", "index": "<int>", "sub": <structure [+ irreducibles]>,
//                    "fusion": [...], "normal": bool, "coset_of_class": [...],
//                    "quotient": [[...]], "conj_action": [[...]]}]}
//
// CycNum is {"N": int, "coeffs": ["p/q", ...]} with phi(N) coefficients.
// "powers" lists every exponent 2..exponent-1; composite keys may be
// omitted on input and are then derived from their factors.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "twistlab/groups.hpp"

namespace twistlab {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json cycnum_to_json(const CycNum& z);
CycNum cycnum_from_json(const nlohmann::json& j);

nlohmann::json class_function_to_json(const ClassFunction& chi);
ClassFunction class_function_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const CharacterTable& t);
/// Structural parse only; throws ParseError.
CharacterTable table_from_json(const nlohmann::json& j);

/// Canonical text (2-space indent, trailing newline).
std::string serialize_table(const CharacterTable& t);

/// Parses and validates. Throws ParseError for malformed documents and
/// ValidationError naming the first violated invariant.
CharacterTable load_character_table(const std::string& text);

}  // namespace twistlab
