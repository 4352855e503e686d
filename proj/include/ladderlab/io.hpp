#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ladderlab/eval.hpp"
#include "ladderlab/webs.hpp"

namespace ladderlab {

using Json = nlohmann::json;

/// [[exponent, coefficient], ...] in increasing exponent order. Coefficients
/// beyond 64 bits are written as decimal strings.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j, const std::string& where = "polynomial");
/// {"den": [...], "num": [...]}
Json ratfun_to_json(const RatFun& x);
RatFun ratfun_from_json(const Json& j, const std::string& where = "rational function");

/// {"bottom": [...], "n": n, "rungs": [{"pos","s","tilt"} | {"strip": [[i,l]]} | {"insert": [[i,l]]}]}
Json ladder_to_json(const Ladder& L);
/// Parses and validates; ParseError for malformed input, ValidationError for inconsistent labels.
Ladder ladder_from_json(const Json& j);
Ladder parse_ladder(const std::string& text);
Ladder load_ladder(const std::filesystem::path& path);
/// Pretty-printed with sorted keys and a trailing newline.
std::string dump_ladder(const Ladder& L);

/// {"cols", "entries": [[row, col, value]], "rows"}
Json matrix_to_json(const EvalMatrix& M);
EvalMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const LaurentMatrix& M);

/// Writes to a temporary file in the same directory, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace ladderlab
