#pragma once

#include <iosfwd>
#include <string>

#include "scg/sggi.hpp"

namespace scg {

/// The interchange record:
/// {"n": int, "rank": int, "offset": int, "generators": [[int,...], ...]}
/// with each generator given as its full 1-based image sequence of length n.
std::string tuple_to_json(const GeneratorTuple& t);
GeneratorTuple tuple_from_json(const std::string& text);

/// Compact single-line record for JSONL streams, with an optional leading
/// "key" field (hex canonical key).
std::string tuple_to_jsonl(const GeneratorTuple& t, const std::string* key_hex = nullptr);

/// Load a tuple from file contents: a JSON record (first non-space char '{')
/// or CPR text (header "cpr ..."). Throws std::invalid_argument / parse_error.
GeneratorTuple tuple_from_text(const std::string& text);

GeneratorTuple load_tuple_file(const std::string& path);
void save_tuple_file(const GeneratorTuple& t, const std::string& path);

}  // namespace scg
