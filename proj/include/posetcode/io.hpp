#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "posetcode/codes.hpp"
#include "posetcode/poset.hpp"

namespace posetcode {

// Poset text format: first significant line `n <count>`, then one cover
// relation `a < b` per line (1-based). `#` starts a comment; blank lines are
// ignored. Parsers throw ParseError with a line reference.
Poset parse_poset(std::istream& in);
Poset parse_poset_text(const std::string& text);
std::string poset_to_text(const Poset& p);

// Code text format: header `n <len> repr explicit` or `n <len> repr linear
// <m>`. Explicit: one codeword per line as a 0/1 string, position 1 leftmost.
// Linear: <len> lines, each the m-bit check column of the next position,
// row 1 leftmost. Comments and blank lines as in the poset format.
Code parse_code(std::istream& in);
Code parse_code_text(const std::string& text);
std::string code_to_text(const Code& c);

// Whole file as bytes; ParseError when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

// 64-bit FNV-1a of the raw bytes, 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

} // namespace posetcode
