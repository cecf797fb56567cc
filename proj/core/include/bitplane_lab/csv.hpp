#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bpl::csv {

/// Shortest decimal that parses back to the same double; "inf", "-inf", "nan"
/// for non-finite values.
std::string format_number(double value);

/// Inverse of format_number. Throws Errc::SchemaMismatch on malformed input.
double parse_number(std::string_view text);

/// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
/// A trailing '\r' is dropped.
std::vector<std::string> split_line(std::string_view line);

/// Quotes a field when it contains a comma, quote or newline.
std::string escape_field(std::string_view field);

/// Reads the next non-empty line; false at end of stream.
bool next_record(std::istream& in, std::vector<std::string>& fields);

}  // namespace bpl::csv
