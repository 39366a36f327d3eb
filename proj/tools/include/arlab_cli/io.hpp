#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arlab/bits.hpp"
#include "arlab/patterns.hpp"
#include "arlab/rational.hpp"
#include "arlab/samples.hpp"

namespace arlab::cli {

/// `chain:K` for 0^1..0^K, or a comma-separated list of bit strings where
/// `""` (or an empty item) is the empty prompt. Throws SpecError("domain").
Domain parse_domain(const std::string& text);

/// Comma-separated lists. Throw SpecError(field, ...).
std::vector<std::size_t> parse_count_list(const std::string& text, const std::string& field);
std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& field);
std::vector<Rational> parse_rational_list(const std::string& text, const std::string& field);
std::vector<std::string> split(const std::string& text, char sep);

/// CSV with header `prompt,trace`; every trace must have the same non-zero
/// length. Throws SpecError("sample", ...) with the line number.
CotSample read_sample_csv(std::istream& in);
CotSample read_sample_file(const std::string& path);
void write_sample_csv(std::ostream& out, const CotSample& S);

/// Bit string as a CSV field; the empty string is written as "".
std::string csv_bits(const BitString& s);
/// Quotes a free-text field when it contains a comma, quote or newline.
std::string csv_text(const std::string& s);
/// Shortest round-trip decimal form of a double, e.g. 0.09.
std::string format_decimal(double v);

}  // namespace arlab::cli
