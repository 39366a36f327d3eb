#include "arlab_cli/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "arlab/classes.hpp"
#include "arlab/errors.hpp"

namespace arlab::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

BitString parse_bits_field(std::string item, const std::string& field, const std::string& where) {
  item = trim(item);
  if (item == "\"\"") return BitString{};
  try {
    return BitString::parse(item);
  } catch (const std::invalid_argument&) {
    throw SpecError(field, where + "'" + item + "' is not a bit string");
  }
}

}  // namespace

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Domain parse_domain(const std::string& text) {
  const std::string t = trim(text);
  if (t.rfind("chain:", 0) == 0) {
    const auto counts = parse_count_list(t.substr(6), "domain");
    if (counts.size() != 1) throw SpecError("domain", "expected chain:K with a single K");
    return chain_domain(counts.front());
  }
  Domain D;
  std::set<BitString> seen;
  for (const auto& item : split(t, ',')) {
    BitString x = parse_bits_field(item, "domain", "");
    if (!seen.insert(x).second) throw SpecError("domain", "duplicate prompt '" + x.to_string() + "'");
    D.push_back(std::move(x));
  }
  return D;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& field) {
  std::vector<std::int64_t> out;
  for (const auto& raw : split(text, ',')) {
    const std::string item = trim(raw);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw SpecError(field, "'" + item + "' is not an integer");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> parse_count_list(const std::string& text, const std::string& field) {
  std::vector<std::size_t> out;
  for (std::int64_t v : parse_int_list(text, field)) {
    if (v < 0) throw SpecError(field, "negative count " + std::to_string(v));
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& field) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) {
    try {
      out.push_back(Rational::parse(trim(item)));
    } catch (const std::exception&) {
      throw SpecError(field, "'" + trim(item) + "' is not a rational number");
    }
  }
  return out;
}

CotSample read_sample_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::vector<CotExample> examples;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!header) {
      if (cells.size() != 2 || trim(cells[0]) != "prompt" || trim(cells[1]) != "trace") {
        throw SpecError("sample", where + "expected header 'prompt,trace'");
      }
      header = true;
      continue;
    }
    if (cells.size() != 2) throw SpecError("sample", where + "expected two columns");
    CotExample e{parse_bits_field(cells[0], "sample", where), parse_bits_field(cells[1], "sample", where)};
    if (e.y.empty()) throw SpecError("sample", where + "empty trace");
    if (!examples.empty() && e.y.size() != examples.front().y.size()) {
      throw SpecError("sample", where + "trace length " + std::to_string(e.y.size()) + " differs from " +
                                    std::to_string(examples.front().y.size()));
    }
    examples.push_back(std::move(e));
  }
  if (!header) throw SpecError("sample", "missing header 'prompt,trace'");
  if (examples.empty()) throw SpecError("sample", "no examples, so the trace length is unknown");
  const std::size_t T = examples.front().y.size();
  return CotSample(std::move(examples), T);
}

CotSample read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("sample", "cannot read '" + path + "'");
  return read_sample_csv(in);
}

void write_sample_csv(std::ostream& out, const CotSample& S) {
  out << "prompt,trace\n";
  for (const auto& e : S) out << csv_bits(e.x) << ',' << csv_bits(e.y) << '\n';
}

std::string csv_bits(const BitString& s) { return s.empty() ? "\"\"" : s.to_string(); }

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_decimal(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::to_string(v);
}

}  // namespace arlab::cli
