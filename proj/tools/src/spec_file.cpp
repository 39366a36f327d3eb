#include "arlab_cli/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "arlab/classes.hpp"
#include "arlab/errors.hpp"
#include "arlab/rates.hpp"
#include "json.hpp"

namespace arlab::cli {
namespace {

using nlohmann::json;

const std::set<std::string>& allowed_fields(const std::string& type) {
  static const std::map<std::string, std::set<std::string>> fields{
      {"full", {"type", "horizon"}},
      {"shifted_subset", {"type", "N", "s_max", "horizon"}},
      {"product", {"type", "parts"}},
      {"linear_grid", {"type", "d", "weight_bound", "horizon"}},
      {"parity", {"type", "k_max", "horizon"}},
      {"atdim_example", {"type", "depth", "horizon"}},
      {"taxonomy", {"type", "rate", "s_max", "horizon"}},
  };
  const auto it = fields.find(type);
  if (it == fields.end()) {
    throw SpecError("type", "unknown class type '" + type +
                                "' (expected full, shifted_subset, product, linear_grid, parity, atdim_example or "
                                "taxonomy)");
  }
  return it->second;
}

std::size_t get_count(const json& j, const std::string& key, const std::string& path) {
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw SpecError(path + key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::int64_t> get_int_list(const json& j, const std::string& key, const std::string& path) {
  const json& v = j.at(key);
  if (!v.is_array()) throw SpecError(path + key, "expected a list of integers");
  std::vector<std::int64_t> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw SpecError(path + key, "expected a list of integers");
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

ClassSpec spec_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw SpecError(path.empty() ? "spec" : path, "expected a JSON object");
  if (!j.contains("type")) throw SpecError(path + "type", "missing field");
  if (!j.at("type").is_string()) throw SpecError(path + "type", "expected a string");
  ClassSpec s;
  s.type = j.at("type").get<std::string>();
  const auto& allowed = allowed_fields(s.type);
  for (const auto& [key, value] : j.items()) {
    if (allowed.count(key) == 0) throw SpecError(path + key, "not a field of type '" + s.type + "'");
  }
  auto require = [&](const char* key) {
    if (!j.contains(key)) throw SpecError(path + key, "missing field (required for type '" + s.type + "')");
  };
  if (j.contains("horizon")) s.horizon = get_count(j, "horizon", path);
  if (j.contains("s_max")) s.s_max = get_count(j, "s_max", path);
  if (s.type == "full") {
    require("horizon");
  } else if (s.type == "shifted_subset") {
    require("N");
    require("s_max");
    s.N = get_int_list(j, "N", path);
  } else if (s.type == "product") {
    require("parts");
    const json& parts = j.at("parts");
    if (!parts.is_array() || parts.empty()) throw SpecError(path + "parts", "expected a non-empty list of specs");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      s.parts.push_back(spec_from_json(parts[i], path + "parts[" + std::to_string(i) + "]."));
    }
  } else if (s.type == "linear_grid") {
    require("d");
    require("weight_bound");
    s.d = get_count(j, "d", path);
    if (*s.d == 0) throw SpecError(path + "d", "must be at least 1");
    s.weight_bound = static_cast<std::int64_t>(get_count(j, "weight_bound", path));
  } else if (s.type == "parity") {
    require("k_max");
    s.k_max = get_count(j, "k_max", path);
  } else if (s.type == "atdim_example") {
    require("depth");
    s.depth = get_count(j, "depth", path);
    if (*s.depth > 20) throw SpecError(path + "depth", "must be at most 20");
  } else if (s.type == "taxonomy") {
    require("rate");
    s.rate = get_int_list(j, "rate", path);
    if (s.rate.empty()) throw SpecError(path + "rate", "must not be empty");
  }
  return s;
}

std::size_t pick_horizon(const ClassSpec& s, std::size_t min_horizon, std::size_t construction_min) {
  return s.horizon ? *s.horizon : std::max(min_horizon, construction_min);
}

}  // namespace

ClassSpec parse_class_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("spec", std::string("invalid JSON: ") + e.what());
  }
  return spec_from_json(j, "");
}

ClassSpec load_class_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("file", "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_class_spec(text.str());
}

BuiltClass build_class(const ClassSpec& s, std::size_t min_horizon, std::size_t cap) {
  if (s.type == "full") return {make_full_class(*s.horizon, cap), std::nullopt};
  if (s.type == "shifted_subset") {
    IntervalSet N;
    try {
      N = IntervalSet(s.N);
    } catch (const std::invalid_argument& e) {
      throw SpecError("N", e.what());
    }
    const std::size_t H = pick_horizon(s, min_horizon, static_cast<std::size_t>(N.max()) + *s.s_max);
    return {make_shifted_subset_class(N, *s.s_max, H, cap), std::nullopt};
  }
  if (s.type == "product") {
    std::vector<FiniteClass> parts;
    for (const auto& p : s.parts) parts.push_back(build_class(p, min_horizon, cap).F);
    return {make_product_class(parts, cap), std::nullopt};
  }
  if (s.type == "linear_grid") {
    const std::size_t H = pick_horizon(s, min_horizon, 1);
    return {enumerate_linear_class(*s.d, *s.weight_bound, H, cap), *s.d};
  }
  if (s.type == "parity") {
    const std::size_t H = pick_horizon(s, min_horizon, *s.k_max + 2);
    return {make_parity_class(*s.k_max, H, cap), std::nullopt};
  }
  if (s.type == "atdim_example") {
    const std::size_t H = pick_horizon(s, min_horizon, std::size_t{1} << *s.depth);
    return {make_atdim_example_class(*s.depth, H, cap), std::nullopt};
  }
  if (s.type == "taxonomy") {
    const RateTable r(s.rate);
    const std::size_t s_max = s.s_max ? *s.s_max : r.t_max();
    const TaxonomyLayout layout = taxonomy_layout(r, s_max, r.t_max());
    const std::size_t H = pick_horizon(s, min_horizon, layout.part_horizon);
    return {make_taxonomy_class(r, s_max, H, cap), std::nullopt};
  }
  throw SpecError("type", "unknown class type '" + s.type + "'");
}

}  // namespace arlab::cli
