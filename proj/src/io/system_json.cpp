#include "fracinv/io/system_json.hpp"
#include "fracinv/rational.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace fracinv::io {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SystemParseError(where + ": " + what);
}

Rational parse_rat_at(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

Quad parse_coeff(const json& j, const std::string& where) {
  if (j.is_string()) return Quad(parse_rat_at(j, where));
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "rat" && it.key() != "irr" && it.key() != "d")
        fail(where, "unknown key '" + it.key() + "'");
    Rational rat = j.contains("rat") ? parse_rat_at(j["rat"], where + "/rat") : Rational(0);
    Rational irr = j.contains("irr") ? parse_rat_at(j["irr"], where + "/irr") : Rational(0);
    if (!j.contains("d")) fail(where, "extension coefficient needs \"d\"");
    if (!j["d"].is_number_integer()) fail(where + "/d", "expected integer");
    long long d = j["d"].get<long long>();
    if (d <= 1) fail(where + "/d", "base must be an integer > 1");
    return Quad(rat, irr, d);
  }
  fail(where, "expected \"p/q\" or {\"rat\",\"irr\",\"d\"}");
}

std::pair<int, int> parse_mono_key(const std::string& key, const std::string& where) {
  auto comma = key.find(',');
  if (comma == std::string::npos) fail(where, "key '" + key + "' is not \"i,j\"");
  int i = 0, j = 0;
  try {
    size_t used = 0;
    i = std::stoi(key.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(key);
    std::string rest = key.substr(comma + 1);
    j = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    fail(where, "key '" + key + "' is not \"i,j\"");
  }
  if (i < 0 || j < 0) fail(where, "negative exponent in key '" + key + "'");
  return {i, j};
}

BiPoly parse_component(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected object of \"i,j\" keys");
  BiPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto [i, k] = parse_mono_key(it.key(), where);
    Quad c = parse_coeff(it.value(), where + "/" + it.key());
    if (!p.coeff(i, k).is_zero()) fail(where, "duplicate monomial '" + it.key() + "'");
    p.set_coeff(i, k, c);
  }
  return p;
}

json coeff_to_json(const Quad& c) {
  if (c.is_rational()) return rat_str(c.rat());
  json j;
  j["rat"] = rat_str(c.rat());
  j["irr"] = rat_str(c.irr());
  j["d"] = c.base();
  return j;
}

json component_to_json(const BiPoly& p) {
  json j = json::object();
  for (const auto& [m, c] : p.terms()) {
    std::ostringstream key;
    key << m.i << "," << m.j;
    j[key.str()] = coeff_to_json(c);
  }
  return j;
}

} // namespace

PolyField2D parse_system_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("/", e.what());
  }
  if (!j.is_object()) fail("/", "top level must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "degree" && it.key() != "a" && it.key() != "b")
      fail("/", "unknown key '" + it.key() + "'");
  PolyField2D f;
  if (j.contains("a")) f.P = parse_component(j["a"], "/a");
  if (j.contains("b")) f.Q = parse_component(j["b"], "/b");
  if (j.contains("degree")) {
    if (!j["degree"].is_number_integer()) fail("/degree", "expected integer");
    int want = j["degree"].get<int>();
    if (want < 0) fail("/degree", "must be nonnegative");
    if (f.degree() > want)
      fail("/degree", "declared " + std::to_string(want) + " but coefficients reach degree " +
                          std::to_string(f.degree()));
  }
  return f;
}

PolyField2D load_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SystemParseError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_system_json(buf.str());
  } catch (const SystemParseError& e) {
    throw SystemParseError(path + e.what());
  }
}

std::string system_to_json(const PolyField2D& f) {
  json j;
  j["degree"] = std::max(0, f.degree()); // zero polynomial reports degree -1
  j["a"] = component_to_json(f.P);
  j["b"] = component_to_json(f.Q);
  return j.dump(2) + "\n";
}

BiPoly parse_poly_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("/", e.what());
  }
  return parse_component(j, "/");
}

std::string poly_to_json(const BiPoly& p) { return component_to_json(p).dump(); }

} // namespace fracinv::io
