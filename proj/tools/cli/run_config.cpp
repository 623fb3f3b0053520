#include "cli/run_config.hpp"

#include <cmath>
#include <limits>

#include "mumbound/error.hpp"

namespace mumbound::cli {

using nlohmann::json;

namespace {

json real_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_real(j.get<std::string>(), what);
  throw ValidationError(std::string("config: '") + what + "' must be a number");
}

}  // namespace

double parse_real(const std::string& text, const char* what) {
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("invalid value for ") + what + ": '" + text + "'");
  }
}

json to_json(const RunConfig& c) {
  json alphas = json::array();
  for (double a : c.alphas) alphas.push_back(real_json(a));
  return {{"command", c.command},
          {"d", c.d},
          {"t", c.t ? json(*c.t) : json("max")},
          {"x", c.x},
          {"kappa", c.kappa ? json(*c.kappa) : json(nullptr)},
          {"purity", c.purity},
          {"alpha", std::move(alphas)},
          {"states", c.states},
          {"rank", c.rank ? json(*c.rank) : json(nullptr)},
          {"seed", c.seed},
          {"workers", c.workers},
          {"in", c.in},
          {"out", c.out},
          {"format", c.format},
          {"tol", c.tol ? json(*c.tol) : json(nullptr)}};
}

RunConfig merge_json(RunConfig c, const json& j) {
  if (!j.is_object()) throw ValidationError("config: top level must be a JSON object");
  try {
    if (j.contains("command")) c.command = j.at("command").get<std::string>();
    if (j.contains("d")) c.d = j.at("d").get<int>();
    if (j.contains("t")) {
      const json& t = j.at("t");
      if (t.is_string() && t.get<std::string>() == "max")
        c.t.reset();
      else
        c.t = real_from_json(t, "t");
    }
    if (j.contains("x")) c.x = real_from_json(j.at("x"), "x");
    if (j.contains("kappa")) {
      if (j.at("kappa").is_null()) c.kappa.reset();
      else c.kappa = real_from_json(j.at("kappa"), "kappa");
    }
    if (j.contains("purity")) c.purity = real_from_json(j.at("purity"), "purity");
    if (j.contains("alpha")) {
      c.alphas.clear();
      for (const auto& a : j.at("alpha")) c.alphas.push_back(real_from_json(a, "alpha"));
    }
    if (j.contains("states")) c.states = j.at("states").get<std::size_t>();
    if (j.contains("rank")) {
      if (j.at("rank").is_null()) c.rank.reset();
      else c.rank = j.at("rank").get<int>();
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("workers")) c.workers = j.at("workers").get<unsigned>();
    if (j.contains("in")) c.in = j.at("in").get<std::string>();
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
    if (j.contains("tol")) {
      if (j.at("tol").is_null()) c.tol.reset();
      else c.tol = real_from_json(j.at("tol"), "tol");
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  return c;
}

}  // namespace mumbound::cli
