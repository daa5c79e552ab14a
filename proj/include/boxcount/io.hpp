#pragma once

// JSON and CSV coefficient tables.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxcount/series.hpp"

namespace boxcount {

namespace detail {

inline void require_integral(const Series& s) {
  if (!s.is_integral()) throw std::invalid_argument("series has half-integer exponents");
}

}  // namespace detail

/// {"vars": [...], "trunc": N, "terms": [{"exp": [...], "coef": "..."}]} in canonical order.
inline nlohmann::ordered_json to_json(const Series& s) {
  detail::require_integral(s);
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : s.terms()) {
    std::vector<int> exp(s.variables().size());
    for (std::size_t i = 0; i < exp.size(); ++i) exp[i] = e.whole(i);
    terms.push_back({{"exp", exp}, {"coef", c.str()}});
  }
  return {{"vars", s.variables().names()}, {"trunc", s.truncation()}, {"terms", terms}};
}

inline Series series_from_json(const nlohmann::json& j) {
  auto vars = make_variables(j.at("vars").get<std::vector<std::string>>());
  Series s(vars, j.at("trunc").get<int>());
  for (const auto& t : j.at("terms")) {
    auto exp = t.at("exp").get<std::vector<int>>();
    if (exp.size() != vars->size()) throw std::invalid_argument("exponent vector has the wrong length");
    Exponents e;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] < 0) throw std::invalid_argument("negative exponent");
      e.set_half(i, 2 * exp[i]);
    }
    if (!s.fits(e)) throw std::invalid_argument("term beyond the truncation");
    s.add_term(e, Integer(t.at("coef").get<std::string>()));
  }
  return s;
}

/// Header degree,exponent_<var>...,coefficient; rows in canonical order.
inline std::string to_csv(const Series& s) {
  detail::require_integral(s);
  std::ostringstream out;
  out << "degree";
  for (const auto& name : s.variables().names()) out << ",exponent_" << name;
  out << ",coefficient\n";
  for (const auto& [e, c] : s.terms()) {
    out << e.half_degree() / 2;
    for (std::size_t i = 0; i < s.variables().size(); ++i) out << ',' << e.whole(i);
    out << ',' << c.str() << '\n';
  }
  return out.str();
}

inline std::string format_series(const Series& s, const std::string& format) {
  if (format == "csv") return to_csv(s);
  if (format == "json") {
    // one term per line
    const auto j = to_json(s);
    std::string out = "{\"vars\": " + j["vars"].dump() + ", \"trunc\": " + j["trunc"].dump() + ", \"terms\": [";
    const auto& terms = j["terms"];
    for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? ",\n  " : "\n  ") + terms[i].dump();
    return out + (terms.empty() ? "]}\n" : "\n]}\n");
  }
  throw std::invalid_argument("unknown output format '" + format + "'");
}

}  // namespace boxcount
