#include "coqroots/input.hpp"

#include <json.hpp>
#include <sstream>

namespace coqroots {

using nlohmann::json;

coquat::CoqPolynomial InputSpec::polynomial() const {
  std::vector<coquat::Coquaternion> c;
  c.reserve(coefficients.size());
  for (const auto& t : coefficients) c.emplace_back(t[0], t[1], t[2], t[3]);
  return coquat::CoqPolynomial(std::move(c));
}

namespace {

std::string location_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

InputSpec parse_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw MalformedInput("invalid JSON at " + location_of(text, at) + ": " + e.what());
  }

  if (!doc.is_object()) throw MalformedInput("top level must be a JSON object");
  const auto it = doc.find("coefficients");
  if (it == doc.end()) throw MalformedInput("missing key \"coefficients\"");
  if (!it->is_array()) throw MalformedInput("\"coefficients\" must be an array");

  InputSpec spec;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& entry = (*it)[i];
    const std::string path = "coefficients[" + std::to_string(i) + "]";
    if (!entry.is_array() || entry.size() != 4) {
      throw MalformedInput(path + " must be an array of 4 numbers [q0, q1, q2, q3]");
    }
    std::array<double, 4> t{};
    for (std::size_t c = 0; c < 4; ++c) {
      if (!entry[c].is_number()) {
        throw MalformedInput(path + "[" + std::to_string(c) + "] is not a number");
      }
      t[c] = entry[c].get<double>();
    }
    spec.coefficients.push_back(t);
  }
  while (!spec.coefficients.empty() && spec.coefficients.back() == std::array<double, 4>{}) {
    spec.coefficients.pop_back();
  }
  if (spec.coefficients.size() < 2) {
    throw DegreeZero("polynomial must have degree at least 1 (got " +
                     std::to_string(spec.coefficients.size()) + " nonzero coefficient tuple(s))");
  }
  return spec;
}

}  // namespace coqroots
