#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coquat/coq_poly.hpp"
#include "coquat/errors.hpp"
#include "coquat/tolerances.hpp"

namespace coqroots {

// Input text that is not the documented JSON shape. The message carries a
// line/column for syntax errors and a JSON path for shape errors.
class MalformedInput : public coquat::Error {
 public:
  using coquat::Error::Error;
};

// Fewer than two coefficients survive trimming of trailing zeros.
class DegreeZero : public coquat::Error {
 public:
  using coquat::Error::Error;
};

enum class OutputFormat { Text, Json };

struct Options {
  OutputFormat format = OutputFormat::Text;
  // Multiplies every default tolerance.
  double tolerance_scale = 1.0;
  bool verify = false;
  std::uint64_t seed = 0;
  int max_degree = 64;

  [[nodiscard]] coquat::Tolerances tolerances() const {
    return coquat::Tolerances{}.scaled(tolerance_scale);
  }
  // Residual bound used by --verify.
  [[nodiscard]] double certification_tolerance() const { return 1e-8 * tolerance_scale; }
};

struct InputSpec {
  // [q0, q1, q2, q3] per coefficient, ascending degree.
  std::vector<std::array<double, 4>> coefficients;
  Options options;

  [[nodiscard]] coquat::CoqPolynomial polynomial() const;
};

/// Parses `{"coefficients": [[q0,q1,q2,q3], ...]}` (ascending degree).
/// Trailing all-zero tuples are dropped. Throws MalformedInput or DegreeZero.
InputSpec parse_input(std::string_view text);

}  // namespace coqroots
