#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coquat/root_finder.hpp"
#include "coquat/verify.hpp"

namespace coqroots {

// Plain-data view of a RootReport, the single source for both the JSON and
// the text renderings.
struct RenderedRoot {
  double re = 0.0;
  double im = 0.0;
  int multiplicity = 1;
};

struct RenderedLine {
  double gamma0 = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
};

struct RenderedClass {
  double q0 = 0.0;
  double dv = 0.0;
  std::string type;
  std::string kind;
  std::string branch;
  std::optional<std::array<double, 4>> z;  // isolated
  std::optional<RenderedLine> line;        // linear
};

struct RenderedCertification {
  bool passed = true;
  double worst_residual = 0.0;
  std::vector<std::string> failures;
};

struct RenderedReport {
  int degree = 0;
  std::vector<double> companion;
  std::vector<RenderedRoot> roots;
  std::vector<RenderedClass> classes;
  int isolated = 0;
  int linear = 0;
  int hyperboloidal = 0;
  std::optional<RenderedCertification> certification;
};

RenderedReport render(const coquat::RootReport& report,
                      const coquat::CertificationResult* certification = nullptr);

/// Pretty-printed JSON with sorted keys; shortest round-trip number
/// formatting, so parse_report followed by to_json_text is byte-identical.
std::string to_json_text(const RenderedReport& r);
RenderedReport parse_report(const std::string& json_text);

/// Human-readable rendering of the same content.
std::string to_text(const RenderedReport& r);

}  // namespace coqroots
