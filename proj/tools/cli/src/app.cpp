#include "coqroots/app.hpp"

#include <optional>
#include <ostream>

#include "coqroots/report.hpp"
#include "coquat/root_finder.hpp"
#include "coquat/verify.hpp"

namespace coqroots {

int run(const InputSpec& spec, std::ostream& out, std::ostream& err) {
  const auto poly = spec.polynomial();
  if (poly.degree() > spec.options.max_degree) {
    err << "error [input]: degree " << poly.degree() << " exceeds --max-degree "
        << spec.options.max_degree << '\n';
    return kBadInput;
  }
  const coquat::Tolerances tol = spec.options.tolerances();

  coquat::RootReport report;
  try {
    report = coquat::find_all_zeros(poly, tol);
  } catch (const coquat::SingularLeadingCoefficient& e) {
    err << "error [monicize]: " << e.what() << '\n';
    return kSingularLeading;
  } catch (const coquat::NonRealCompanion& e) {
    err << "error [companion]: " << e.what() << '\n';
    return kBadInput;
  } catch (const coquat::DegenerateInput& e) {
    err << "error [companion roots]: " << e.what() << '\n';
    return kBadInput;
  }

  std::optional<coquat::CertificationResult> cert;
  if (spec.options.verify) {
    coquat::CertifyOptions opts;
    opts.seed = spec.options.seed;
    cert = coquat::certify(report, spec.options.certification_tolerance(), opts);
  }

  const RenderedReport rendered = render(report, cert ? &*cert : nullptr);
  out << (spec.options.format == OutputFormat::Json ? to_json_text(rendered) : to_text(rendered));

  if (cert && !cert->passed) {
    err << "error [verify]: certification failed\n";
    for (const auto& d : cert->descriptors) {
      if (!d.passed()) err << "  " << d.message << '\n';
    }
    return kCertificationFailed;
  }
  return kOk;
}

}  // namespace coqroots
