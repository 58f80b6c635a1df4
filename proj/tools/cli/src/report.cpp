#include "coqroots/report.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

namespace coqroots {

using nlohmann::json;

RenderedReport render(const coquat::RootReport& report,
                      const coquat::CertificationResult* certification) {
  RenderedReport r;
  r.degree = report.polynomial.degree();
  r.companion.assign(report.companion.coefficients().begin(), report.companion.coefficients().end());
  for (const auto& c : report.companion_roots) {
    r.roots.push_back({c.value.real(), c.value.imag(), c.multiplicity});
  }
  for (const auto& d : report.classes) {
    RenderedClass c;
    c.q0 = d.cls.q0;
    c.dv = d.cls.dv;
    c.type = std::string(coquat::to_string(d.cls.type));
    c.kind = std::string(coquat::kind_name(d.kind));
    c.branch = std::string(coquat::to_string(d.diagnostics.branch));
    if (const auto* iso = std::get_if<coquat::IsolatedZero>(&d.kind)) {
      c.z = iso->z.as_array();
      ++r.isolated;
    } else if (const auto* line = std::get_if<coquat::LinearZero>(&d.kind)) {
      c.line = RenderedLine{line->gamma0, line->k1, line->k2};
      ++r.linear;
    } else if (d.is_hyperboloidal()) {
      ++r.hyperboloidal;
    }
    r.classes.push_back(std::move(c));
  }
  if (certification != nullptr) {
    RenderedCertification cert;
    cert.passed = certification->passed;
    cert.worst_residual = certification->worst_residual;
    for (const auto& d : certification->descriptors) {
      if (!d.passed()) cert.failures.push_back(d.message);
    }
    r.certification = std::move(cert);
  }
  return r;
}

namespace {

json to_json(const RenderedReport& r) {
  json roots = json::array();
  for (const auto& root : r.roots) {
    roots.push_back({{"re", root.re}, {"im", root.im}, {"multiplicity", root.multiplicity}});
  }
  json classes = json::array();
  for (const auto& c : r.classes) {
    json data = json::object();
    if (c.z) data["z"] = *c.z;
    if (c.line) data = {{"gamma0", c.line->gamma0}, {"k1", c.line->k1}, {"k2", c.line->k2}};
    classes.push_back({{"q0", c.q0},
                       {"dv", c.dv},
                       {"type", c.type},
                       {"kind", c.kind},
                       {"branch", c.branch},
                       {"data", std::move(data)}});
  }
  json out = {
      {"degree", r.degree},
      {"companion", {{"coefficients", r.companion}, {"roots", std::move(roots)}}},
      {"classes", std::move(classes)},
      {"counts", {{"isolated", r.isolated}, {"linear", r.linear}, {"hyperboloidal", r.hyperboloidal}}},
  };
  if (r.certification) {
    out["certification"] = {{"passed", r.certification->passed},
                            {"worst_residual", r.certification->worst_residual},
                            {"failures", r.certification->failures}};
  }
  return out;
}

std::string num(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string signed_term(double v, std::string_view unit) {
  std::string s = v < 0 ? " - " : " + ";
  s += num(std::abs(v));
  s += unit;
  return s;
}

std::string coquaternion_text(const std::array<double, 4>& q) {
  return num(q[0]) + signed_term(q[1], "i") + signed_term(q[2], "j") + signed_term(q[3], "k");
}

}  // namespace

std::string to_json_text(const RenderedReport& r) { return to_json(r).dump(2) + "\n"; }

RenderedReport parse_report(const std::string& json_text) {
  const json doc = json::parse(json_text);
  RenderedReport r;
  r.degree = doc.at("degree").get<int>();
  r.companion = doc.at("companion").at("coefficients").get<std::vector<double>>();
  for (const auto& root : doc.at("companion").at("roots")) {
    r.roots.push_back({root.at("re").get<double>(), root.at("im").get<double>(),
                       root.at("multiplicity").get<int>()});
  }
  for (const auto& jc : doc.at("classes")) {
    RenderedClass c;
    c.q0 = jc.at("q0").get<double>();
    c.dv = jc.at("dv").get<double>();
    c.type = jc.at("type").get<std::string>();
    c.kind = jc.at("kind").get<std::string>();
    c.branch = jc.at("branch").get<std::string>();
    const json& data = jc.at("data");
    if (data.contains("z")) c.z = data.at("z").get<std::array<double, 4>>();
    if (data.contains("gamma0")) {
      c.line = RenderedLine{data.at("gamma0").get<double>(), data.at("k1").get<double>(),
                            data.at("k2").get<double>()};
    }
    r.classes.push_back(std::move(c));
  }
  const json& counts = doc.at("counts");
  r.isolated = counts.at("isolated").get<int>();
  r.linear = counts.at("linear").get<int>();
  r.hyperboloidal = counts.at("hyperboloidal").get<int>();
  if (doc.contains("certification")) {
    const json& jc = doc.at("certification");
    r.certification = RenderedCertification{jc.at("passed").get<bool>(), jc.at("worst_residual").get<double>(),
                                            jc.at("failures").get<std::vector<std::string>>()};
  }
  return r;
}

std::string to_text(const RenderedReport& r) {
  std::ostringstream out;
  out << "degree: " << r.degree << '\n';
  out << "companion polynomial (ascending):";
  for (double c : r.companion) out << ' ' << num(c);
  out << '\n';
  out << "companion roots:\n";
  for (const auto& root : r.roots) {
    out << "  " << num(root.re);
    if (root.im != 0.0) out << signed_term(root.im, "i");
    out << "  (multiplicity " << root.multiplicity << ")\n";
  }
  out << "admissible classes: " << r.classes.size() << '\n';
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    out << "  [" << i << "] q0=" << num(c.q0) << " dv=" << num(c.dv) << ' ' << c.type << ' ' << c.kind
        << " (branch " << c.branch << ")";
    if (c.z) out << ": z = " << coquaternion_text(*c.z);
    if (c.line) {
      const double s = c.q0 - c.line->gamma0;
      out << ": z(t) = " << num(c.q0) << " + t i + (" << num(c.line->k2) << " t" << signed_term(c.line->k1 * s, "")
          << ") j + (" << num(-c.line->k1) << " t" << signed_term(c.line->k2 * s, "") << ") k"
          << "  [gamma0=" << num(c.line->gamma0) << " k1=" << num(c.line->k1) << " k2=" << num(c.line->k2) << "]";
    }
    if (c.kind == "hyperboloidal") out << ": every element of the class";
    out << '\n';
  }
  out << "counts: isolated=" << r.isolated << " linear=" << r.linear << " hyperboloidal=" << r.hyperboloidal
      << '\n';
  if (r.certification) {
    out << "certification: " << (r.certification->passed ? "passed" : "FAILED")
        << " (worst residual " << num(r.certification->worst_residual) << ")\n";
    for (const auto& f : r.certification->failures) out << "  " << f << '\n';
  }
  return out.str();
}

}  // namespace coqroots
