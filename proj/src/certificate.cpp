#include "xlk/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace xlk {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex json_complex(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0);
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::Parse, "complex number must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json mat_json(const CMat& m) {
  return Json::array({Json::array({complex_json(m.a), complex_json(m.b)}),
                      Json::array({complex_json(m.c), complex_json(m.d)})});
}

Json rank_json(const RankResult& r) {
  return {{"singular_values", r.singular_values},
          {"rank", r.rank},
          {"gap", r.gap},
          {"certificate_grade", r.certificate_grade},
          {"stencil_residual", r.stencil_residual}};
}

Json hypothesis_json(const HypothesisReport& r) {
  Json klein = Json::array();
  for (const auto& k : r.klein)
    klein.push_back({{"name", k.name},
                     {"a_word", k.a_word.to_string(generator_names(0))},
                     {"b_word", k.b_word.to_string(generator_names(0))},
                     {"relation_residual", k.relation_residual},
                     {"commutator_gap", k.commutator_gap},
                     {"case", static_cast<int>(k.kase)},
                     {"irreducible", k.irreducible}});
  return {{"condition_a", r.condition_a},
          {"condition_b", r.condition_b},
          {"inconclusive", r.inconclusive},
          {"label", r.inconclusive ? "inconclusive"
                                   : (r.condition_a && r.condition_b ? "hypothesis verified" : "hypothesis not verified")},
          {"diagnostics", r.diagnostics},
          {"klein", klein},
          {"witness_b", {{"first", r.witness_b.first}, {"second", r.witness_b.second}, {"gap", r.witness_b.gap}}},
          {"A_square_residual", r.A_square_residual},
          {"closure_relation_residual", r.closure_relation_residual}};
}

Json certificate_skeleton(const std::string& pipeline, const std::string& construction, const std::string& name) {
  Json j;
  j["schema"] = "xlk-certificate";
  j["version"] = kCertificateVersion;
  j["artifact_version"] = XLK_VERSION;
  j["pipeline"] = pipeline;
  j["construction"] = construction;
  j["name"] = name;
  j["evidence"] = "numeric residual and finite-difference rank data; not interval-validated";
  return j;
}

std::string emit_certificate(const Json& cert) { return cert.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorKind::Io, "write failed for " + path);
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Io, "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

namespace {

void compare_rec(const Json& a, const Json& b, const std::string& path, double rtol, double atol,
                 std::vector<std::string>& out) {
  if (a.is_number() && b.is_number()) {
    double x = a.get<double>(), y = b.get<double>();
    if (std::isnan(x) || std::isnan(y) || std::abs(x - y) > rtol * std::max(std::abs(x), std::abs(y)) + atol) {
      std::ostringstream s;
      s.precision(17);
      s << path << ": stored " << x << ", recomputed " << y;
      out.push_back(s.str());
    }
    return;
  }
  if (a.type() != b.type()) {
    out.push_back(path + ": type differs");
    return;
  }
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) out.push_back(path + "/" + it.key() + ": not recomputed");
      else compare_rec(it.value(), b.at(it.key()), path + "/" + it.key(), rtol, atol, out);
    }
    for (auto it = b.begin(); it != b.end(); ++it)
      if (!a.contains(it.key())) out.push_back(path + "/" + it.key() + ": missing from certificate");
    return;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) {
      out.push_back(path + ": length " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
      return;
    }
    for (std::size_t k = 0; k < a.size(); ++k) compare_rec(a[k], b[k], path + "/" + std::to_string(k), rtol, atol, out);
    return;
  }
  if (a != b) out.push_back(path + ": stored " + a.dump() + ", recomputed " + b.dump());
}

void check_rank(const Json& r, const Json& config, const std::string& path, std::vector<std::string>& out) {
  auto sv = r.at("singular_values").get<std::vector<double>>();
  double cutoff = config.value("cutoff", 1e-3), cert_gap = config.value("gap", 1e6);
  double top = sv.empty() ? 0 : sv.front();
  double cut = cutoff * std::max(top, 1.0), floor = 1e-10 * std::max(top, 1.0);
  int rank = 0;
  for (double s : sv)
    if (s > cut) ++rank;
  double accepted = rank > 0 ? sv[rank - 1] : cut;
  double rejected = rank < static_cast<int>(sv.size()) ? sv[rank] : 0.0;
  double gap = accepted / std::max(rejected, floor);
  if (rank != r.at("rank").get<int>()) out.push_back(path + "/rank: inconsistent with singular values");
  if (std::abs(gap - r.at("gap").get<double>()) > 1e-9 * gap) out.push_back(path + "/gap: inconsistent with singular values");
  if ((gap >= cert_gap) != r.at("certificate_grade").get<bool>())
    out.push_back(path + "/certificate_grade: inconsistent with gap");
}

}  // namespace

std::vector<std::string> compare_json(const Json& stored, const Json& fresh, double rtol, double atol) {
  std::vector<std::string> out;
  compare_rec(stored, fresh, "", rtol, atol, out);
  return out;
}

std::vector<std::string> certificate_consistency(const Json& cert) {
  std::vector<std::string> out;
  if (cert.value("schema", "") != "xlk-certificate") out.push_back("/schema: not an xlk certificate");
  if (cert.value("version", 0) != kCertificateVersion) out.push_back("/version: unsupported");
  for (const char* key : {"pipeline", "input", "config", "points", "verdict"})
    if (!cert.contains(key)) out.push_back(std::string("/") + key + ": missing");
  if (!out.empty()) return out;
  const Json& config = cert.at("config");
  double max_res = 0;
  const auto& pts = cert.at("points");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& p = pts[k];
    if (p.contains("residual")) max_res = std::max(max_res, p.at("residual").get<double>());
    if (p.contains("rank")) check_rank(p.at("rank"), config, "/points/" + std::to_string(k) + "/rank", out);
  }
  const auto& v = cert.at("verdict");
  if (v.contains("max_residual") && std::abs(v.at("max_residual").get<double>() - max_res) > 1e-12 * std::max(1.0, max_res))
    out.push_back("/verdict/max_residual: inconsistent with points");
  return out;
}

}  // namespace xlk
