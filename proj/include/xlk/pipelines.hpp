#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xlk/braid.hpp"
#include "xlk/certificate.hpp"

namespace xlk {

struct RunConfig {
  std::uint64_t seed = 7;
  double tol = 1e-10;     // residual tolerance
  double cutoff = 1e-3;   // rank cutoff, relative
  double gap = 1e6;       // certificate-grade gap ratio
  double min_gap = 1e2;   // below this the rank is indeterminate
  double h = 1e-5;        // finite-difference step
  int count = 5;          // sample or rank points
  int grid = 5;           // grid side for construction I

  Json to_json() const;
  static RunConfig from_json(const Json& j);
  void validate() const;
};

// XLK_DATA_DIR, else the directory bundled at build time.
std::string data_dir();
std::string data_path(const std::string& file);
// data/instances.json
Json instances();

// Reports (no certificate semantics).
Json trace_action_report(const BraidWord& b);
Json quotient_claim_report(const BraidWord& b, const RunConfig& cfg);
Json riley_report(const std::string& two_bridge, const std::vector<Complex>& ms);
Json u_points_report(const BraidWord& b, const RunConfig& cfg);
Json hypothesis_report(const BraidWord& b, const Involution& tau, const RunConfig& cfg);
Json turks_head_report(int p, int q, bool certify, const RunConfig& cfg);

// Certificates.
Json construction1_certificate(const std::string& name, const std::string& link_file, const std::string& crossing,
                               const std::string& tangle, const RunConfig& cfg, const std::string& note = "");
Json construction2_certificate(const std::string& name, const BraidWord& b, const Involution& tau,
                               const RunConfig& cfg);
Json parabolic_certificate(const std::string& name, const std::string& link_file, const std::string& c1,
                           const std::string& c2, const std::string& r1, const std::string& r2, const RunConfig& cfg,
                           const std::string& note = "");

// Bundled instances; each returns a bundle {"schema": "xlk-bundle", "certificates": [...]}.
Json certify_10_98(const RunConfig& cfg);
Json certify_10_99(const RunConfig& cfg);
Json certify_10_123(const RunConfig& cfg);
Json certify_parabolic(const RunConfig& cfg);

// Whether every verdict in a certificate or bundle passed.
bool certificate_passed(const Json& j);

// Re-runs the recorded pipeline and compares field by field; accepts a
// single certificate or a bundle.
struct VerifyReport {
  bool ok = false;
  std::vector<std::string> problems;
};
Json rerun_certificate(const Json& cert);
VerifyReport verify_certificate(const Json& cert);

}  // namespace xlk
