#pragma once

#include <string>
#include <vector>

#include "xlk/certify.hpp"
#include "xlk/diagram.hpp"

namespace xlk {

// Certificate JSON, schema "xlk-certificate" version 1.
//
// Top level: schema, version, artifact_version, pipeline, construction
// (I | II | parabolic | none), name, input, config, derived, points,
// verdict. Numbers are written with round-trip precision and no field
// depends on wall-clock time, so equal inputs give equal bytes.
constexpr int kCertificateVersion = 1;

Json complex_json(Complex z);  // [re, im]
Complex json_complex(const Json& j);
Json mat_json(const CMat& m);  // [[a, b], [c, d]] of [re, im]
Json rank_json(const RankResult& r);
Json hypothesis_json(const HypothesisReport& r);

Json certificate_skeleton(const std::string& pipeline, const std::string& construction, const std::string& name);

// Pretty JSON with a trailing newline.
std::string emit_certificate(const Json& cert);
void write_text(const std::string& path, const std::string& text);
Json read_json(const std::string& path);

// Field-by-field comparison; numbers agree when
// |x - y| <= rtol * max(|x|, |y|) + atol.
std::vector<std::string> compare_json(const Json& stored, const Json& fresh, double rtol = 1e-8,
                                      double atol = 1e-12);

// Recomputes ranks, gaps and verdict flags from the stored numbers.
std::vector<std::string> certificate_consistency(const Json& cert);

}  // namespace xlk
