#include "xlk/gaussian.hpp"

#include "xlk/errors.hpp"

namespace xlk {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnboundGenerator: return "unbound-generator";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::StrandMismatch: return "strand-mismatch";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::Parity: return "parity";
    case ErrorKind::NotCoprime: return "not-coprime";
    case ErrorKind::UnequalTraces: return "unequal-traces";
    case ErrorKind::Reducible: return "reducible";
    case ErrorKind::DegenerateLift: return "degenerate-lift";
    case ErrorKind::NoPoints: return "no-points";
    case ErrorKind::NotAKnot: return "not-a-knot";
    case ErrorKind::Orientation: return "orientation";
    case ErrorKind::Convention: return "convention";
    case ErrorKind::NoIntertwiner: return "no-intertwiner";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Inconclusive: return "inconclusive";
    case ErrorKind::IndeterminateRank: return "indeterminate-rank";
    case ErrorKind::StencilResidual: return "stencil-residual";
    case ErrorKind::Propagation: return "propagation";
    case ErrorKind::RootFinding: return "root-finding";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::Io: return "io";
  }
  return "error";
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Domain, "division by zero");
  mpq_class n = re_ * re_ + im_ * im_;
  return GaussRational(re_ / n, -im_ / n);
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = i;
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw Error(ErrorKind::Domain, "division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string ims;
  if (im_ == 1) ims = "i";
  else if (im_ == -1) ims = "-i";
  else ims = im_.get_str() + "*i";
  if (sgn(re_) == 0) return ims;
  std::string s = "(" + re_.get_str();
  if (sgn(im_) > 0) s += "+";
  return s + ims + ")";
}

}  // namespace xlk
