#pragma once

#include <stdexcept>
#include <string>

namespace xlk {

enum class ErrorKind {
  UnboundGenerator,
  Domain,
  Parse,
  StrandMismatch,
  LengthMismatch,
  Parity,
  NotCoprime,
  UnequalTraces,
  Reducible,
  DegenerateLift,
  NoPoints,
  NotAKnot,
  Orientation,
  Convention,
  NoIntertwiner,
  Degenerate,
  Inconclusive,
  IndeterminateRank,
  StencilResidual,
  Propagation,
  RootFinding,
  Divergence,
  Io,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace xlk
