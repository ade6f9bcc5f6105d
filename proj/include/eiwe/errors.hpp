#pragma once

#include <stdexcept>
#include <string>

namespace eiwe {

// Invalid arguments are reported with std::invalid_argument directly.

// An eigensolver or matrix inversion failed to produce a usable result.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A truncated Fock-space computation lost more probability weight than the
// caller's bound allows.  `defect` is the measured 1 - trace.
struct TruncationError : std::runtime_error {
  TruncationError(const std::string& what, double defect_)
      : std::runtime_error(what), defect(defect_) {}
  double defect;
};

// A conditional state could not be normalized (outcome probability below
// 1e-300).
struct DegenerateOutcome : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eiwe
