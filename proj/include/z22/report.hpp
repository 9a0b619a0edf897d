#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace z22 {

/// Outcome of an exhaustive check: how many instances were examined and
/// which of them failed. `Failure` carries the location and residual.
template <class Failure>
struct VerificationReport {
  std::string subject;
  std::size_t checked = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

}  // namespace z22
