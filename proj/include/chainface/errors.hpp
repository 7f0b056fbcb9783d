#pragma once

#include <stdexcept>
#include <string>

namespace chainface {

struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LabelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WitnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EqualChainsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotApplicableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceededError : std::runtime_error {
  CapExceededError(const std::string& msg, int count_)
      : std::runtime_error(msg), count(count_) {}
  int count;
};
struct NotClosedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNestedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingWeightError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace chainface
