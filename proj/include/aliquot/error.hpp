#pragma once

#include <stdexcept>
#include <string>

namespace aliquot {

// Bad input: a precondition of the called operation does not hold.
// The CLI maps this to exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  ParameterError(std::string parameter, const std::string& message)
      : std::invalid_argument(parameter + ": " + message), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

// The request is well formed but exceeds a configured memory/size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A 64-bit intermediate would wrap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace aliquot
