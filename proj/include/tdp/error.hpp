#pragma once

#include <stdexcept>
#include <string>

namespace tdp {

enum class ErrorKind {
  InvalidGerm,
  InvalidChain,
  NotTSingularity,
  NotDuVal,
  InvalidFan,
  NotNefBig,
  InvalidWeights,
  InvalidEquation,
  MutationUndefined,
  InvalidDeformation,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tdp
