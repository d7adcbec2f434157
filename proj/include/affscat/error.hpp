#pragma once

#include <stdexcept>
#include <string>

namespace affscat {

enum class ErrorCode {
  InvalidInput,
  NotSkewSymmetrizable,
  NotAcyclic,
  NotAffine,
  NotInitial,
  NotSortable,
  NotAlmostPositive,
  HeightInsufficient,
  CapExceeded,
  MixedNormals,
  DegenerateFace,
  Unsupported,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace affscat
