#pragma once

#include <stdexcept>
#include <string>

namespace dspforge {

enum class ErrorCode {
  Parse,
  OutOfRange,
  Parameter,
  Variant,
  DoubleApplication,
  Cycle,
  MissingPosition,
  Disconnected,
  Budget,
  Decode,
  NotClique,
  Schema,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dspforge
