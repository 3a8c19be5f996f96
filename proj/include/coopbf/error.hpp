#ifndef COOPBF_ERROR_HPP
#define COOPBF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace coopbf {

enum class ErrorCode {
  InvalidArgument,
  DivisionByZero,
  DegenerateChannel,
  InfeasibleAllocation,
};

/// Exception type raised by every core routine. The C API maps `code()` onto
/// its status enum.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) {
    fail(ErrorCode::InvalidArgument, what);
  }
}

}  // namespace coopbf

#endif  // COOPBF_ERROR_HPP
