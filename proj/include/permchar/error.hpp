#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace permchar {

enum class ErrorCode {
  NotABijection,
  ParseError,
  PointOutOfRange,
  NonPositivePoint,
  RepeatedPoint,
  DegreeMismatch,
  OrderCapExceeded,
  SweepCapExceeded,
  NotASubgroup,
  NotInGroup,
  NotNormal,
  NotNormalInH,
  NotNormalInGeneratedH,
  GroupMismatch,
  UnknownName,
  CatalogOrderMismatch,
  ProductOverflow,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
/// `line()` is nonzero only for errors attributed to a line of a group file.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(format(code, message, line)), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(ErrorCode code, const std::string& message, std::size_t line) {
    std::string out(to_string(code));
    if (line != 0) out += " at line " + std::to_string(line);
    out += ": ";
    out += message;
    return out;
  }

  ErrorCode code_;
  std::size_t line_;
};

}  // namespace permchar
