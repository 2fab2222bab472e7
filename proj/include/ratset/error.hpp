#ifndef RATSET_ERROR_HPP
#define RATSET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ratset {

enum class ErrorCode {
  InvalidArgument,
  UndefinedQuotient,
  AlphabetMismatch,
  Parse,
  Precondition,
  ResourceCap,
  Cancelled,
  Io,
};

// Single exception type for the library; the C API maps `code()` onto its
// status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ratset

#endif  // RATSET_ERROR_HPP
