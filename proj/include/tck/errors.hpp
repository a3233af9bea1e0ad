#ifndef TCK_ERRORS_HPP
#define TCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tck {

/// Failure categories. The CLI maps each onto a distinct exit status.
enum class ErrorKind {
  Parse,
  InvariantViolation,
  SizeGuard,
  Unsolvable,
  VerificationFailure,
  InternalInconsistency,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error invariant_error(const std::string& what) { return {ErrorKind::InvariantViolation, what}; }
inline Error parse_error(const std::string& what) { return {ErrorKind::Parse, what}; }
inline Error size_guard_error(const std::string& what) { return {ErrorKind::SizeGuard, what}; }
inline Error internal_error(const std::string& what) { return {ErrorKind::InternalInconsistency, what}; }

}  // namespace tck

#endif  // TCK_ERRORS_HPP
