#ifndef COXSTAR_ERRORS_HPP_
#define COXSTAR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace coxstar {

// Bad input: malformed graph, out-of-range generator, non-reduced word where a
// reduced one is required, and so on.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A structural identity that must hold was found violated at runtime.
class VerificationError : public std::logic_error {
 public:
  explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

// A bounded search ran out of budget before reaching a verdict.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coxstar

#endif  // COXSTAR_ERRORS_HPP_
