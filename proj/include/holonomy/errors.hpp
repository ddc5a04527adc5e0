#ifndef HOLONOMY_ERRORS_HPP
#define HOLONOMY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace holonomy {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid mathematical input (pole of a formula, out-of-range trace, n = 0 slope, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Malformed text input (polynomial syntax, rational literals).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A configured resource cap was hit; names the cap so callers can react.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& cap, const std::string& msg)
      : Error("cap '" + cap + "' exceeded: " + msg), cap_(cap) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

// An identity or containment the published results guarantee failed to verify.
// Reaching this is a hard failure: either the implementation or the published
// data is wrong, and no certificate may be emitted.
class ContradictionError : public Error {
 public:
  explicit ContradictionError(const std::string& msg) : Error(msg) {}
};

}  // namespace holonomy

#endif
