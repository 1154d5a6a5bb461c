#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gessel {

using BigInt = boost::multiprecision::cpp_int;

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (multiset specs, words, tree strings, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A well-formed argument outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structure that fails its invariants; carries one message per violation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace gessel
