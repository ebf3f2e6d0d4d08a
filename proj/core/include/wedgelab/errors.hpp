#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wedgelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or search budget was exhausted. This never means that
/// the mathematical object does not exist.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotAMorphism : public Error {
 public:
  using Error::Error;
};

class ParameterViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class HypothesisFailed : public Error {
 public:
  using Error::Error;
};

class NotAI : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace wedgelab
