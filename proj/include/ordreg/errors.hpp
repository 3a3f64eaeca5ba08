#pragma once

#include <stdexcept>
#include <string>

namespace ordreg {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const { return "Error"; }
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
  const char* kind() const override { return "DimensionMismatch"; }
};

class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(const std::string& what) : Error(what) {}
  const char* kind() const override { return "NotPositiveDefinite"; }
};

class OutOfDomain : public Error {
 public:
  explicit OutOfDomain(const std::string& what) : Error(what) {}
  const char* kind() const override { return "OutOfDomain"; }
};

class DegenerateDenominator : public Error {
 public:
  explicit DegenerateDenominator(const std::string& what) : Error(what) {}
  const char* kind() const override { return "DegenerateDenominator"; }
};

class NonMonotone : public Error {
 public:
  explicit NonMonotone(const std::string& what) : Error(what) {}
  const char* kind() const override { return "NonMonotone"; }
};

class NonFinite : public Error {
 public:
  explicit NonFinite(const std::string& what) : Error(what) {}
  const char* kind() const override { return "NonFinite"; }
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& what) : Error(what) {}
  const char* kind() const override { return "TooLarge"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  const char* kind() const override { return "ParseError"; }
  long line() const { return line_; }

 private:
  long line_;
};

class IndexError : public Error {
 public:
  IndexError(const std::string& what, long line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  const char* kind() const override { return "IndexError"; }
  long line() const { return line_; }

 private:
  long line_;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& what) : Error(what) {}
  const char* kind() const override { return "UnknownLabel"; }
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
  const char* kind() const override { return "IoError"; }
};

}  // namespace ordreg
