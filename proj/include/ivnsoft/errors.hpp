#pragma once

#include <stdexcept>
#include <string>

namespace ivnsoft {

/// Base of every error raised by the library. Messages name the offending
/// parameter/object pair whenever the failure is tied to a cell.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInterval : public Error {
 public:
  InvalidInterval(std::string lo, std::string hi, std::string where = {})
      : Error(build(lo, hi, where)), lo_(std::move(lo)), hi_(std::move(hi)), where_(std::move(where)) {}

  const std::string& lo() const noexcept { return lo_; }
  const std::string& hi() const noexcept { return hi_; }
  const std::string& where() const noexcept { return where_; }

 private:
  static std::string build(const std::string& lo, const std::string& hi, const std::string& where) {
    std::string msg = "invalid interval [" + lo + "," + hi + "]";
    if (!where.empty()) msg += " at " + where;
    return msg + ": expected 0 <= lo <= hi <= 1";
  }

  std::string lo_;
  std::string hi_;
  std::string where_;
};

class NonPositiveScalar : public Error {
 public:
  explicit NonPositiveScalar(const std::string& value)
      : Error("scalar must be strictly positive, got " + value) {}
};

class EmptySequence : public Error {
 public:
  EmptySequence() : Error("mean of an empty sequence of intervals") {}
};

class EmptyUniverse : public Error {
 public:
  EmptyUniverse() : Error("universe must contain at least one object") {}
};

class EmptyParameters : public Error {
 public:
  EmptyParameters() : Error("parameter set must contain at least one parameter") {}
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

class ThresholdMismatch : public Error {
 public:
  using Error::Error;
};

class NotTied : public Error {
 public:
  explicit NotTied(const std::string& winner)
      : Error("decision already has a unique winner (" + winner + "); nothing to re-threshold") {}
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace ivnsoft
