#pragma once

#include <stdexcept>
#include <string>

namespace floorcount {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PolygonErrc {
  not_convex,
  not_two_dimensional,
  not_h_transverse,
  closure_violated,
  width_violated,
  empty_height,
};

const char* to_string(PolygonErrc code);

class PolygonError : public Error {
 public:
  PolygonError(PolygonErrc code, const std::string& detail)
      : Error(std::string(to_string(code)) + ": " + detail), code_(code) {}
  PolygonErrc code() const noexcept { return code_; }

 private:
  PolygonErrc code_;
};

/// A parameter (genus, number of conjugate pairs, degree, ...) is out of range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& detail)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + detail : detail), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A diagram or marking failed semantic validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

enum class ConsistencyErrc {
  non_integral_orbit_count,
  odd_parity,
  representative_dependence,
};

const char* to_string(ConsistencyErrc code);

/// Raised when a combinatorial identity the counting relies on fails.
/// These are never rounded or absorbed.
class ConsistencyError : public Error {
 public:
  ConsistencyError(ConsistencyErrc code, const std::string& detail)
      : Error(std::string(to_string(code)) + ": " + detail), code_(code) {}
  ConsistencyErrc code() const noexcept { return code_; }

 private:
  ConsistencyErrc code_;
};

}  // namespace floorcount
