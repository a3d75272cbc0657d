#pragma once

#include <stdexcept>
#include <string>

namespace ttp {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input stream; carries the 1-based position of the offending token.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

// Argument outside the operation's domain (odd n, k out of range, ...).
struct DomainError : Error {
  using Error::Error;
};

// Distance matrix fails a metric invariant; message names the violating
// pair or triple.
struct MetricError : Error {
  using Error::Error;
};

// Request exceeds what the implementation supports (e.g. exact TSP size).
struct CapabilityError : Error {
  using Error::Error;
};

// Schedule is not structurally well-formed (wrong day count, a day that is
// not a perfect matching). Distinct from constraint violations, which the
// validator reports rather than throws.
struct StructuralError : Error {
  using Error::Error;
};

// Internal feasibility assertion of the construction failed. Must never fire.
struct ConstructionDefect : Error {
  using Error::Error;
};

}  // namespace ttp
