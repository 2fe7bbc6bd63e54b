#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kfactor {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph data: index out of range, bad multiplicity, overlapping sets.
class GraphError : public Error {
public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A vertex whose degree is below the requested factor degree.
class DegreeDeficientError : public Error {
public:
  DegreeDeficientError(int vertex, int degree, int k)
      : Error("vertex " + std::to_string(vertex) + " has degree " +
              std::to_string(degree) + " < k = " + std::to_string(k)),
        vertex_(vertex) {}

  int vertex() const noexcept { return vertex_; }

private:
  int vertex_;
};

/// An exhaustive routine was asked to run past its size guard.
class GuardError : public Error {
public:
  using Error::Error;
};

} // namespace kfactor
