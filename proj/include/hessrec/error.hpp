#pragma once

#include <stdexcept>
#include <string>

namespace hessrec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Mesh or stencil text that does not follow the interchange format.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

/// Least-squares design matrix without full column rank.
class RankDeficient : public Error {
public:
  using Error::Error;
};

/// Linear solver breakdown or residual above tolerance.
class SolverFailure : public Error {
public:
  SolverFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const { return residual_; }

private:
  double residual_;
};

} // namespace hessrec
