#pragma once

#include <stdexcept>
#include <string>

#include "critline/complex.hpp"

namespace critline {

// Root of every contract violation this library raises.  kind() is the
// stable machine-readable tag the CLI writes into error reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

class OverflowError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "overflow"; }
};

// Evaluation requested at (or within pole_eps of) a pole; carries the pole
// location so callers can report which singularity was hit.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, Complex at) : Error(what), at_(at) {}
  const char* kind() const noexcept override { return "pole"; }
  Complex at() const noexcept { return at_; }

 private:
  Complex at_;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degenerate"; }
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "convergence"; }
};

// Signals an implementation bug (a checked internal consistency bound was
// exceeded), never a mathematical fact about the input.
class InternalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal"; }
};

}  // namespace critline
