#pragma once

#include <stdexcept>
#include <string>

namespace tbp {

/// Base of every error raised by the library. The category determines the
/// CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

/// Invalid numeric configuration (R <= 0, alpha outside (0,1), ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Caller misuse: empty series, mismatched lengths, bad flag combinations.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed FASTA, annotation or segment files.
class InputFormatError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// Sn or Sp requested on a truth labeling that lacks one of the classes.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// Spectrum background requested for a prefix shorter than two bases.
class UndefinedBackgroundError : public Error {
 public:
  using Error::Error;
};

}  // namespace tbp
