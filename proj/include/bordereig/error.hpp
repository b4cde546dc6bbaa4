#pragma once

#include <stdexcept>
#include <string>

namespace bordereig {

/// Base class for all library errors. `kind()` is a stable machine-readable
/// tag used by the CLI when it reports failures as JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& message) : Error("size_limit", message) {}
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& message)
      : Error("invalid_argument", message) {}
};

class DuplicateIndexError : public Error {
 public:
  explicit DuplicateIndexError(const std::string& message) : Error("duplicate_index", message) {}
};

class ClosureViolationError : public Error {
 public:
  explicit ClosureViolationError(const std::string& message)
      : Error("closure_violation", message) {}
};

class UnknownRelationError : public Error {
 public:
  explicit UnknownRelationError(const std::string& message)
      : Error("unknown_relation", message) {}
};

/// Schema violation while reading JSON. `path()` is a JSON pointer to the
/// offending field ("" for the document root).
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error("parse", path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& message, long matrix_size, long deflated_size)
      : Error("non_convergence", message),
        matrix_size_(matrix_size),
        deflated_size_(deflated_size) {}

  long matrix_size() const noexcept { return matrix_size_; }
  /// Size of the trailing block of the Schur form that had converged.
  long deflated_size() const noexcept { return deflated_size_; }

 private:
  long matrix_size_;
  long deflated_size_;
};

class DegenerateSpectrumError : public Error {
 public:
  explicit DegenerateSpectrumError(const std::string& message)
      : Error("degenerate_spectrum", message) {}
};

}  // namespace bordereig
