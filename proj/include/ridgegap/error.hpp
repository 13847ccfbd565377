#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ridgegap {

/// Base class of every error raised by the library.  `kind()` is a stable
/// machine-readable tag that the CLI copies into its JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Malformed user input (bad flags, bad JSON, violated preconditions).
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error("InvalidInput", what) {}
};

class SingularDirections : public Error {
 public:
  explicit SingularDirections(const std::string& what)
      : Error("SingularDirections", what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what)
      : Error("IndexOutOfRange", what) {}
};

class DuplicatePoint : public Error {
 public:
  explicit DuplicatePoint(const std::string& what)
      : Error("DuplicatePoint", what) {}
};

class MissingLevel : public Error {
 public:
  explicit MissingLevel(const std::string& what) : Error("MissingLevel", what) {}
};

class SolverStall : public Error {
 public:
  explicit SolverStall(const std::string& what) : Error("SolverStall", what) {}
};

class CombinatorialBlowup : public Error {
 public:
  explicit CombinatorialBlowup(const std::string& what)
      : Error("CombinatorialBlowup", what) {}
};

class UnknownActivation : public Error {
 public:
  explicit UnknownActivation(const std::string& what)
      : Error("UnknownActivation", what) {}
};

/// The activation is mean periodic, so its shift span is not dense and the
/// constructive upper bound does not apply.
class MeanPeriodicActivation : public Error {
 public:
  explicit MeanPeriodicActivation(const std::string& what)
      : Error("MeanPeriodicActivation", what) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& what)
      : Error("SyntaxError", what),
        offset_(offset),
        expected_(std::move(expected)) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t offset, const std::string& what)
      : Error("UnknownIdentifier", what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class DimensionExceeded : public Error {
 public:
  DimensionExceeded(std::size_t offset, const std::string& what)
      : Error("DimensionExceeded", what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation left the domain of an elementary function (log or sqrt of a
/// negative number, division by zero).  `node()` is the printed subexpression.
class DomainError : public Error {
 public:
  DomainError(std::string node, const std::string& what)
      : Error("DomainError", what), node_(std::move(node)) {}
  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

}  // namespace ridgegap
