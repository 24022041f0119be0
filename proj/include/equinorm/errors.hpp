#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equinorm {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller-side mistakes: malformed text, wrong lengths, violated bounds.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DimensionMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

class LimitExceeded : public UsageError {
 public:
  using UsageError::UsageError;
};

// Well-formed input that falls outside the domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The pivot component of s vanishes, so the chart through that axis does
/// not contain the point. `pivot()` is zero-based.
class DegenerateAxis : public DomainError {
 public:
  explicit DegenerateAxis(std::size_t pivot)
      : DomainError("degenerate axis: s is zero at pivot " + std::to_string(pivot + 1)),
        pivot_(pivot) {}
  DegenerateAxis(std::size_t pivot, const std::string& what) : DomainError(what), pivot_(pivot) {}

  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

class DegenerateSum : public DomainError {
 public:
  using DomainError::DomainError;
};

/// x = -y: s vanishes identically and no chart contains the pair.
class Unrepresentable : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input violates the equation it claims to solve.
class NotASolution : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace equinorm
