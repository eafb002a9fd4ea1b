#pragma once

#include <stdexcept>
#include <string>

namespace korobov {

/// Argument outside the mathematical domain of an operation (x <= 1 for zeta, eps outside (0,1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Query past the end of an explicitly listed weight sequence.
class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A computation would exceed its configured work or memory cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called on an input where its defining condition does not hold
/// (e.g. asking for the SPT exponent of a space that is not SPT).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Weight sequence lacks the asymptotic metadata an operation needs.
class MissingMetadataError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A Fourier polynomial whose support hits an index with r(k) = 0.
class NotInSpaceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace korobov
