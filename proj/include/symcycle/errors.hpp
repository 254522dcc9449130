#pragma once

#include <stdexcept>
#include <string>

namespace symcycle {

/** Base class of every error thrown by this library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ill-formed input: bad ground-set element, length mismatch, bad index.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unparsable text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two topes were expected to be at Hamming distance 1 but are not.
class NotAdjacentError : public Error {
 public:
  using Error::Error;
};

/// A vertex sequence is not a cycle: duplicate vertices or a broken edge.
class NotACycleError : public Error {
 public:
  using Error::Error;
};

/// A vertex sequence violates the antipodal pairing D^(k+t) = -D^k.
class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

/// Coordinates of a purported tope are not ternary with odd support.
class NotATopeError : public Error {
 public:
  using Error::Error;
};

/// A basis matrix is singular, typically because t is odd.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Checked 64-bit arithmetic overflowed; callers fall back to wide integers.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The enumeration oracle and the solver disagree: an invariant is broken.
class OracleContradictionError : public Error {
 public:
  using Error::Error;
};

}  // namespace symcycle
