#pragma once

#include <stdexcept>
#include <string>

namespace toricarc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, values outside a precondition. CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computed consistency check failed. CLI exit code 1.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class InvariantError : public InputError {
 public:
  using InputError::InputError;
};

/// Fan does not satisfy the smooth + facet-paired precondition.
class InvalidFan : public InputError {
 public:
  using InputError::InputError;
};

class NotFano : public InputError {
 public:
  using InputError::InputError;
};

class TorsionCokernel : public InputError {
 public:
  using InputError::InputError;
};

class NonPointed : public InputError {
 public:
  using InputError::InputError;
};

class NotInAPlus : public InputError {
 public:
  using InputError::InputError;
};

class NotNested : public InputError {
 public:
  using InputError::InputError;
};

class ZeroQSpec : public InputError {
 public:
  using InputError::InputError;
};

class NotHomogeneous : public InputError {
 public:
  using InputError::InputError;
};

class InfiniteDimension : public InputError {
 public:
  using InputError::InputError;
};

/// Reduction step budget exhausted during a Groebner computation.
class BudgetExceeded : public InputError {
 public:
  using InputError::InputError;
};

class MismatchWithHVector : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class RankMismatch : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class VerificationFailed : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

}  // namespace toricarc
