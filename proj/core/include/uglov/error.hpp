#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uglov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed operand: increasing parts, negative parts, e < 2, level mismatch,
/// component index out of range.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A residue sequence asked for a good addable node that does not exist.
class StepFailure : public Error {
 public:
  StepFailure(std::size_t step, int residue)
      : Error("no good addable " + std::to_string(residue) + "-node at step " +
              std::to_string(step + 1)),
        step_(step),
        residue_(residue) {}

  /// Zero-based position in the sequence.
  std::size_t step() const noexcept { return step_; }
  int residue() const noexcept { return residue_; }

 private:
  std::size_t step_;
  int residue_;
};

/// The multipartition does not belong to the Uglov set for the given charge.
class NotUglovError : public Error {
 public:
  using Error::Error;
};

/// The charge is outside the domain where the FLOTW description holds.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two charges do not lie in one orbit of the extended affine symmetric group.
class OrbitMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace uglov
