#pragma once

#include <stdexcept>
#include <string>

namespace dualnorm {

// An iterative factorization (SVD, Hermitian eigensolver) hit its sweep cap.
class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (non-PSD input to a
// fractional power, exponent outside the admissible range, zero field where a
// normalization is needed).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Binary field operation on fields that live on different dual models, or a
// block whose shape disagrees with the model.
class ModelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration requested beyond its hard cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace dualnorm
