#pragma once

#include <stdexcept>
#include <string>

namespace concbound {

// Validation failures (bad shapes, out-of-range arguments, invalid states)
// derive from ValidationError; everything the numerics cannot resolve
// derives from NumericalError. The CLI maps the two families to distinct
// exit codes.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class SizeLimitError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class HermiticityError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NotPsdError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class IoError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

// Raised when two quantities cannot be brought to a common normalization.
class ContractError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace concbound
