#ifndef CVSTEER_ERRORS_HPP
#define CVSTEER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvsteer {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Truncation dimension is too small or otherwise unusable.
class InvalidDim : public Error {
 public:
  explicit InvalidDim(const std::string& msg) : Error(msg) {}
};

// State or operator mass beyond the truncation exceeds the tail tolerance.
class TruncationError : public Error {
 public:
  explicit TruncationError(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class NonHermitianOperator : public Error {
 public:
  explicit NonHermitianOperator(const std::string& msg) : Error(msg) {}
};

// A value strayed further from its valid range than floating-point noise
// can explain (e.g. a probability below -1e-10).
class NumericalConsistencyError : public Error {
 public:
  explicit NumericalConsistencyError(const std::string& msg) : Error(msg) {}
};

// Conditioning event has (numerically) zero probability.
class DegenerateConditioning : public Error {
 public:
  explicit DegenerateConditioning(const std::string& msg) : Error(msg) {}
};

class EmptyGrid : public Error {
 public:
  explicit EmptyGrid(const std::string& msg) : Error(msg) {}
};

class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

class InvalidDistribution : public Error {
 public:
  explicit InvalidDistribution(const std::string& msg) : Error(msg) {}
};

// State file failed schema or invariant validation.
class StateFormatError : public Error {
 public:
  explicit StateFormatError(const std::string& msg) : Error(msg) {}
};

}  // namespace cvsteer

#endif
