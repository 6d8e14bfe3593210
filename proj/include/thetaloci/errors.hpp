#ifndef THETALOCI_ERRORS_HPP
#define THETALOCI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thetaloci {

// Two error families: ValidationError for malformed or out-of-contract inputs,
// NumericError for breakdowns of an otherwise valid computation. The CLI maps
// them to exit codes 2 and 3 respectively.

class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotSymmetric : public ValidationError {
  public:
    explicit NotSymmetric(double asymmetry)
        : ValidationError("matrix is not symmetric (max |a_ij - a_ji| = " +
                          std::to_string(asymmetry) + ")"),
          asymmetry_(asymmetry) {}
    double asymmetry() const { return asymmetry_; }

  private:
    double asymmetry_;
};

class NotPositiveDefinite : public ValidationError {
  public:
    explicit NotPositiveDefinite(double min_eigenvalue)
        : ValidationError("imaginary part is not positive definite (min eigenvalue = " +
                          std::to_string(min_eigenvalue) + ")"),
          min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const { return min_eigenvalue_; }

  private:
    double min_eigenvalue_;
};

class BadArity : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NotOdd : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NotEven : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class SingularFactor : public NumericError {
  public:
    using NumericError::NumericError;
};

class ToleranceUnreachable : public NumericError {
  public:
    using NumericError::NumericError;
};

class NoRootFound : public NumericError {
  public:
    using NumericError::NumericError;
};

class BaseNotThetaNull : public NumericError {
  public:
    using NumericError::NumericError;
};

class NotOnTsing : public NumericError {
  public:
    using NumericError::NumericError;
};

class NotOnY : public NumericError {
  public:
    using NumericError::NumericError;
};

}  // namespace thetaloci

#endif
