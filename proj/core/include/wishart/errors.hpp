#ifndef WISHART_ERRORS_HPP
#define WISHART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wishart {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input-side problems: bad arguments, malformed files, mismatched shapes.
/// CLI maps these to exit code 2.
class input_error : public error {
public:
  using error::error;
};

/// Numerical failures: poles, indefinite matrices, root finding, overflow.
/// CLI maps these to exit code 3.
class numerical_error : public error {
public:
  using error::error;
};

class pole_error : public numerical_error {
public:
  using numerical_error::numerical_error;
};

class not_positive_definite_error : public numerical_error {
public:
  using numerical_error::numerical_error;
};

class degenerate_sample_error : public numerical_error {
public:
  using numerical_error::numerical_error;
};

class no_root_error : public numerical_error {
public:
  using numerical_error::numerical_error;
};

class overflow_error : public numerical_error {
public:
  using numerical_error::numerical_error;
};

class dimension_mismatch_error : public input_error {
public:
  using input_error::input_error;
};

class domain_error : public input_error {
public:
  using input_error::input_error;
};

/// Operation asked for an entropy kind it cannot serve (e.g. Tsallis variance).
class unsupported_kind_error : public input_error {
public:
  using input_error::input_error;
};

class io_error : public input_error {
public:
  using input_error::input_error;
};

} // namespace wishart

#endif
