#pragma once

#include <stdexcept>
#include <string>

namespace bures {

// Argument outside the mathematical domain of a function (x <= 0 for the
// polygammas, negative trace, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Ensemble or identity parameters violate their invariants.
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A data value (spectrum, sample) violates its invariants.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters at which a quantity is defined but carries no information,
// e.g. standardizing with zero variance at m = 1.
class degenerate_parameter_error : public parameter_error {
 public:
  using parameter_error::parameter_error;
};

class lookup_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}
  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

// Kernel context failed its biorthogonality self-check.
class construction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class tuning_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bures
