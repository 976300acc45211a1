#pragma once

#include <stdexcept>
#include <string>

namespace leonard {

class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand shapes do not agree (ambient dimensions, sequence lengths).
class dimension_error : public error {
 public:
  using error::error;
};

/// Malformed textual input: bad rational literal, bad JSON, bad D4 word.
class parse_error : public error {
 public:
  using error::error;
};

/// The data does not form the parameter array of a Leonard system.
class invalid_array_error : public error {
 public:
  using error::error;
};

/// A family constructor was given parameters for which the family degenerates.
class degenerate_parameters : public invalid_array_error {
 public:
  using invalid_array_error::invalid_array_error;
};

/// Raised when the EKR basis is undefined: base q = -1 with d odd.
class inadmissible_error : public error {
 public:
  using error::error;
};

/// An identity that must hold for every valid input failed.
class consistency_error : public error {
 public:
  using error::error;
};

class hypergeometric_error : public error {
 public:
  using error::error;
};

}  // namespace leonard
