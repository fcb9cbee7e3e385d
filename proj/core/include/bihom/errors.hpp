#pragma once

#include <stdexcept>
#include <string>

namespace bihom {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class field_mismatch_error : public error {
 public:
  using error::error;
};

class dimension_error : public error {
 public:
  using error::error;
};

class singular_matrix_error : public error {
 public:
  using error::error;
};

// An operation needed a scalar outside the supported exact fields, or a
// field property (such as characteristic != 2) that does not hold.
class unsupported_field_error : public error {
 public:
  using error::error;
};

class precondition_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

}  // namespace bihom
