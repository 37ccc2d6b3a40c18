#pragma once

#include <stdexcept>
#include <string>

namespace ekzero {

// Error taxonomy shared by the whole library. Validation errors are rejected
// inputs (CLI exit code 2); numeric errors are solver failures or violated
// solvability assumptions detected at run time (CLI exit code 3).
enum class errc {
  non_positive_coefficient,
  too_short,
  degenerate_tail,
  non_convergence,
  no_positive_root,
  multiple_positive_roots,
  epsilon_out_of_range,
  hypothesis_violated,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class validation_error : public error {
 public:
  using error::error;
};

class numeric_error : public error {
 public:
  using error::error;
};

}  // namespace ekzero
