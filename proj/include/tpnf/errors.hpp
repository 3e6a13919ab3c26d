#pragma once

#include <stdexcept>
#include <string>

namespace tpnf {

/// Malformed or out-of-range input: bad index, singular matrix, bad rational,
/// dimension mismatch. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A bracket that is not TP(alpha_2, ..., alpha_n) for any alpha.
class NotInFamilyError : public std::runtime_error {
 public:
  NotInFamilyError(int i, int j, int k, std::string expected, std::string actual)
      : std::runtime_error("bracket not in TP family: coefficient of e" + std::to_string(k) +
                           " in [e" + std::to_string(i) + ",e" + std::to_string(j) + "] is " +
                           actual + ", family requires " + expected),
        i_(i), j_(j), k_(k), expected_(std::move(expected)), actual_(std::move(actual)) {}

  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }
  const std::string& expected() const { return expected_; }
  const std::string& actual() const { return actual_; }

 private:
  int i_, j_, k_;
  std::string expected_, actual_;
};

}  // namespace tpnf
