#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toricarc/integer.hpp"

namespace toricarc {

/// Power series in s with integer coefficients, truncated modulo s^(order+1).
class Series {
 public:
  explicit Series(std::size_t order);
  Series(std::vector<Int> coefficients, std::size_t order);

  /// 1/(1-s)^r.
  static Series inverse_power_of_one_minus_s(std::size_t r, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Int& coefficient(std::size_t k) const { return coeffs_.at(k); }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  Series operator+(const Series& other) const;
  Series operator*(const Series& other) const;
  bool operator==(const Series& other) const = default;

  /// "1 + 2*s^2 + 3*s^4"
  std::string to_string() const;

 private:
  std::vector<Int> coeffs_;
};

}  // namespace toricarc
