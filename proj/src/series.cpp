#include "toricarc/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricarc {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Int> coefficients, std::size_t order) : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1);
}

Series Series::inverse_power_of_one_minus_s(std::size_t r, std::size_t order) {
  // coefficient of s^k is binomial(k + r - 1, r - 1)
  Series out(order);
  for (std::size_t k = 0; k <= order; ++k) {
    if (r == 0) {
      out.coeffs_[k] = k == 0 ? 1 : 0;
      continue;
    }
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), k + r - 1, r - 1);
    out.coeffs_[k] = b;
  }
  return out;
}

Series Series::operator+(const Series& other) const {
  std::size_t n = std::min(order(), other.order());
  Series out(n);
  for (std::size_t k = 0; k <= n; ++k) out.coeffs_[k] = coeffs_[k] + other.coeffs_[k];
  return out;
}

Series Series::operator*(const Series& other) const {
  std::size_t n = std::min(order(), other.order());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return out;
}

std::string Series::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "s";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace toricarc
