#include "qchom/count.hpp"

#include <stdexcept>

namespace qchom {

std::string to_decimal(const Rational& r) {
  const Count num = boost::multiprecision::numerator(r);
  const Count den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Count factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Count r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Count falling(int n, int k) {
  if (k < 0) throw std::invalid_argument("falling factorial with negative length");
  Count r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Count power(const Count& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

}  // namespace qchom
