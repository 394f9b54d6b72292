#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qchom/count.hpp"

namespace qchom {

// Integer polynomial in one variable m, coefficients in ascending degree.
// Canonical: no trailing zero coefficient; the zero polynomial is {0}.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  IntPolynomial(std::initializer_list<Count> coeffs) : IntPolynomial(std::vector<Count>(coeffs)) {}
  explicit IntPolynomial(std::vector<Count> coeffs);

  static IntPolynomial constant(const Count& c) { return IntPolynomial(std::vector<Count>{c}); }
  // m - root
  static IntPolynomial linear(int root) { return IntPolynomial{Count(-root), Count(1)}; }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const std::vector<Count>& coefficients() const { return coeffs_; }
  const Count& coefficient(std::size_t i) const;
  const Count& leading() const { return coeffs_.back(); }

  Count operator()(const Count& m) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Count& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Count& c) { return a *= c; }
  friend IntPolynomial operator*(const Count& c, IntPolynomial a) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  bool operator==(const IntPolynomial&) const = default;

  // "[c0, c1, ...]"
  std::string coefficient_list() const;
  // "c0 + c1*m + c2*m^2 + ..."
  std::string human() const;

 private:
  void normalize();

  std::vector<Count> coeffs_;
};

inline Count eval_poly(const IntPolynomial& p, const Count& m) { return p(m); }

}  // namespace qchom
