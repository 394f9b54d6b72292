#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qchom/count.hpp"
#include "qchom/polynomial.hpp"

namespace qchom {

// Newton forward-difference interpolant through values at consecutive
// integers first_m, first_m + 1, ... Integer samples give integer differences,
// so the interpolant is integer-valued on the integers.
class NewtonFit {
 public:
  NewtonFit(int first_m, std::span<const Count> values);

  int first_m() const { return first_m_; }
  // Leading differences Delta^j f(first_m), j = 0..samples-1.
  const std::vector<Count>& differences() const { return diffs_; }

  // Degree of the interpolant; -1 when every sample is zero.
  int degree() const;

  Count operator()(int m) const;

  // Monomial coefficients, if they are all integers.
  std::optional<IntPolynomial> monomial() const;

 private:
  int first_m_;
  std::vector<Count> diffs_;
};

}  // namespace qchom
