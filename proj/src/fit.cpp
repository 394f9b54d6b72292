#include "qchom/fit.hpp"

#include <stdexcept>

namespace qchom {

NewtonFit::NewtonFit(int first_m, std::span<const Count> values) : first_m_(first_m) {
  if (values.empty()) throw std::invalid_argument("NewtonFit needs at least one sample");
  std::vector<Count> row(values.begin(), values.end());
  while (!row.empty()) {
    diffs_.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
}

int NewtonFit::degree() const {
  for (int j = static_cast<int>(diffs_.size()) - 1; j >= 0; --j)
    if (diffs_[j] != 0) return j;
  return -1;
}

Count NewtonFit::operator()(int m) const {
  // sum_j Delta^j * C(m - first_m, j), with the generalised binomial for
  // arguments below first_m.
  const Count x = m - first_m_;
  Count total = 0;
  Count choose = 1;
  for (std::size_t j = 0; j < diffs_.size(); ++j) {
    if (j > 0) {
      choose *= x - static_cast<int>(j - 1);
      choose /= static_cast<int>(j);
    }
    total += diffs_[j] * choose;
  }
  return total;
}

std::optional<IntPolynomial> NewtonFit::monomial() const {
  // Expand each falling factorial (m - first_m)(m - first_m - 1)... / j!.
  std::vector<Rational> coeffs(diffs_.size(), 0);
  std::vector<Rational> basis{Rational(1)};
  for (std::size_t j = 0; j < diffs_.size(); ++j) {
    if (j > 0) {
      // basis *= (m - first_m - (j-1)) / j
      const Rational shift(first_m_ + static_cast<int>(j) - 1);
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * shift;
      }
      for (auto& c : next) c /= static_cast<int>(j);
      basis.swap(next);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += basis[i] * Rational(diffs_[j]);
  }
  std::vector<Count> ints;
  for (const auto& c : coeffs) {
    if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
    ints.push_back(boost::multiprecision::numerator(c));
  }
  return IntPolynomial(std::move(ints));
}

}  // namespace qchom
