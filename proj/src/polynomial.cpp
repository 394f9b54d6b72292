#include "qchom/polynomial.hpp"

#include <algorithm>

namespace qchom {

IntPolynomial::IntPolynomial(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPolynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

int IntPolynomial::degree() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }

const Count& IntPolynomial::coefficient(std::size_t i) const {
  static const Count zero = 0;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

Count IntPolynomial::operator()(const Count& m) const {
  Count acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= m;
    acc += *it;
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Count& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Count> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::coefficient_list() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].str();
  }
  return s + "]";
}

std::string IntPolynomial::human() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += " + ";
    s += coeffs_[i].str();
    if (i == 1) s += "*m";
    if (i > 1) s += "*m^" + std::to_string(i);
  }
  return s;
}

}  // namespace qchom
