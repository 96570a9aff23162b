#include "ncbond/polynomial.hpp"

#include <sstream>

#include "ncbond/errors.hpp"

namespace ncbond {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in polynomial add");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in polynomial mul");
  return r;
}

}  // namespace

Polynomial::Polynomial(std::vector<std::int64_t> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

Polynomial Polynomial::constant(std::int64_t c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::int64_t c, int d) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(d) + 1, 0);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t Polynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

std::int64_t Polynomial::evaluate(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(coeff(static_cast<int>(i)), -o.coeff(static_cast<int>(i)));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<std::int64_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] = checked_add(v[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  return Polynomial(std::move(v));
}

bool Polynomial::has_internal_zero() const {
  for (std::size_t k = 1; k + 1 < coeffs_.size(); ++k)
    if (coeffs_[k] == 0 && coeffs_[k - 1] != 0 && coeffs_[k + 1] != 0) return true;
  return false;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    std::int64_t c = coeff(d);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || d == 0) os << a;
    if (d >= 1) os << "t";
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return os.str();
}

}  // namespace ncbond
