#ifndef NCBOND_POLYNOMIAL_HPP
#define NCBOND_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ncbond {

// Exact integer-coefficient univariate polynomial.  Coefficients are stored
// ascending by degree and normalized so the leading coefficient is nonzero;
// the zero polynomial has an empty coefficient vector.  All arithmetic is
// overflow-checked.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> ascending_coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(std::int64_t c);
  // c * t^d
  static Polynomial monomial(std::int64_t c, int d);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int d) const;
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  std::int64_t evaluate(std::int64_t t) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return coeffs_ != o.coeffs_; }

  // Zero coefficient strictly between two nonzero ones.
  bool has_internal_zero() const;

  // Human-readable form, highest degree first, e.g. "t^3 - 4t^2 + 5t - 2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace ncbond

#endif
