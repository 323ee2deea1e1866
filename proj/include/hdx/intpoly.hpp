#ifndef HDX_INTPOLY_HPP
#define HDX_INTPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hdx {

using BigInt = mpz_class;

/// Dense univariate polynomial in t with arbitrary-precision integer
/// coefficients. coeffs()[k] is the coefficient of t^k. The coefficient
/// vector never ends in a zero, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
  static constexpr long kZeroDegree = -1;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// c * t^k
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Lowest k with a nonzero coefficient; kZeroDegree for zero.
  long low_degree() const;

  /// Coefficient of t^k, zero outside the stored range.
  BigInt coeff(long k) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);

  /// Adds c * t^shift * p in place without a temporary.
  void add_scaled_shifted(const BigInt& c, std::size_t shift, const IntPolynomial& p);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator-(IntPolynomial a);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiply by t^k.
  IntPolynomial shifted(std::size_t k) const;

  /// Ascending-degree rendering, e.g. "5t^2 - 5t^3 + t^5".
  std::string to_string() const;

private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// (1 - t)^q
IntPolynomial pow_one_minus_t(unsigned q);
/// (1 + t)^q
IntPolynomial pow_one_plus_t(unsigned q);

/// Coefficients 0..trunc of the power series p(t) / (1 - t)^q.
IntPolynomial series_div(const IntPolynomial& p, unsigned q, std::size_t trunc);

/// Coefficient of t^k in p(t) / (1 - t)^q, without expanding lower terms.
BigInt series_coeff(const IntPolynomial& p, unsigned q, long k);

}  // namespace hdx

#endif
