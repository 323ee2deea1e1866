#include "hdx/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hdx {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

long IntPolynomial::low_degree() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return static_cast<long>(k);
  return kZeroDegree;
}

BigInt IntPolynomial::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void IntPolynomial::add_scaled_shifted(const BigInt& c, std::size_t shift,
                                       const IntPolynomial& p) {
  if (sgn(c) == 0 || p.is_zero()) return;
  const std::size_t need = shift + p.coeffs_.size();
  if (need > coeffs_.size()) coeffs_.resize(need);
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k)
    mpz_addmul(coeffs_[shift + k].get_mpz_t(), c.get_mpz_t(), p.coeffs_[k].get_mpz_t());
  normalize();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k, BigInt(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "t^" << k;
  }
  return os.str();
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

IntPolynomial pow_one_minus_t(unsigned q) {
  std::vector<BigInt> v(q + 1);
  for (unsigned k = 0; k <= q; ++k) {
    v[k] = binomial(q, k);
    if (k % 2 == 1) v[k] = -v[k];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial pow_one_plus_t(unsigned q) {
  std::vector<BigInt> v(q + 1);
  for (unsigned k = 0; k <= q; ++k) v[k] = binomial(q, k);
  return IntPolynomial(std::move(v));
}

IntPolynomial series_div(const IntPolynomial& p, unsigned q, std::size_t trunc) {
  std::vector<BigInt> v(trunc + 1, BigInt(0));
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < std::min(c.size(), trunc + 1); ++k) v[k] = c[k];
  // Each division by (1 - t) is a running prefix sum.
  for (unsigned r = 0; r < q; ++r)
    for (std::size_t k = 1; k <= trunc; ++k) v[k] += v[k - 1];
  return IntPolynomial(std::move(v));
}

BigInt series_coeff(const IntPolynomial& p, unsigned q, long k) {
  if (k < 0) return 0;
  if (q == 0) return p.coeff(k);
  BigInt sum = 0;
  const long top = std::min(k, p.degree());
  for (long j = 0; j <= top; ++j) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(j)];
    if (sgn(c) == 0) continue;
    sum += c * binomial(k - j + q - 1, q - 1);
  }
  return sum;
}

}  // namespace hdx
