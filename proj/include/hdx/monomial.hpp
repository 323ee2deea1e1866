#ifndef HDX_MONOMIAL_HPP
#define HDX_MONOMIAL_HPP

#include "hdx/intpoly.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hdx {

using Exponent = std::uint32_t;

/// A monomial x1^e1 * ... * xn^en of a fixed n-variable ring. Variable
/// indices are 1-based at every interface; exps()[0] is the exponent of x1.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }
  /// x_index in an n-variable ring.
  static Monomial variable(std::size_t n, std::size_t index, Exponent e = 1);

  std::size_t ring_size() const { return exps_.size(); }
  std::span<const Exponent> exps() const { return exps_; }
  Exponent exp(std::size_t index) const { return exps_[index - 1]; }
  void set_exp(std::size_t index, Exponent e) { exps_[index - 1] = e; }

  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

private:
  std::vector<Exponent> exps_;
};

/// Pure lexicographic comparison of exponent vectors, x1 > x2 > ... > xn.
/// Throws InvalidInput when the rings differ.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);

/// Largest index with a positive exponent. Throws on the constant monomial.
std::size_t max_index(const Monomial& u);

bool is_squarefree(const Monomial& u);

/// x_{i1} x_{i2+1} ... x_{id+d-1} in a target_ring-variable ring.
Monomial sigma(const Monomial& u, std::size_t target_ring);

bool divides(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// b / gcd(a, b), i.e. the generator of (b) : a.
Monomial colon(const Monomial& b, const Monomial& a);

/// Number of degree-k monomials in n variables.
BigInt monomial_count(std::size_t n, unsigned k);

/// Position of u in the descending lex list of monomials of degree deg(u);
/// x1^k has rank 0.
BigInt lex_rank(const Monomial& u);

/// Inverse of lex_rank. Throws InvalidInput when rank is out of range.
Monomial lex_unrank(std::size_t n, unsigned degree, const BigInt& rank);

/// Next monomial of the same degree in descending lex order. Returns false
/// (leaving u untouched) when u = xn^k is the last one.
bool lex_next_lower(Monomial& u);

}  // namespace hdx

#endif
