#ifndef HDX_IDEAL_HPP
#define HDX_IDEAL_HPP

#include "hdx/intpoly.hpp"
#include "hdx/monomial.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hdx {

/// Proper monomial ideal of an n-variable polynomial ring, stored as its
/// minimal generating set sorted in descending lex order.
class MonomialIdeal {
public:
  /// Removes redundant generators. Throws InvalidInput on an empty list, a
  /// constant generator, or a generator from another ring.
  static MonomialIdeal from_generators(std::size_t n, std::vector<Monomial> gens);
  /// Same checks, but trusts the caller that no generator divides another.
  static MonomialIdeal from_minimal_generators(std::size_t n, std::vector<Monomial> gens);

  std::size_t ring_size() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  unsigned min_degree() const;
  unsigned max_degree() const;

  bool contains(const Monomial& u) const;
  bool is_squarefree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  /// "n=3; x1^2, x1*x2, x3" -- the format parse_ideal reads.
  std::string to_string() const;

private:
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Q(t) over (1 - t)^n.
struct HilbertSeries {
  IntPolynomial numerator;
  std::size_t n = 0;

  BigInt value(long k) const { return series_coeff(numerator, static_cast<unsigned>(n), k); }
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// a_i = number of squarefree degree-i monomials in a squarefree ideal.
struct SquarefreeCounts {
  unsigned d = 0;             // minimal generator degree
  std::vector<BigInt> counts; // a_d, ..., a_n

  BigInt at(unsigned i) const;
  /// f(t) = a_d t^d + ... + a_n t^n
  IntPolynomial as_polynomial() const;
};

/// Throws InvalidInput if some generator is not squarefree. Squarefree
/// stable ideals take the closed form below; others go to the face-counting
/// kernels or, for many variables and few generators, inclusion-exclusion.
SquarefreeCounts squarefree_counts(const MonomialIdeal& ideal, bool parallel = true);

/// a_i = sum over generators u of C(n - m(u), i - deg u): every squarefree
/// monomial of a squarefree stable ideal is uniquely u * v with v squarefree
/// in the variables after m(u). Stability is the caller's promise.
SquarefreeCounts squarefree_counts_stable(const MonomialIdeal& ideal);

/// Numerator of H_I(t) over (1 - t)^n by pivot splitting; works for every
/// monomial ideal.
IntPolynomial hilbert_numerator(const MonomialIdeal& ideal);

/// Eliahou-Kervaire closed form. For stable ideals every generator u
/// contributes t^deg(u) (1 - t)^(m(u) - 1); for squarefree stable ideals
/// the exponent is m(u) - deg(u). Throws InvalidInput otherwise.
IntPolynomial hilbert_numerator_stable(const MonomialIdeal& ideal);

/// Closed form when available, pivot splitting otherwise.
HilbertSeries hilbert_series(const MonomialIdeal& ideal);

bool is_stable(const MonomialIdeal& ideal);
bool is_strongly_stable(const MonomialIdeal& ideal);
bool is_squarefree_stable(const MonomialIdeal& ideal);
/// x_j * u / x_i lies in I for every generator u, x_i | u, j < i, x_j not dividing u.
bool is_squarefree_strongly_stable(const MonomialIdeal& ideal);
bool is_lex(const MonomialIdeal& ideal);

struct SigmaImage {
  MonomialIdeal ideal;
  std::size_t m = 0;               // dimension of the target ring
  bool source_strongly_stable = true;
};

/// I^sigma in K[x1..xm], m = max(m(u) + deg(u) - 1). Performed for any
/// ideal; source_strongly_stable records whether the generator images are
/// guaranteed minimal.
SigmaImage sigma_ideal(const MonomialIdeal& ideal);

/// Generators of a squarefree stable ideal counted by (deg u, m(u) - deg u).
/// The squarefree counts depend on nothing else.
struct StableProfile {
  std::size_t n = 0;
  std::map<std::pair<unsigned, unsigned>, BigInt> groups;

  unsigned min_degree() const { return groups.begin()->first.first; }
  /// a_i = sum of C(n - m(u), i - deg u)
  BigInt count(unsigned i) const;
};

/// Profile of a squarefree ideal; stability is the caller's promise.
StableProfile stable_profile(const MonomialIdeal& ideal);

/// Profile of I^sigma without building I^sigma, which can have thousands of
/// variables: sigma(u) keeps the degree and has m(sigma(u)) - deg u = m(u) - 1.
/// Strong stability of I is the caller's promise.
StableProfile sigma_profile(const MonomialIdeal& ideal);

}  // namespace hdx

#endif
