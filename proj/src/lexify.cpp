#include "hdx/lexify.hpp"

#include <algorithm>
#include <optional>

namespace hdx {

HilbertFunctionView::HilbertFunctionView(IntPolynomial numerator, std::size_t n, long horizon)
    : numerator_(std::move(numerator)), n_(n) {
  if (n_ == 0) throw InvalidInput("ring must have at least one variable");
  if (horizon < 0) horizon = std::max(0L, numerator_.degree()) + static_cast<long>(n_) + 1;
  const auto prefix = series_div(numerator_, static_cast<unsigned>(n_), static_cast<std::size_t>(horizon));
  for (long k = 0; k <= horizon; ++k)
    if (sgn(prefix.coeff(k)) < 0)
      throw InvalidInput("not a Hilbert function: coefficient of t^" + std::to_string(k) +
                         " is " + prefix.coeff(k).get_str());
}

BigInt hilbert_value(const HilbertFunctionView& v, long k) {
  BigInt h = series_coeff(v.numerator(), static_cast<unsigned>(v.ring_size()), k);
  if (sgn(h) < 0)
    throw InvalidInput("negative Hilbert function value " + h.get_str() + " in degree " +
                       std::to_string(k));
  return h;
}

namespace {

// Degree-k monomials strictly before w in descending lex order, counted by
// max index. Those agree with w before some position i and are larger at i;
// with R = (degree left at i) - w_i choices there, one of them ends at x_i
// and C(j - i + R - 2, R - 2) end at x_j for j > i (hockey stick).
std::vector<BigInt> before_by_max_index(const Monomial& w) {
  const std::size_t n = w.ring_size();
  std::vector<BigInt> out(n + 1, BigInt(0));
  long remaining = w.degree();
  for (std::size_t i = 1; i < n; ++i) {
    const long r = remaining - static_cast<long>(w.exp(i));
    if (r >= 1) out[i] += 1;
    if (r >= 2)
      for (std::size_t j = i + 1; j <= n; ++j) out[j] += binomial(static_cast<long>(j - i) + r - 2, r - 2);
    remaining -= w.exp(i);
  }
  return out;
}

// Walks the degrees of the lex ideal with Hilbert function v. For each degree
// with new generators, calls on_segment(k, first, count) where first is the
// first new generator, and records the counts by max index in shape.
template <class OnSegment>
LexShape walk(const HilbertFunctionView& v, const LexifyOptions& options, OnSegment&& on_segment) {
  const std::size_t n = v.ring_size();
  const IntPolynomial& target = v.numerator();
  if (target.is_zero()) throw InvalidInput("the zero ideal has no lex ideal with generators");
  const long low = target.low_degree();
  if (low == 0) throw MacaulayViolation("Hilbert function is nonzero in degree 0 (not a proper ideal)");

  std::vector<IntPolynomial> powers;
  auto power = [&](std::size_t q) -> const IntPolynomial& {
    while (powers.size() <= q) powers.push_back(pow_one_minus_t(static_cast<unsigned>(powers.size())));
    return powers[q];
  };

  // Numerator of the ideal spanned by the generators so far, tracked as its
  // difference from the target together with the number of nonzero entries.
  std::vector<BigInt> gap(target.coeffs());
  long open = std::count_if(gap.begin(), gap.end(), [](const BigInt& c) { return sgn(c) != 0; });
  auto absorb = [&](unsigned k, const BigInt& c, const IntPolynomial& p) {
    if (gap.size() < k + p.coeffs().size()) gap.resize(k + p.coeffs().size());
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
      BigInt& g = gap[k + j];
      const bool was_zero = sgn(g) == 0;
      g -= c * p.coeffs()[j];
      open += static_cast<long>(was_zero) - static_cast<long>(sgn(g) == 0);
    }
  };

  LexShape shape;
  shape.n = n;
  // Last monomial of the previous degree's lex segment. S_1 times a lex
  // segment is the lex segment ending at that monomial times xn.
  std::optional<Monomial> last;
  for (unsigned k = static_cast<unsigned>(low); k <= options.max_degree; ++k) {
    const BigInt h = hilbert_value(v, k);
    if (h > monomial_count(n, k))
      throw MacaulayViolation("h(" + std::to_string(k) + ") = " + h.get_str() +
                              " exceeds the number of monomials of that degree");
    Monomial first = Monomial::variable(n, 1, k);
    BigInt shadow = 0;
    if (last) {
      first = *last;
      first.set_exp(n, first.exp(n) + 1);
      shadow = lex_rank(first) + 1;
    }
    if (h < shadow)
      throw MacaulayViolation("h(" + std::to_string(k) + ") = " + h.get_str() +
                              " is below the lex shadow size " + shadow.get_str());
    if (h > shadow) {
      if (last) lex_next_lower(first);
      Monomial end = lex_unrank(n, k, h - 1);
      const auto upto = before_by_max_index(end);
      const auto below = before_by_max_index(first);
      for (std::size_t j = 1; j <= n; ++j) {
        BigInt c = upto[j] - below[j] + (max_index(end) == j ? 1 : 0);
        if (sgn(c) == 0) continue;
        shape.m = std::max(shape.m, j + k - 1);
        absorb(k, c, power(j - 1));
        shape.counts[{k, j}] = std::move(c);
      }
      on_segment(k, first, h - shadow);
      last = std::move(end);
    } else if (sgn(h) > 0) {
      last = std::move(first);
    }
    // Lex ideals are stable, so their numerator is the closed form used by
    // absorb; equal numerators mean equal Hilbert functions, hence no more
    // generators.
    if (open == 0) return shape;
  }
  throw InvalidInput("lexification did not finish by degree " + std::to_string(options.max_degree));
}

}  // namespace

LexShape lex_shape(const HilbertFunctionView& v, const LexifyOptions& options) {
  return walk(v, options, [](unsigned, const Monomial&, const BigInt&) {});
}

LexIdeal lexify(const HilbertFunctionView& v, const LexifyOptions& options) {
  std::vector<Monomial> gens;
  const LexShape shape = walk(v, options, [&](unsigned, const Monomial& first, const BigInt& count) {
    if (count + gens.size() > options.max_generators)
      throw InvalidInput("the lex ideal has more than " + std::to_string(options.max_generators) +
                         " generators; lex_shape counts them without listing");
    Monomial u = first;
    for (BigInt left = count; sgn(left) > 0; --left) {
      gens.push_back(u);
      if (left > 1) lex_next_lower(u);
    }
  });
  // New generators lie outside the shadow of the earlier ones, so the list
  // is already minimal.
  return {MonomialIdeal::from_minimal_generators(v.ring_size(), std::move(gens)), shape.m};
}

StableProfile sigma_profile(const LexShape& shape) {
  StableProfile p;
  p.n = shape.m;
  for (const auto& [key, c] : shape.counts) p.groups[{key.first, static_cast<unsigned>(key.second) - 1}] += c;
  return p;
}

}  // namespace hdx
