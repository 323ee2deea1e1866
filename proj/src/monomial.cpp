#include "hdx/monomial.hpp"

#include "hdx/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hdx {

namespace {

void require_same_ring(const Monomial& u, const Monomial& v) {
  if (u.ring_size() != v.ring_size())
    throw InvalidInput("monomials live in rings of different dimension (" +
                       std::to_string(u.ring_size()) + " vs " +
                       std::to_string(v.ring_size()) + ")");
}

}  // namespace

Monomial Monomial::variable(std::size_t n, std::size_t index, Exponent e) {
  if (index < 1 || index > n)
    throw InvalidInput("variable index x" + std::to_string(index) + " outside 1.." +
                       std::to_string(n));
  Monomial m = one(n);
  m.exps_[index - 1] = e;
  return m;
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (exps_[i] > 1) os << '^' << exps_[i];
  }
  if (first) return "1";
  return os.str();
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  auto a = u.exps();
  auto b = v.exps();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::size_t max_index(const Monomial& u) {
  auto e = u.exps();
  for (std::size_t i = e.size(); i > 0; --i)
    if (e[i - 1] > 0) return i;
  throw InvalidInput("max_index of the constant monomial");
}

bool is_squarefree(const Monomial& u) {
  auto e = u.exps();
  return std::all_of(e.begin(), e.end(), [](Exponent x) { return x <= 1; });
}

Monomial sigma(const Monomial& u, std::size_t target_ring) {
  const unsigned d = u.degree();
  if (d == 0) throw InvalidInput("sigma of the constant monomial");
  const std::size_t need = max_index(u) + d - 1;
  if (target_ring < need)
    throw InvalidInput("sigma(" + u.to_string() + ") needs " + std::to_string(need) +
                       " variables, target ring has " + std::to_string(target_ring));
  Monomial out = Monomial::one(target_ring);
  std::size_t shift = 0;
  auto e = u.exps();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (Exponent k = 0; k < e[i]; ++k) out.set_exp(i + 1 + shift++, 1);
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  auto x = a.exps();
  auto y = b.exps();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Monomial product(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.ring_size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps()[i] + b.exps()[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.ring_size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps()[i], b.exps()[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& b, const Monomial& a) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.ring_size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = b.exps()[i] > a.exps()[i] ? b.exps()[i] - a.exps()[i] : 0;
  return Monomial(std::move(e));
}

BigInt monomial_count(std::size_t n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(static_cast<long>(n + k - 1), static_cast<long>(k));
}

BigInt lex_rank(const Monomial& u) {
  const std::size_t n = u.ring_size();
  auto e = u.exps();
  BigInt rank = 0;
  long remaining = u.degree();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const long gap = remaining - static_cast<long>(e[i]);
    // Monomials agreeing before position i and larger at i (hockey stick).
    if (gap > 0) rank += binomial(gap - 1 + static_cast<long>(n - i - 1), static_cast<long>(n - i - 1));
    remaining -= e[i];
  }
  return rank;
}

Monomial lex_unrank(std::size_t n, unsigned degree, const BigInt& rank) {
  if (n == 0) throw InvalidInput("lex_unrank in a ring with no variables");
  if (sgn(rank) < 0 || rank >= monomial_count(n, degree))
    throw InvalidInput("lex rank " + rank.get_str() + " out of range for degree " +
                       std::to_string(degree) + " in " + std::to_string(n) + " variables");
  std::vector<Exponent> e(n, 0);
  BigInt r = rank;
  long remaining = degree;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const long rest = static_cast<long>(n - i - 1);
    // Monomials with the same prefix and exponent > x at position i come
    // first; there are C(remaining - x - 1 + rest, rest) of them.
    auto above = [&](long x) { return x >= remaining ? BigInt(0) : binomial(remaining - x - 1 + rest, rest); };
    long lo = 0, hi = remaining;
    while (lo < hi) {
      const long mid = lo + (hi - lo) / 2;
      if (above(mid) <= r) hi = mid;
      else lo = mid + 1;
    }
    r -= above(lo);
    e[i] = static_cast<Exponent>(lo);
    remaining -= lo;
  }
  e[n - 1] = static_cast<Exponent>(remaining);
  return Monomial(std::move(e));
}

bool lex_next_lower(Monomial& u) {
  const std::size_t n = u.ring_size();
  if (n < 2) return false;
  std::size_t i = n - 1;
  while (i > 0 && u.exp(i) == 0) --i;
  if (i == 0) return false;
  // i is the 1-based position of the last positive exponent before xn.
  Exponent tail = 1;
  for (std::size_t j = i + 1; j <= n; ++j) {
    tail += u.exp(j);
    u.set_exp(j, 0);
  }
  u.set_exp(i, u.exp(i) - 1);
  u.set_exp(i + 1, tail);
  return true;
}

}  // namespace hdx
