#include "hdx/ideal.hpp"

#include "hdx/error.hpp"
#include "hdx/kernels.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace hdx {

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; }

// Sorts by degree, drops duplicates and multiples, and leaves the survivors
// in descending lex order.
void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return lex_greater(a, b);
  });
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), lex_greater);
  gens = std::move(kept);
}

bool contains_in(const std::vector<Monomial>& gens, const Monomial& u) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, u); });
}

// x_to * u / x_from
Monomial exchange(const Monomial& u, std::size_t from, std::size_t to) {
  Monomial v = u;
  v.set_exp(from, v.exp(from) - 1);
  v.set_exp(to, v.exp(to) + 1);
  return v;
}

kernels::Support support_of(const Monomial& u) {
  kernels::Support s(u.ring_size());
  for (std::size_t i = 0; i < u.ring_size(); ++i)
    if (u.exps()[i] > 0) s.set(i);
  return s;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.ring_size(); ++i)
    if (a.exps()[i] > 0 && b.exps()[i] > 0) return false;
  return true;
}

// Inclusion-exclusion over generator supports: the number of squarefree
// degree-i monomials divisible by at least one generator.
void inclusion_exclusion(std::size_t n, const std::vector<kernels::Support>& supports,
                         std::size_t next, const kernels::Support& joined, int chosen,
                         std::vector<BigInt>& a) {
  for (std::size_t g = next; g < supports.size(); ++g) {
    kernels::Support u = joined | supports[g];
    const long size = static_cast<long>(u.count());
    const int sign = (chosen % 2 == 0) ? 1 : -1;
    for (long i = size; i <= static_cast<long>(n); ++i) {
      BigInt c = binomial(static_cast<long>(n) - size, i - size);
      if (sign > 0)
        a[static_cast<std::size_t>(i)] += c;
      else
        a[static_cast<std::size_t>(i)] -= c;
    }
    inclusion_exclusion(n, supports, g + 1, u, chosen + 1, a);
  }
}

constexpr std::size_t kEnumerationMaxRing = 30;
constexpr std::size_t kInclusionExclusionMaxGens = 20;

using NumeratorKey = std::vector<std::vector<Exponent>>;
using NumeratorMemo = std::map<NumeratorKey, IntPolynomial>;

// Numerator of the Hilbert series of S / (gens); gens must be minimal.
IntPolynomial quotient_numerator(std::vector<Monomial> gens, NumeratorMemo& memo) {
  if (gens.empty()) return IntPolynomial{1};
  if (std::any_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.is_one(); }))
    return {};

  // Generators coprime to all others split off as factors (1 - t^deg).
  IntPolynomial factor{1};
  std::vector<Monomial> rest;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool isolated = true;
    for (std::size_t j = 0; j < gens.size() && isolated; ++j)
      if (i != j && !coprime(gens[i], gens[j])) isolated = false;
    if (isolated)
      factor = factor * (IntPolynomial{1} - IntPolynomial::monomial(1, gens[i].degree()));
    else
      rest.push_back(gens[i]);
  }
  if (rest.empty()) return factor;

  NumeratorKey key;
  key.reserve(rest.size());
  for (const auto& g : rest) key.emplace_back(g.exps().begin(), g.exps().end());
  std::sort(key.begin(), key.end());
  if (auto it = memo.find(key); it != memo.end()) return factor * it->second;

  const std::size_t n = rest.front().ring_size();
  std::size_t pivot = 1;
  std::size_t best = 0;
  for (std::size_t v = 1; v <= n; ++v) {
    std::size_t c = 0;
    for (const auto& g : rest) c += g.exp(v) > 0 ? 1 : 0;
    if (c > best) {
      best = c;
      pivot = v;
    }
  }
  Exponent e = 0;
  for (const auto& g : rest)
    if (g.exp(pivot) > 0 && (e == 0 || g.exp(pivot) < e)) e = g.exp(pivot);
  const Monomial p = Monomial::variable(n, pivot, e);

  // N(I) = N(I + (p)) + t^e N(I : p)
  std::vector<Monomial> plus = rest;
  plus.push_back(p);
  minimalize(plus);
  std::vector<Monomial> quotient;
  quotient.reserve(rest.size());
  for (const auto& g : rest) quotient.push_back(colon(g, p));
  minimalize(quotient);

  IntPolynomial result = quotient_numerator(std::move(plus), memo);
  result += quotient_numerator(std::move(quotient), memo).shifted(e);
  memo.emplace(std::move(key), result);
  return factor * result;
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(std::size_t n, std::vector<Monomial> gens) {
  if (n == 0) throw InvalidInput("ring must have at least one variable");
  if (gens.empty()) throw InvalidInput("an ideal needs at least one generator");
  for (const auto& g : gens) {
    if (g.ring_size() != n)
      throw InvalidInput("generator " + g.to_string() + " lives in a ring with " +
                         std::to_string(g.ring_size()) + " variables, expected " +
                         std::to_string(n));
    if (g.is_one()) throw InvalidInput("improper ideal: the constant monomial 1 is a generator");
  }
  minimalize(gens);
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_minimal_generators(std::size_t n, std::vector<Monomial> gens) {
  if (n == 0) throw InvalidInput("ring must have at least one variable");
  if (gens.empty()) throw InvalidInput("an ideal needs at least one generator");
  for (const auto& g : gens) {
    if (g.ring_size() != n)
      throw InvalidInput("generator " + g.to_string() + " lives in a ring with " +
                         std::to_string(g.ring_size()) + " variables, expected " +
                         std::to_string(n));
    if (g.is_one()) throw InvalidInput("improper ideal: the constant monomial 1 is a generator");
  }
  std::sort(gens.begin(), gens.end(), lex_greater);
  return MonomialIdeal(n, std::move(gens));
}

unsigned MonomialIdeal::min_degree() const {
  unsigned d = gens_.front().degree();
  for (const auto& g : gens_) d = std::min(d, g.degree());
  return d;
}

unsigned MonomialIdeal::max_degree() const {
  unsigned d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Monomial& u) const {
  if (u.ring_size() != n_)
    throw InvalidInput("monomial " + u.to_string() + " is not in the ideal's ring");
  return contains_in(gens_, u);
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return hdx::is_squarefree(g); });
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << ";";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i == 0 ? " " : ", ") << gens_[i].to_string();
  return os.str();
}

BigInt SquarefreeCounts::at(unsigned i) const {
  if (i < d || i - d >= counts.size()) return 0;
  return counts[i - d];
}

IntPolynomial SquarefreeCounts::as_polynomial() const {
  std::vector<BigInt> c(d, BigInt(0));
  c.insert(c.end(), counts.begin(), counts.end());
  return IntPolynomial(std::move(c));
}

SquarefreeCounts squarefree_counts(const MonomialIdeal& ideal, bool parallel) {
  if (!ideal.is_squarefree())
    throw InvalidInput("squarefree counts need a squarefree ideal");
  if (is_squarefree_stable(ideal)) return squarefree_counts_stable(ideal);
  const std::size_t n = ideal.ring_size();
  std::vector<kernels::Support> supports;
  for (const auto& g : ideal.generators()) supports.push_back(support_of(g));

  std::vector<BigInt> in_ideal(n + 1, BigInt(0));
  if (n > kEnumerationMaxRing && supports.size() <= kInclusionExclusionMaxGens) {
    inclusion_exclusion(n, supports, 0, kernels::Support(n), 0, in_ideal);
  } else {
    auto faces = parallel ? kernels::face_counts_parallel(n, supports)
                          : kernels::face_counts_serial(n, supports);
    for (std::size_t i = 0; i <= n; ++i)
      in_ideal[i] = binomial(static_cast<long>(n), static_cast<long>(i)) - faces[i];
  }

  SquarefreeCounts out;
  out.d = ideal.min_degree();
  out.counts.assign(in_ideal.begin() + out.d, in_ideal.end());
  return out;
}

SquarefreeCounts squarefree_counts_stable(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw InvalidInput("squarefree counts need a squarefree ideal");
  const long n = static_cast<long>(ideal.ring_size());
  SquarefreeCounts out;
  out.d = ideal.min_degree();
  out.counts.assign(static_cast<std::size_t>(n) - out.d + 1, BigInt(0));
  for (const auto& u : ideal.generators()) {
    const long free = n - static_cast<long>(max_index(u));
    for (long k = 0; k <= free; ++k)
      out.counts[u.degree() - out.d + static_cast<std::size_t>(k)] += binomial(free, k);
  }
  return out;
}

IntPolynomial hilbert_numerator(const MonomialIdeal& ideal) {
  NumeratorMemo memo;
  return IntPolynomial{1} - quotient_numerator(ideal.generators(), memo);
}

IntPolynomial hilbert_numerator_stable(const MonomialIdeal& ideal) {
  bool squarefree_form;
  if (is_stable(ideal))
    squarefree_form = false;
  else if (ideal.is_squarefree() && is_squarefree_stable(ideal))
    squarefree_form = true;
  else
    throw InvalidInput("ideal is neither stable nor squarefree stable");

  std::vector<IntPolynomial> powers;
  auto power = [&](std::size_t q) -> const IntPolynomial& {
    while (powers.size() <= q) powers.push_back(pow_one_minus_t(static_cast<unsigned>(powers.size())));
    return powers[q];
  };
  IntPolynomial q;
  for (const auto& u : ideal.generators()) {
    const std::size_t m = max_index(u);
    const std::size_t exponent = squarefree_form ? m - u.degree() : m - 1;
    q.add_scaled_shifted(1, u.degree(), power(exponent));
  }
  return q;
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal) {
  const bool closed_form =
      is_stable(ideal) || (ideal.is_squarefree() && is_squarefree_stable(ideal));
  return {closed_form ? hilbert_numerator_stable(ideal) : hilbert_numerator(ideal),
          ideal.ring_size()};
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const auto& u : ideal.generators()) {
    const std::size_t top = max_index(u);
    for (std::size_t j = 1; j < top; ++j)
      if (!ideal.contains(exchange(u, top, j))) return false;
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const auto& u : ideal.generators())
    for (std::size_t i = 2; i <= u.ring_size(); ++i) {
      if (u.exp(i) == 0) continue;
      for (std::size_t j = 1; j < i; ++j)
        if (!ideal.contains(exchange(u, i, j))) return false;
    }
  return true;
}

bool is_squarefree_stable(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) return false;
  for (const auto& u : ideal.generators()) {
    const std::size_t top = max_index(u);
    for (std::size_t j = 1; j < top; ++j) {
      if (u.exp(j) > 0) continue;
      if (!ideal.contains(exchange(u, top, j))) return false;
    }
  }
  return true;
}

bool is_squarefree_strongly_stable(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) return false;
  for (const auto& u : ideal.generators())
    for (std::size_t i = 2; i <= u.ring_size(); ++i) {
      if (u.exp(i) == 0) continue;
      for (std::size_t j = 1; j < i; ++j)
        if (u.exp(j) == 0 && !ideal.contains(exchange(u, i, j))) return false;
    }
  return true;
}

bool is_lex(const MonomialIdeal& ideal) {
  // Lex ideals are strongly stable, so the closed-form numerator applies.
  if (!is_strongly_stable(ideal)) return false;
  const HilbertSeries hs{hilbert_numerator_stable(ideal), ideal.ring_size()};
  const std::size_t n = ideal.ring_size();
  for (unsigned k = ideal.min_degree(); k <= ideal.max_degree(); ++k) {
    // The lex-smallest degree-k element of I is min over generators u of
    // u * xn^(k - deg u); I_k is a lex segment iff that element has rank
    // dim I_k - 1.
    std::optional<Monomial> smallest;
    for (const auto& u : ideal.generators()) {
      if (u.degree() > k) continue;
      Monomial c = u;
      c.set_exp(n, c.exp(n) + (k - u.degree()));
      if (!smallest || lex_compare(c, *smallest) < 0) smallest = std::move(c);
    }
    if (lex_rank(*smallest) + 1 != hs.value(k)) return false;
  }
  return true;
}

SigmaImage sigma_ideal(const MonomialIdeal& ideal) {
  std::size_t m = 0;
  for (const auto& u : ideal.generators()) m = std::max<std::size_t>(m, max_index(u) + u.degree() - 1);
  std::vector<Monomial> images;
  images.reserve(ideal.generators().size());
  for (const auto& u : ideal.generators()) images.push_back(sigma(u, m));
  return {MonomialIdeal::from_generators(m, std::move(images)), m, is_strongly_stable(ideal)};
}

BigInt StableProfile::count(unsigned i) const {
  BigInt a = 0;
  for (const auto& [key, c] : groups) {
    const auto [deg, gap] = key;
    if (i < deg) break;
    const long free = static_cast<long>(n) - static_cast<long>(deg + gap);
    const long k = static_cast<long>(i - deg);
    if (k <= free) a += c * binomial(free, std::min(k, free - k));
  }
  return a;
}

StableProfile stable_profile(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw InvalidInput("a stable profile needs a squarefree ideal");
  StableProfile p;
  p.n = ideal.ring_size();
  for (const auto& u : ideal.generators())
    p.groups[{u.degree(), static_cast<unsigned>(max_index(u)) - u.degree()}] += 1;
  return p;
}

StableProfile sigma_profile(const MonomialIdeal& ideal) {
  StableProfile p;
  for (const auto& u : ideal.generators()) {
    p.n = std::max<std::size_t>(p.n, max_index(u) + u.degree() - 1);
    p.groups[{u.degree(), static_cast<unsigned>(max_index(u)) - 1}] += 1;
  }
  return p;
}

}  // namespace hdx
