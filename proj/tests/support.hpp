#ifndef HDX_TESTS_SUPPORT_HPP
#define HDX_TESTS_SUPPORT_HPP

// Slow, obviously-correct reference computations used as oracles by the
// tests. Nothing here calls into the library's counting or numerator code.

#include "hdx/depth.hpp"
#include "hdx/text.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace hdx::testing {

using Exps = std::vector<unsigned>;

inline Exps exps_of(const Monomial& u) { return Exps(u.exps().begin(), u.exps().end()); }

inline bool divides_raw(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// All exponent vectors of total degree k in n variables, in descending lex
/// order (x1^k first).
inline std::vector<Exps> all_monomials(std::size_t n, unsigned k) {
  std::vector<Exps> out;
  Exps e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

inline bool member_raw(const std::vector<Exps>& gens, const Exps& u) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides_raw(g, u); });
}

inline std::vector<Exps> raw_gens(const MonomialIdeal& I) {
  std::vector<Exps> g;
  for (const auto& u : I.generators()) g.push_back(exps_of(u));
  return g;
}

/// dim_K I_k by enumeration.
inline long brute_h(const MonomialIdeal& I, unsigned k) {
  const auto gens = raw_gens(I);
  long c = 0;
  for (const auto& u : all_monomials(I.ring_size(), k)) c += member_raw(gens, u);
  return c;
}

/// Numerator from enumerated Hilbert function values: (1 - t)^n * sum h(k) t^k
/// is exact up to deg lcm(gens), and the numerator cannot go beyond that.
inline std::vector<long> brute_numerator(const MonomialIdeal& I) {
  const std::size_t n = I.ring_size();
  Exps l(n, 0);
  for (const auto& g : raw_gens(I))
    for (std::size_t i = 0; i < n; ++i) l[i] = std::max(l[i], g[i]);
  unsigned top = 0;
  for (unsigned e : l) top += e;
  std::vector<long> h(top + 1);
  for (unsigned k = 0; k <= top; ++k) h[k] = brute_h(I, k);
  // multiply by (1 - t) n times
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = h.size(); k-- > 1;) h[k] -= h[k - 1];
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

inline IntPolynomial to_poly(const std::vector<long>& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPolynomial(std::move(v));
}

/// Squarefree counts a_0..a_n by subset enumeration (n <= 20).
inline std::vector<long> brute_squarefree_counts(const MonomialIdeal& I) {
  const std::size_t n = I.ring_size();
  const auto gens = raw_gens(I);
  std::vector<long> a(n + 1, 0);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Exps u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (mask >> i) & 1U;
    if (member_raw(gens, u)) ++a[static_cast<std::size_t>(__builtin_popcountl(mask))];
  }
  return a;
}

/// Largest p with (1 - t)^p H(t) nonnegative through degree `horizon`,
/// computed with plain long arithmetic on enumerated values.
inline long brute_hdepth(const MonomialIdeal& I, unsigned horizon) {
  const long n = static_cast<long>(I.ring_size());
  std::vector<long> h(horizon + 1);
  for (unsigned k = 0; k <= horizon; ++k) h[k] = brute_h(I, k);
  long best = 0;
  std::vector<long> s = h;
  for (long p = 1; p <= n; ++p) {
    for (std::size_t k = s.size(); k-- > 1;) s[k] -= s[k - 1];
    if (std::any_of(s.begin(), s.end(), [](long x) { return x < 0; })) break;
    best = p;
  }
  return best;
}

/// Degree-k piece is an initial lex segment for k <= max generator degree.
inline bool brute_is_lex(const MonomialIdeal& I) {
  const auto gens = raw_gens(I);
  for (unsigned k = 1; k <= I.max_degree(); ++k) {
    bool seen_out = false;
    for (const auto& u : all_monomials(I.ring_size(), k)) {
      const bool in = member_raw(gens, u);
      if (in && seen_out) return false;
      seen_out = seen_out || !in;
    }
  }
  return true;
}

/// Stability on every monomial of I up to the largest generator degree:
/// x_j * u / x_i stays in I for j < i, where i = m(u) unless strong.
inline bool brute_is_stable(const MonomialIdeal& I, bool strong) {
  const auto gens = raw_gens(I);
  const std::size_t n = I.ring_size();
  for (unsigned k = 1; k <= I.max_degree(); ++k)
    for (const auto& u : all_monomials(n, k)) {
      if (!member_raw(gens, u)) continue;
      std::size_t m = n;
      while (u[m - 1] == 0) --m;
      for (std::size_t i = 1; i <= m; ++i) {
        if (u[i - 1] == 0 || (!strong && i != m)) continue;
        for (std::size_t j = 1; j < i; ++j) {
          Exps v = u;
          --v[i - 1];
          ++v[j - 1];
          if (!member_raw(gens, v)) return false;
        }
      }
    }
  return true;
}

/// Squarefree version: x_j * u / x_m(u) must lie in I for every squarefree u
/// in I and j < m(u) with x_j not dividing u.
inline bool brute_is_squarefree_stable(const MonomialIdeal& I) {
  const auto gens = raw_gens(I);
  const std::size_t n = I.ring_size();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    Exps u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (mask >> i) & 1U;
    if (!member_raw(gens, u)) continue;
    std::size_t i = n - 1;
    while (u[i] == 0) --i;
    for (std::size_t j = 0; j < i; ++j) {
      if (u[j]) continue;
      Exps v = u;
      v[i] = 0;
      v[j] = 1;
      if (!member_raw(gens, v)) return false;
    }
  }
  return true;
}

/// x_j * u / x_i in I for every squarefree u in I, x_i | u, j < i, x_j not dividing u.
inline bool brute_is_squarefree_strongly_stable(const MonomialIdeal& I) {
  const auto gens = raw_gens(I);
  const std::size_t n = I.ring_size();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    Exps u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (mask >> i) & 1U;
    if (!member_raw(gens, u)) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; u[i] && j < i; ++j) {
        if (u[j]) continue;
        Exps v = u;
        v[i] = 0;
        v[j] = 1;
        if (!member_raw(gens, v)) return false;
      }
  }
  return true;
}

/// Strongly stable closure (Borel moves) of random generators.
inline MonomialIdeal borel_closure(std::size_t n, const std::vector<Monomial>& seeds) {
  std::vector<Exps> todo, all;
  for (const auto& s : seeds) todo.push_back(exps_of(s));
  while (!todo.empty()) {
    Exps u = todo.back();
    todo.pop_back();
    if (std::find(all.begin(), all.end(), u) != all.end()) continue;
    all.push_back(u);
    for (std::size_t j = 1; j < n; ++j)
      if (u[j] > 0)
        for (std::size_t i = 0; i < j; ++i) {
          Exps v = u;
          --v[j];
          ++v[i];
          todo.push_back(v);
        }
  }
  std::vector<Monomial> gens;
  for (const auto& e : all) gens.emplace_back(std::vector<Exponent>(e.begin(), e.end()));
  return MonomialIdeal::from_generators(n, std::move(gens));
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned min_deg, unsigned max_deg,
                                bool squarefree) {
  std::uniform_int_distribution<unsigned> deg(min_deg, max_deg);
  std::uniform_int_distribution<std::size_t> var(1, n);
  while (true) {
    const unsigned d = squarefree ? std::min<unsigned>(deg(rng), static_cast<unsigned>(n)) : deg(rng);
    Monomial u = Monomial::one(n);
    if (squarefree) {
      std::vector<std::size_t> idx(n);
      for (std::size_t i = 0; i < n; ++i) idx[i] = i + 1;
      std::shuffle(idx.begin(), idx.end(), rng);
      for (unsigned i = 0; i < d; ++i) u.set_exp(idx[i], 1);
    } else {
      for (unsigned i = 0; i < d; ++i) {
        const std::size_t v = var(rng);
        u.set_exp(v, u.exp(v) + 1);
      }
    }
    if (!u.is_one()) return u;
  }
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, unsigned max_deg, unsigned max_gens,
                                  bool squarefree) {
  std::uniform_int_distribution<unsigned> count(1, max_gens);
  std::vector<Monomial> gens;
  for (unsigned i = count(rng); i > 0; --i) gens.push_back(random_monomial(rng, n, 1, max_deg, squarefree));
  return MonomialIdeal::from_generators(n, std::move(gens));
}

inline MonomialIdeal ideal(const char* text) { return parse_ideal(text); }

inline std::vector<BigInt> bigs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

/// (x1^2, x1*x2, ..., x1*x100, x2^2, x2*x3, ..., x2*x13) in 100 variables.
inline MonomialIdeal lex100_ideal() {
  std::vector<Monomial> g;
  g.push_back(Monomial::variable(100, 1, 2));
  for (std::size_t j = 2; j <= 100; ++j) {
    Monomial u = Monomial::variable(100, 1);
    u.set_exp(j, 1);
    g.push_back(u);
  }
  g.push_back(Monomial::variable(100, 2, 2));
  for (std::size_t j = 3; j <= 13; ++j) {
    Monomial u = Monomial::variable(100, 2);
    u.set_exp(j, 1);
    g.push_back(u);
  }
  return MonomialIdeal::from_generators(100, std::move(g));
}

}  // namespace hdx::testing

#endif
