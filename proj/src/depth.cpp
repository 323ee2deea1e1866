#include "hdx/depth.hpp"

#include "hdx/kernels.hpp"

#include <algorithm>
#include <functional>
#include <memory>

namespace hdx {

namespace {

class PowerCache {
public:
  explicit PowerCache(bool plus) : plus_(plus) {}
  const IntPolynomial& operator()(std::size_t q) {
    while (cache_.size() <= q) {
      const auto e = static_cast<unsigned>(cache_.size());
      cache_.push_back(plus_ ? pow_one_plus_t(e) : pow_one_minus_t(e));
    }
    return cache_[q];
  }

private:
  bool plus_;
  std::vector<IntPolynomial> cache_;
};

void require_support(const IntPolynomial& p, unsigned lo, unsigned hi, const char* what) {
  if (p.is_zero()) return;
  if (p.low_degree() < static_cast<long>(lo) || p.degree() > static_cast<long>(hi))
    throw InvalidInput(std::string(what) + ": polynomial " + p.to_string() +
                       " has terms outside degrees " + std::to_string(lo) + ".." +
                       std::to_string(hi));
}

std::optional<std::pair<long, BigInt>> first_negative(const std::vector<BigInt>& b, long first_index) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (sgn(b[i]) < 0) return std::make_pair(first_index + static_cast<long>(i), b[i]);
  return std::nullopt;
}

bool all_nonnegative(const std::vector<BigInt>& b) {
  return std::all_of(b.begin(), b.end(), [](const BigInt& x) { return sgn(x) >= 0; });
}

IntPolynomial truncate(const IntPolynomial& p, unsigned top) {
  std::vector<BigInt> c;
  for (long k = 0; k <= std::min<long>(top, p.degree()); ++k) c.push_back(p.coeff(k));
  return IntPolynomial(std::move(c));
}

}  // namespace

long HilbertDecomposition::depth() const {
  if (terms.empty()) return static_cast<long>(n);
  long d = terms.front().dim;
  for (const auto& t : terms) d = std::min(d, t.dim);
  return d;
}

IntPolynomial HilbertDecomposition::numerator() const {
  PowerCache powers(false);
  IntPolynomial out;
  for (const auto& t : terms)
    out.add_scaled_shifted(t.mult, static_cast<std::size_t>(t.shift),
                           powers(static_cast<std::size_t>(static_cast<long>(n) - t.dim)));
  return out;
}

std::map<long, IntPolynomial> HilbertDecomposition::grouped() const {
  std::map<long, IntPolynomial> out;
  for (const auto& t : terms) out[t.dim] += IntPolynomial::monomial(t.mult, static_cast<std::size_t>(t.shift));
  return out;
}

std::string to_string(DepthMethod m) {
  return m == DepthMethod::squarefree_path ? "squarefree_path" : "series_path";
}

std::vector<BigInt> convert_d1(const IntPolynomial& g, unsigned d, unsigned p) {
  if (p < d) throw InvalidInput("convert_d1 needs d <= p");
  require_support(g, d, p, "convert_d1");
  PowerCache powers(true);
  IntPolynomial rest = g;
  std::vector<BigInt> b;
  b.reserve(p - d + 1);
  for (unsigned i = d; i <= p; ++i) {
    BigInt bi = rest.coeff(i);
    rest.add_scaled_shifted(-bi, i, powers(p - i));
    b.push_back(std::move(bi));
  }
  return b;
}

std::vector<BigInt> convert_d2(const IntPolynomial& h, unsigned d, unsigned m, unsigned q) {
  if (m < d || q > m - d)
    throw InvalidInput("convert_d2 needs d <= m and q <= m - d (d=" + std::to_string(d) +
                       ", m=" + std::to_string(m) + ", q=" + std::to_string(q) + ")");
  require_support(h, d, m, "convert_d2");
  PowerCache powers(false);
  IntPolynomial rest = h;
  std::vector<BigInt> b;
  b.reserve(m - d + 1);
  for (unsigned i = d; i <= m; ++i) {
    const unsigned beta = i <= m - q ? q : m - i;
    BigInt bi = rest.coeff(i);
    rest.add_scaled_shifted(-bi, i, powers(beta));
    b.push_back(std::move(bi));
  }
  return b;
}

namespace {

// What the squarefree path needs: the counts a_i and, for a candidate p, the
// coefficients b_d..b_p of the counts truncated at p in the basis
// t^i (1 + t)^(p - i).
struct SquarefreeSource {
  std::size_t ring = 0;
  unsigned d = 0;
  std::function<BigInt(unsigned)> count;
  std::function<std::vector<BigInt>(unsigned)> expand;
};

SquarefreeSource source_of(const SquarefreeCounts& counts, std::size_t ring) {
  auto f = std::make_shared<IntPolynomial>(counts.as_polynomial());
  const unsigned d = counts.d;
  return {ring, d, [counts](unsigned i) { return counts.at(i); },
          [f, d](unsigned p) { return convert_d1(truncate(*f, p), d, p); }};
}

// A generator u with F = n - m(u) free variables contributes
// t^deg(u) (1 + t)^F to the counts; truncated at p its b-vector is
// t^deg(u) (1 - t)^(p - n + m(u) - deg(u)) read as a power series. Grouping
// by m(u) - deg(u) makes this a few passes over a vector of length p.
SquarefreeSource source_of(const StableProfile& profile) {
  auto prof = std::make_shared<StableProfile>(profile);
  const unsigned d = profile.min_degree();
  auto expand = [prof, d](unsigned p) {
    std::map<unsigned, std::vector<BigInt>> by_gap;
    for (const auto& [key, c] : prof->groups) {
      if (key.first > p) continue;
      auto& v = by_gap[key.second];
      if (v.empty()) v.assign(p + 1, BigInt(0));
      v[key.first] += c;
    }
    std::vector<BigInt> b(p + 1, BigInt(0));
    for (auto& [gap, v] : by_gap) {
      const long e = static_cast<long>(p) + gap - static_cast<long>(prof->n);
      if (e >= 0) {
        const IntPolynomial w = pow_one_minus_t(static_cast<unsigned>(std::min<long>(e, p)));
        for (unsigned i = 0; i <= p; ++i) {
          if (sgn(v[i]) == 0) continue;
          for (unsigned j = 0; j < w.coeffs().size() && i + j <= p; ++j)
            mpz_addmul(b[i + j].get_mpz_t(), v[i].get_mpz_t(), w.coeffs()[j].get_mpz_t());
        }
      } else {
        for (long r = 0; r < -e; ++r)
          for (unsigned i = 1; i <= p; ++i) v[i] += v[i - 1];
        for (unsigned i = 0; i <= p; ++i) b[i] += v[i];
      }
    }
    return std::vector<BigInt>(b.begin() + d, b.end());
  };
  return {profile.n, d, [prof](unsigned i) { return prof->count(i); }, expand};
}

DepthReport squarefree_report(const SquarefreeSource& src, const DepthOptions& options) {
  const long n = static_cast<long>(src.ring);
  const unsigned d = src.d;
  const BigInt lead = src.count(d);

  long top = 0;
  if (static_cast<long>(d) < n) {
    BigInt ratio = src.count(d + 1) / lead;
    top = ratio.fits_slong_p() ? std::min(ratio.get_si(), n - static_cast<long>(d))
                               : n - static_cast<long>(d);
  }

  // Candidate c tries j = top - c, i.e. depth d + j.
  const long candidates = top + 1;
  std::vector<std::vector<BigInt>> results(static_cast<std::size_t>(candidates));
  auto accept = [&](long c) {
    auto& b = results[static_cast<std::size_t>(c)];
    b = src.expand(d + static_cast<unsigned>(top - c));
    return all_nonnegative(b);
  };
  const long hit = kernels::first_accepted(candidates, accept, options.parallel);
  if (hit < 0) throw InvalidInput("squarefree path found no decomposition (counts are inconsistent)");

  DepthReport report;
  report.method = DepthMethod::squarefree_path;
  report.m = src.ring;
  const long p = static_cast<long>(d) + (top - hit);
  report.hdepth = p;
  report.q = n - p;
  report.coefficients = results[static_cast<std::size_t>(hit)];
  for (long c = 0; c < hit; ++c) {
    auto neg = first_negative(results[static_cast<std::size_t>(c)], d);
    report.trace.push_back({n - (static_cast<long>(d) + top - c), neg->first, neg->second});
  }
  report.certificate.n = src.ring;
  for (std::size_t i = 0; i < report.coefficients.size(); ++i)
    if (sgn(report.coefficients[i]) > 0)
      report.certificate.terms.push_back({static_cast<long>(d + i), p, report.coefficients[i]});
  for (long i = p + 1; i <= n; ++i) {
    BigInt a = src.count(static_cast<unsigned>(i));
    if (sgn(a) > 0) report.certificate.terms.push_back({i, i, a});
  }
  return report;
}

}  // namespace

DepthReport hdepth_squarefree(const MonomialIdeal& ideal, const DepthOptions& options) {
  if (ideal.is_squarefree() && is_squarefree_stable(ideal))
    return squarefree_report(source_of(stable_profile(ideal)), options);
  return squarefree_report(source_of(squarefree_counts(ideal, options.parallel), ideal.ring_size()), options);
}

DepthReport hdepth_series(const HilbertFunctionView& v, const DepthOptions& options) {
  const IntPolynomial& q_poly = v.numerator();
  if (q_poly.is_zero()) throw InvalidInput("hdepth of the zero series is undefined");
  const long n = static_cast<long>(v.ring_size());
  const unsigned d = static_cast<unsigned>(q_poly.low_degree());
  const auto deg = static_cast<std::size_t>(q_poly.degree());

  std::size_t m = deg;
  const bool fixed_m = options.m.has_value() || options.strict_m;
  if (options.m) {
    if (*options.m < deg)
      throw InvalidInput("padding degree m=" + std::to_string(*options.m) +
                         " is below the numerator degree " + std::to_string(deg));
    m = *options.m;
  } else if (options.strict_m) {
    m = std::max(m, lex_shape(v, options.lexify).m);
  }

  // Without a proven m, pad one degree at a time if every q fails; this
  // only happens for series that do not come from ideals.
  const std::size_t last_m = fixed_m ? m : deg + static_cast<std::size_t>(n) + 1;
  for (; m <= last_m; ++m) {
    const long candidates = static_cast<long>(m) - static_cast<long>(d) + 1;
    std::vector<std::vector<BigInt>> results(static_cast<std::size_t>(candidates));
    auto accept = [&](long q) {
      auto& b = results[static_cast<std::size_t>(q)];
      b = convert_d2(q_poly, d, static_cast<unsigned>(m), static_cast<unsigned>(q));
      return all_nonnegative(b);
    };
    const long hit = kernels::first_accepted(candidates, accept, options.parallel);
    if (hit < 0) continue;

    DepthReport report;
    report.method = DepthMethod::series_path;
    report.m = m;
    report.q = hit;
    report.hdepth = n - hit;
    if (report.hdepth < 0)
      throw InvalidInput("series path produced a negative depth; input is not an ideal's series");
    report.coefficients = results[static_cast<std::size_t>(hit)];
    for (long q = 0; q < hit; ++q) {
      auto neg = first_negative(results[static_cast<std::size_t>(q)], d);
      report.trace.push_back({q, neg->first, neg->second});
    }
    report.certificate.n = v.ring_size();
    for (std::size_t k = 0; k < report.coefficients.size(); ++k) {
      const BigInt& b = report.coefficients[k];
      if (sgn(b) == 0) continue;
      const long i = static_cast<long>(d + k);
      const long beta = i <= static_cast<long>(m) - hit ? hit : static_cast<long>(m) - i;
      report.certificate.terms.push_back({i, n - beta, b});
    }
    return report;
  }
  throw InvalidInput("no q up to m - d gives a nonnegative expansion");
}

DepthReport hdepth_algorithm1(const MonomialIdeal& ideal, const DepthOptions& options) {
  const auto view = HilbertFunctionView::of(ideal);
  // The image of a lex ideal is squarefree strongly stable, and its profile
  // only needs the lex generators counted by degree and max index.
  const StableProfile image = sigma_profile(lex_shape(view, options.lexify));
  DepthReport report = squarefree_report(source_of(image), options);

  const long shift = static_cast<long>(image.n) - static_cast<long>(ideal.ring_size());
  report.sigma_hdepth = report.hdepth;
  report.hdepth -= shift;
  report.m = image.n;
  report.q = static_cast<long>(ideal.ring_size()) - report.hdepth;
  // Trace entries keep the codepth m - p of the squarefree ideal, which
  // equals n - hdepth for the original ideal.
  for (auto& t : report.certificate.terms) t.dim -= shift;
  report.certificate.n = ideal.ring_size();
  return report;
}

CertificateCheck validate_certificate(const HilbertDecomposition& c, const HilbertFunctionView& v,
                                      std::optional<long> claimed_depth) {
  if (c.n != v.ring_size())
    return {false, "certificate ring size " + std::to_string(c.n) + " differs from " +
                       std::to_string(v.ring_size())};
  for (const auto& t : c.terms) {
    if (t.shift < 0 || t.dim < 0 || t.dim > static_cast<long>(c.n))
      return {false, "term t^" + std::to_string(t.shift) + "/(1-t)^" + std::to_string(t.dim) +
                         " is out of range"};
    if (sgn(t.mult) <= 0)
      return {false, "term t^" + std::to_string(t.shift) + "/(1-t)^" + std::to_string(t.dim) +
                         " has nonpositive multiplicity " + t.mult.get_str()};
  }
  const IntPolynomial got = c.numerator();
  const IntPolynomial& want = v.numerator();
  if (!(got == want)) {
    const long top = std::max(got.degree(), want.degree());
    for (long k = 0; k <= top; ++k)
      if (got.coeff(k) != want.coeff(k))
        return {false, "coefficient of t^" + std::to_string(k) + " is " + got.coeff(k).get_str() +
                           ", expected " + want.coeff(k).get_str()};
  }
  if (claimed_depth && c.depth() != *claimed_depth)
    return {false, "certificate depth " + std::to_string(c.depth()) + " differs from claimed " +
                       std::to_string(*claimed_depth)};
  return {true, {}};
}

}  // namespace hdx
