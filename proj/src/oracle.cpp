#include "hdx/oracle.hpp"

#include <algorithm>

namespace hdx {

OracleResult max_nonneg_p(const HilbertFunctionView& v, const OracleConfig& cfg) {
  const IntPolynomial& q = v.numerator();
  const long n = static_cast<long>(v.ring_size());
  const long extra = cfg.trunc_extra.value_or(n + 1);
  if (extra < 1) throw InvalidInput("trunc_extra must be at least 1");
  if (q.is_zero()) return {n, false, 0};

  const long d = q.low_degree();
  const long top = q.degree() + extra;

  // A decomposition of depth p puts at least p * h(d) monomials in degree d + 1.
  long p = n;
  const BigInt hd = hilbert_value(v, d);
  const BigInt ratio = hilbert_value(v, d + 1) / hd;
  if (ratio.fits_slong_p()) p = std::min(p, ratio.get_si());

  for (; p >= 0; --p) {
    const IntPolynomial s = series_div(q, static_cast<unsigned>(n - p), static_cast<std::size_t>(top));
    bool ok = true;
    for (long k = 0; k <= top && ok; ++k) ok = sgn(s.coeff(k)) >= 0;
    if (!ok) continue;
    const BigInt a = s.coeff(top - 2), b = s.coeff(top - 1), c = s.coeff(top);
    const bool falling = top >= 2 && sgn(c) > 0 && a > b && b > c;
    return {p, falling, top};
  }
  // Only reachable for series that are not Hilbert series of ideals.
  return {0, true, top};
}

}  // namespace hdx
