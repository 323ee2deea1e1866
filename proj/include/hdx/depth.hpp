#ifndef HDX_DEPTH_HPP
#define HDX_DEPTH_HPP

#include "hdx/ideal.hpp"
#include "hdx/lexify.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hdx {

/// mult * t^shift / (1 - t)^dim
struct DecompositionTerm {
  long shift = 0;
  long dim = 0;
  BigInt mult;

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// A Hilbert decomposition H(t) = sum of terms, stored flat. Grouping by
/// dimension happens only for display.
struct HilbertDecomposition {
  std::vector<DecompositionTerm> terms;
  std::size_t n = 0;

  /// Minimum dim over the terms; n for the empty decomposition.
  long depth() const;
  /// sum of mult * t^shift * (1 - t)^(n - dim)
  IntPolynomial numerator() const;
  /// dim -> Q_dim(t)
  std::map<long, IntPolynomial> grouped() const;
};

enum class DepthMethod { squarefree_path, series_path };
std::string to_string(DepthMethod m);

/// A rejected candidate: q is the codepth n - p that was tried.
struct TraceEntry {
  long q = 0;
  long first_negative_index = 0;
  BigInt value;
};

struct DepthReport {
  long hdepth = 0;
  HilbertDecomposition certificate;
  DepthMethod method = DepthMethod::series_path;
  std::vector<TraceEntry> trace;
  /// b_d, b_{d+1}, ... of the accepted candidate.
  std::vector<BigInt> coefficients;
  /// Accepted codepth: q for the series path, (ring size) - p otherwise.
  long q = 0;
  /// Padding degree m (series path) or the ring of the squarefree ideal.
  std::size_t m = 0;
  /// Set by hdepth_algorithm1: the depth of I^sigma of the lex ideal.
  std::optional<long> sigma_hdepth;
};

/// b_d..b_p with sum b_i t^i (1 + t)^(p - i) = g. Throws InvalidInput when g
/// has a term outside degrees d..p.
std::vector<BigInt> convert_d1(const IntPolynomial& g, unsigned d, unsigned p);

/// b_d..b_m with sum b_i t^i (1 - t)^(beta_i) = h where beta_i = q for
/// i <= m - q and m - i afterwards. Requires q <= m - d and h supported in
/// degrees d..m.
std::vector<BigInt> convert_d2(const IntPolynomial& h, unsigned d, unsigned m, unsigned q);

struct DepthOptions {
  bool parallel = true;
  /// Series path only. Unset: deg Q, or lexify's m when strict_m is set.
  std::optional<std::size_t> m;
  bool strict_m = false;
  LexifyOptions lexify;
};

/// Squarefree ideals via the (1 + t) basis of the squarefree counts.
DepthReport hdepth_squarefree(const MonomialIdeal& ideal, const DepthOptions& options = {});

/// Any Hilbert series: the smallest q whose (1 - t) basis expansion is
/// nonnegative.
DepthReport hdepth_series(const HilbertFunctionView& v, const DepthOptions& options = {});

/// lexify -> sigma -> hdepth_squarefree, shifted back by m - n.
DepthReport hdepth_algorithm1(const MonomialIdeal& ideal, const DepthOptions& options = {});

struct CertificateCheck {
  bool ok = false;
  std::string diagnostic;
};

/// Exact check of sum b t^s (1 - t)^(n - z) against v's numerator, plus
/// range checks on every term. When claimed_depth is given the minimum
/// dimension must equal it.
CertificateCheck validate_certificate(const HilbertDecomposition& c, const HilbertFunctionView& v,
                                      std::optional<long> claimed_depth = std::nullopt);

}  // namespace hdx

#endif
