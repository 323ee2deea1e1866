#ifndef HDX_LEXIFY_HPP
#define HDX_LEXIFY_HPP

#include "hdx/error.hpp"
#include "hdx/ideal.hpp"

#include <cstddef>

namespace hdx {

/// The Hilbert function k -> dim_K I_k of Q(t) / (1 - t)^n.
class HilbertFunctionView {
public:
  /// Rejects numerators whose series has a negative coefficient at or below
  /// horizon; a negative horizon means deg(Q) + n + 1.
  HilbertFunctionView(IntPolynomial numerator, std::size_t n, long horizon = -1);
  explicit HilbertFunctionView(const HilbertSeries& series, long horizon = -1)
      : HilbertFunctionView(series.numerator, series.n, horizon) {}

  static HilbertFunctionView of(const MonomialIdeal& ideal) {
    return HilbertFunctionView(hilbert_series(ideal));
  }

  const IntPolynomial& numerator() const { return numerator_; }
  std::size_t ring_size() const { return n_; }
  HilbertSeries series() const { return {numerator_, n_}; }

private:
  IntPolynomial numerator_;
  std::size_t n_;
};

/// dim_K I_k
BigInt hilbert_value(const HilbertFunctionView& v, long k);

class MacaulayViolation : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

struct LexifyOptions {
  unsigned max_degree = 10'000'000;
  /// Only lexify, which lists the generators, enforces this.
  std::size_t max_generators = 5'000'000;
};

struct LexIdeal {
  MonomialIdeal ideal;
  std::size_t m = 0;  // max(m(u) + deg(u) - 1) over minimal generators
};

/// The lex ideal with Hilbert function v, built degree by degree from lex
/// segments. Stops once the generators found so far already have the full
/// Hilbert series. Throws MacaulayViolation when v is not the Hilbert
/// function of an ideal and InvalidInput when max_degree is exceeded.
LexIdeal lexify(const HilbertFunctionView& v, const LexifyOptions& options = {});

/// Generators of the lex ideal counted by (degree, max index), without
/// listing them; lex ideals of small inputs can have millions.
struct LexShape {
  std::size_t n = 0;
  std::size_t m = 0;
  std::map<std::pair<unsigned, std::size_t>, BigInt> counts;
};

LexShape lex_shape(const HilbertFunctionView& v, const LexifyOptions& options = {});

/// Profile of the sigma image of the lex ideal with this shape.
StableProfile sigma_profile(const LexShape& shape);

}  // namespace hdx

#endif
