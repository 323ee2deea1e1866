#ifndef HDX_ORACLE_HPP
#define HDX_ORACLE_HPP

#include "hdx/lexify.hpp"

#include <optional>

namespace hdx {

struct OracleConfig {
  /// Extra coefficients inspected past deg(Q); unset means n + 1. Must be >= 1.
  std::optional<long> trunc_extra;
};

struct OracleResult {
  long p = 0;
  /// The last three inspected coefficients of the accepted series were
  /// positive and strictly decreasing, so a longer window might reject p.
  bool suspicious_tail = false;
  long inspected_degree = 0;
};

/// Largest p <= n such that Q / (1 - t)^(n - p) has nonnegative coefficients
/// in degrees 0..deg(Q) + trunc_extra. A truncated check: a test instrument
/// rather than a proof.
OracleResult max_nonneg_p(const HilbertFunctionView& v, const OracleConfig& cfg = {});

}  // namespace hdx

#endif
