#ifndef HDX_KERNELS_HPP
#define HDX_KERNELS_HPP

// Hot loops, each in two flavours: a plain serial reference and an OpenMP
// version. Both must return identical results; tests/test_kernels.cpp and
// bench/bench_kernels.cpp compare them.

#include "hdx/intpoly.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hdx::kernels {

using Support = boost::dynamic_bitset<>;

/// Face counts of the simplicial complex on {0..n-1} whose non-faces are the
/// supersets of the given supports: result[k] = number of k-subsets that
/// contain no support. Length n + 1.
std::vector<BigInt> face_counts_serial(std::size_t n, std::span<const Support> supports);
std::vector<BigInt> face_counts_parallel(std::size_t n, std::span<const Support> supports);

/// Evaluates accept(0), accept(1), ... and returns the first index for which
/// it returns true, or -1 when none of [0, count) does. accept(i) may only
/// write state owned by slot i. The parallel version evaluates candidates in
/// thread-sized batches and may touch a few indices past the answer.
using Acceptor = std::function<bool(long)>;
long first_accepted_serial(long count, const Acceptor& accept);
long first_accepted_parallel(long count, const Acceptor& accept);

inline long first_accepted(long count, const Acceptor& accept, bool parallel) {
  return parallel ? first_accepted_parallel(count, accept) : first_accepted_serial(count, accept);
}

}  // namespace hdx::kernels

#endif
