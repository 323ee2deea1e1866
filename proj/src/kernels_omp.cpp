#include "hdx/kernels.hpp"

#include "kernels_detail.hpp"

#include <omp.h>

#include <algorithm>

namespace hdx::kernels {

std::vector<BigInt> face_counts_parallel(std::size_t n, std::span<const Support> supports) {
  std::vector<BigInt> counts(n + 1, BigInt(0));
  counts[0] = 1;  // the empty face
  const Support root = detail::root_candidates(n, supports);
  std::vector<std::size_t> firsts;
  for (auto v = root.find_first(); v != Support::npos; v = root.find_next(v)) firsts.push_back(v);

  // Faces are split by their smallest element.
  const long branches = static_cast<long>(firsts.size());
#pragma omp parallel
  {
    std::vector<BigInt> local(n + 1, BigInt(0));
#pragma omp for schedule(dynamic, 1)
    for (long b = 0; b < branches; ++b) {
      const std::size_t v = firsts[static_cast<std::size_t>(b)];
      Support face(n);
      face.set(v);
      Support later = root;
      for (std::size_t w = 0; w <= v; ++w) later.reset(w);
      detail::count_faces(1, face, detail::extend_candidates(face, later, supports), supports,
                          local);
    }
#pragma omp critical(hdx_face_merge)
    for (std::size_t k = 0; k <= n; ++k) counts[k] += local[k];
  }
  return counts;
}

long first_accepted_parallel(long count, const Acceptor& accept) {
  const long batch = std::max(1, omp_get_max_threads());
  std::vector<char> ok(static_cast<std::size_t>(batch));
  for (long start = 0; start < count; start += batch) {
    const long stop = std::min(count, start + batch);
#pragma omp parallel for schedule(static, 1)
    for (long i = start; i < stop; ++i) ok[static_cast<std::size_t>(i - start)] = accept(i) ? 1 : 0;
    for (long i = start; i < stop; ++i)
      if (ok[static_cast<std::size_t>(i - start)]) return i;
  }
  return -1;
}

}  // namespace hdx::kernels
