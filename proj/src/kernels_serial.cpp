#include "hdx/kernels.hpp"

#include "kernels_detail.hpp"

namespace hdx::kernels {

namespace detail {

bool completes_no_support(const Support& face, const Support& candidates,
                          std::span<const Support> supports) {
  Support all = face | candidates;
  for (const auto& s : supports)
    if (s.is_subset_of(all)) return false;
  return true;
}

Support extend_candidates(const Support& face, Support candidates,
                          std::span<const Support> supports) {
  // w is dropped iff some support minus the face is exactly {w}.
  for (const auto& s : supports) {
    Support missing = s - face;
    const auto w = missing.find_first();
    if (w == Support::npos) continue;
    if (missing.find_next(w) == Support::npos) candidates.reset(w);
  }
  return candidates;
}

void count_faces(std::size_t face_size, const Support& face, Support candidates,
                 std::span<const Support> supports, std::vector<BigInt>& counts) {
  for (;;) {
    if (completes_no_support(face, candidates, supports)) {
      const long free = static_cast<long>(candidates.count());
      for (long k = 0; k <= free; ++k) counts[face_size + k] += binomial(free, k);
      return;
    }
    const auto v = candidates.find_first();
    candidates.reset(v);
    Support grown = face;
    grown.set(v);
    count_faces(face_size + 1, grown, extend_candidates(grown, candidates, supports), supports,
                counts);
    // Exclusion branch continues in this frame.
  }
}

Support root_candidates(std::size_t n, std::span<const Support> supports) {
  Support c(n);
  c.set();
  for (const auto& s : supports)
    if (s.count() == 1) c.reset(s.find_first());
  return c;
}

}  // namespace detail

std::vector<BigInt> face_counts_serial(std::size_t n, std::span<const Support> supports) {
  std::vector<BigInt> counts(n + 1, BigInt(0));
  Support empty(n);
  detail::count_faces(0, empty, detail::root_candidates(n, supports), supports, counts);
  return counts;
}

long first_accepted_serial(long count, const Acceptor& accept) {
  for (long i = 0; i < count; ++i)
    if (accept(i)) return i;
  return -1;
}

}  // namespace hdx::kernels
