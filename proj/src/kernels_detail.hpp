#ifndef HDX_KERNELS_DETAIL_HPP
#define HDX_KERNELS_DETAIL_HPP

#include "hdx/kernels.hpp"

namespace hdx::kernels::detail {

bool completes_no_support(const Support& face, const Support& candidates,
                          std::span<const Support> supports);

/// Candidates w (all above the face's last element) with face + {w} a face.
Support extend_candidates(const Support& face, Support candidates,
                          std::span<const Support> supports);

/// Adds to counts[k] the number of k-element faces of the form face + T,
/// T a subset of candidates. face must itself be a face.
void count_faces(std::size_t face_size, const Support& face, Support candidates,
                 std::span<const Support> supports, std::vector<BigInt>& counts);

Support root_candidates(std::size_t n, std::span<const Support> supports);

}  // namespace hdx::kernels::detail

#endif
