#ifndef THETALOCI_THETA_SUM_HPP
#define THETALOCI_THETA_SUM_HPP

#include <cstdint>
#include <vector>

#include "thetaloci/types.hpp"

namespace thetaloci {

// Summation kernels for theta derivative jets over the lattice box
// [-R, R]^g. The canonical summation order is: within each slice (fixed
// first coordinate) terms accumulate in lexicographic order of the remaining
// coordinates; slice partials are then combined in increasing first
// coordinate. The OpenMP kernel distributes slices over threads and combines
// the stored partials in the same fixed order, so its output is bit-identical
// to the serial kernel for any thread count.

/// Shared flat layout of all derivative tensors up to a given order. Entries
/// of level h are the non-decreasing multi-indices of length h in
/// lexicographic order; each entry extends a level-(h-1) parent by one letter,
/// which lets a kernel build all monomial factors with one multiply per entry.
struct JetBasis {
    struct Node {
        std::int32_t parent;  // index within the previous level
        std::int32_t letter;  // appended coordinate
    };

    int g = 0;
    int order = 0;
    std::vector<std::vector<Node>> levels;  // levels[h], h = 0..order
    std::vector<std::size_t> offsets;       // flat offset of each level
    std::size_t total = 0;

    static JetBasis build(int g, int order);
};

struct ThetaSumParams {
    std::vector<int> eps;    // characteristic bits
    std::vector<int> delta;  // characteristic bits
    CMatrix tau;
    CVector z;
    int radius = 0;
    bool compensated = false;  // Kahan accumulation (slice sums and combine)
};

/// Reference kernel: one slice at a time, in order.
void theta_jet_sum_serial(const ThetaSumParams& params, const JetBasis& basis, cdouble* out);

/// OpenMP kernel over slices; falls back to the same sequential loop when
/// OpenMP is unavailable.
void theta_jet_sum_parallel(const ThetaSumParams& params, const JetBasis& basis, cdouble* out);

}  // namespace thetaloci

#endif
