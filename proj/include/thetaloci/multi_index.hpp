#ifndef THETALOCI_MULTI_INDEX_HPP
#define THETALOCI_MULTI_INDEX_HPP

#include <cstdint>
#include <vector>

namespace thetaloci {

// Symmetric derivative tensors are stored on non-decreasing multi-indices
// (i_1 <= ... <= i_h) over {0, ..., g-1}, enumerated in lexicographic order.
// The same ordering is reused everywhere a tensor or a tau_ij coordinate is
// flattened, so the pair (i, j), i <= j, lives at tau_pair_rank(g, i, j).

/// Number of non-decreasing multi-indices of length h over g letters,
/// i.e. C(g+h-1, h).
std::int64_t multi_index_count(int g, int h);

/// All non-decreasing multi-indices of length h over {0..g-1} in
/// lexicographic order.
std::vector<std::vector<int>> enumerate_multi_indices(int g, int h);

/// Lexicographic rank of a non-decreasing multi-index.
std::int64_t multi_index_rank(int g, const std::vector<int>& multi);

/// Inverse of multi_index_rank.
std::vector<int> multi_index_unrank(int g, int h, std::int64_t rank);

/// Sorted concatenation of two multi-indices (merge of sorted sequences).
std::vector<int> merge_multi_indices(const std::vector<int>& a, const std::vector<int>& b);

inline std::int64_t tau_pair_count(int g) { return static_cast<std::int64_t>(g) * (g + 1) / 2; }

/// Rank of the coordinate tau_ij (0-based, i <= j) in the fixed row order
/// (0,0), (0,1), ..., (0,g-1), (1,1), ..., (g-1,g-1).
std::int64_t tau_pair_rank(int g, int i, int j);

/// All (i, j) pairs with i <= j in the fixed order above.
std::vector<std::pair<int, int>> tau_pairs(int g);

}  // namespace thetaloci

#endif
