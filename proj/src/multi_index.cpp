#include "thetaloci/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetaloci {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

std::int64_t multi_index_count(int g, int h) {
    return binomial(static_cast<std::int64_t>(g) + h - 1, h);
}

std::vector<std::vector<int>> enumerate_multi_indices(int g, int h) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(multi_index_count(g, h)));
    std::vector<int> cur(h, 0);
    if (h == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(cur);
        int p = h - 1;
        while (p >= 0 && cur[p] == g - 1) --p;
        if (p < 0) break;
        int v = cur[p] + 1;
        for (int q = p; q < h; ++q) cur[q] = v;
    }
    return out;
}

std::int64_t multi_index_rank(int g, const std::vector<int>& multi) {
    const int h = static_cast<int>(multi.size());
    std::int64_t rank = 0;
    int lo = 0;
    for (int t = 0; t < h; ++t) {
        if (multi[t] < lo || multi[t] >= g) throw std::out_of_range("multi-index not non-decreasing in range");
        // sequences agreeing on the prefix with a smaller letter at position t
        for (int v = lo; v < multi[t]; ++v) {
            rank += binomial(static_cast<std::int64_t>(g - v) + (h - t - 1) - 1, h - t - 1);
        }
        lo = multi[t];
    }
    return rank;
}

std::vector<int> multi_index_unrank(int g, int h, std::int64_t rank) {
    std::vector<int> multi(h);
    int lo = 0;
    for (int t = 0; t < h; ++t) {
        int v = lo;
        while (true) {
            std::int64_t block = binomial(static_cast<std::int64_t>(g - v) + (h - t - 1) - 1, h - t - 1);
            if (rank < block) break;
            rank -= block;
            ++v;
            if (v >= g) throw std::out_of_range("multi-index rank out of range");
        }
        multi[t] = v;
        lo = v;
    }
    return multi;
}

std::vector<int> merge_multi_indices(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::int64_t tau_pair_rank(int g, int i, int j) {
    return multi_index_rank(g, {i, j});
}

std::vector<std::pair<int, int>> tau_pairs(int g) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(tau_pair_count(g)));
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) out.emplace_back(i, j);
    return out;
}

}  // namespace thetaloci
