#pragma once

#include <cstdint>
#include <vector>

namespace dimforce {

/// Advances c (a k-combination of {0..n-1}, sorted ascending) to its
/// lexicographic successor. Returns false when c was the last combination.
/// Enumerating k = 0..n with this yields the canonical subset order used for
/// all brute-force witnesses: smallest size first, lexicographic within size.
inline bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> first_combination(int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    return c;
}

inline std::uint64_t to_mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    return m;
}

inline std::vector<int> from_mask(std::uint64_t m) {
    std::vector<int> vs;
    for (int v = 0; m; ++v, m >>= 1)
        if (m & 1) vs.push_back(v);
    return vs;
}

}  // namespace dimforce
