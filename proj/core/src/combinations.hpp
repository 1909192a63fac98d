#pragma once

#include <functional>
#include <vector>

namespace spiderkeep::detail {

// Visits every k-subset of `pool` in lexicographic order (pool order).
// The visitor gets the subset as indices into pool translated to values;
// returning false stops the enumeration.
inline bool for_each_combination(const std::vector<int>& pool, int k,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
    int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> subset(k);
    while (true) {
        for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
        if (!visit(subset)) return false;
        if (k == 0) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r < 0 || r > (1ll << 62)) return 1ll << 62;  // saturate
    }
    return r;
}

}  // namespace spiderkeep::detail
