#pragma once

// Integer partitions and hook lengths, by direct enumeration.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookdist {

struct Partition {
    std::vector<int> parts; // nonincreasing, positive

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    bool valid() const
    {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1])) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

inline std::vector<int> conjugate(const std::vector<int>& parts)
{
    if (parts.empty()) {
        return {};
    }
    std::vector<int> conj(static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts) {
        for (int j = 0; j < p; ++j) {
            ++conj[static_cast<std::size_t>(j)];
        }
    }
    return conj;
}

inline Partition conjugate(const Partition& lambda) { return Partition{conjugate(lambda.parts)}; }

/// Hook lengths h(k, j) = (lambda_k - k) + (lambda'_j - j) + 1, one per cell.
inline std::vector<int> hook_multiset(const Partition& lambda)
{
    const auto conj = conjugate(lambda.parts);
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    for (std::size_t k = 0; k < lambda.parts.size(); ++k) {
        for (int j = 0; j < lambda.parts[k]; ++j) {
            hooks.push_back((lambda.parts[k] - static_cast<int>(k) - 1) + (conj[static_cast<std::size_t>(j)] - j - 1)
                            + 1);
        }
    }
    return hooks;
}

/// Number of hook lengths divisible by t.
inline int count_t_hooks(const Partition& lambda, int t)
{
    int count = 0;
    for (int h : hook_multiset(lambda)) {
        if (h % t == 0) {
            ++count;
        }
    }
    return count;
}

namespace detail {

inline void enumerate(int remaining, int max_part, std::vector<int>& parts,
                      const std::function<void(const Partition&)>& visit)
{
    if (remaining == 0) {
        visit(Partition{parts});
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        enumerate(remaining - p, p, parts, visit);
        parts.pop_back();
    }
}

} // namespace detail

/// Visits every partition of n in descending lexicographic order.
inline void for_each_partition(int n, const std::function<void(const Partition&)>& visit)
{
    if (n < 0) {
        throw std::invalid_argument("for_each_partition: negative size");
    }
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(n));
    detail::enumerate(n, n, parts, visit);
}

inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

inline constexpr int brute_force_limit = 60;

/// Histogram of #H_t(lambda) over lambda |- n; entry c counts partitions with exactly c t-hooks.
inline std::vector<std::uint64_t> t_hook_histogram(int n, int t)
{
    if (n > brute_force_limit) {
        throw std::invalid_argument("t_hook_histogram: n = " + std::to_string(n) + " exceeds the enumeration guard "
                                    + std::to_string(brute_force_limit));
    }
    if (t < 1) {
        throw std::invalid_argument("t_hook_histogram: t must be positive");
    }
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
    for_each_partition(n, [&](const Partition& p) { ++hist[static_cast<std::size_t>(count_t_hooks(p, t))]; });
    return hist;
}

} // namespace hookdist
