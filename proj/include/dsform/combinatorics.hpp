#pragma once

// Small exact-arithmetic helpers shared by the checkers, constructions and oracles.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace dsform {

/// C(n, k) with overflow detection; 0 when k > n.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t const factor = n - k + i;
        if (result > UINT64_MAX / factor) throw std::overflow_error("binomial overflow");
        result = result * factor / i;
    }
    return result;
}

constexpr std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (result > UINT64_MAX / i) throw std::overflow_error("factorial overflow");
        result *= i;
    }
    return result;
}

constexpr std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) throw std::overflow_error("power overflow");
        result *= base;
    }
    return result;
}

/// Calls fn(std::span<const std::size_t>) for every k-subset of {0..n-1},
/// in lexicographic order. Stops early if fn returns false.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(std::span<const std::size_t>(idx))) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace dsform
