#pragma once

// Brute-force reference computations for tests. Nothing here goes through
// the Series arithmetic under test: products are expanded with plain
// schoolbook loops over int64 and counts come from direct enumeration.

#include <cstdint>
#include <functional>
#include <vector>

#include "podium/series.hpp"

namespace oracle {

using Poly = std::vector<std::int64_t>;

// Multiply p by (1 + c q^e), truncated to p.size() terms.
inline void times_binomial(Poly& p, std::int64_t c, std::size_t e)
{
    Poly out = p;
    for (std::size_t i = 0; i + e < p.size(); ++i)
        out[i + e] += c * p[i];
    p = out;
}

// prod over k >= 0 of (1 + c q^(a + k b)), truncated at order n.
inline Poly expand_product(std::int64_t c, std::size_t a, std::size_t b, std::size_t n)
{
    Poly p(n + 1, 0);
    p[0] = 1;
    for (std::size_t e = a; e <= n; e += b)
        times_binomial(p, c, e);
    return p;
}

inline Poly naive_mul(const Poly& x, const Poly& y)
{
    const std::size_t n = std::min(x.size(), y.size());
    Poly out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            out[i + j] += x[i] * y[j];
    return out;
}

// Number of partitions of n whose parts all satisfy `allowed`, each part
// value used at most `max_mult` times (0 = unlimited). Recursive walk over
// part sizes in decreasing order.
inline std::int64_t count_partitions(int n, const std::function<bool(int)>& allowed,
                                     int max_mult = 0, int largest = -1)
{
    if (largest < 0)
        largest = n;
    if (n == 0)
        return 1;
    std::int64_t total = 0;
    for (int part = std::min(n, largest); part >= 1; --part) {
        if (!allowed(part))
            continue;
        for (int m = 1; m * part <= n && (max_mult == 0 || m <= max_mult); ++m)
            total += count_partitions(n - m * part, allowed, max_mult, part - 1);
    }
    return total;
}

inline podium::Series to_series(const Poly& p)
{
    std::vector<podium::BigInt> v;
    for (auto x : p)
        v.emplace_back(static_cast<long>(x));
    return podium::Series(std::move(v));
}

} // namespace oracle
