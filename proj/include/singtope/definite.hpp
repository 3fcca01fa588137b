#pragma once

// Exact negative-definiteness test for symmetric integer matrices.
//
// Fraction-free (Bareiss) elimination without pivoting: after step k the
// pivot entry is the leading principal minor of order k+1, so the sign
// pattern (-1)^k can be read off as elimination proceeds. All arithmetic is
// exact; the int64 path bails out to arbitrary precision on overflow.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "singtope/graph.hpp"

namespace singtope {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

    __extension__ using i128 = __int128;

    inline bool checked_bareiss_step(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                     std::int64_t div, std::int64_t& out)
    {
        // out = (a*b - c*d) / div, exact by Sylvester's identity
        i128 num = static_cast<i128>(a) * b - static_cast<i128>(c) * d;
        i128 q = num / div;
        if (q > INT64_MAX || q < INT64_MIN)
            return false;
        out = static_cast<std::int64_t>(q);
        return true;
    }

    /// Leading principal minors via int64 Bareiss; nullopt on overflow.
    /// Stops early (returning the minors so far) at the first zero minor.
    inline std::optional<std::vector<std::int64_t>> leading_minors_i64(const IntegerMatrix& m)
    {
        const std::size_t n = m.size();
        std::vector<std::int64_t> a(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i * n + j] = m(i, j);
        std::vector<std::int64_t> minors;
        std::int64_t prev = 1;
        for (std::size_t k = 0; k < n; ++k) {
            const std::int64_t pivot = a[k * n + k];
            minors.push_back(pivot);
            if (pivot == 0)
                return minors;
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    std::int64_t v;
                    if (!checked_bareiss_step(a[i * n + j], pivot, a[i * n + k], a[k * n + j], prev, v))
                        return std::nullopt;
                    a[i * n + j] = v;
                }
            }
            prev = pivot;
        }
        return minors;
    }

    inline std::vector<BigInt> leading_minors_big(const IntegerMatrix& m)
    {
        const std::size_t n = m.size();
        std::vector<BigInt> a(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i * n + j] = m(i, j);
        std::vector<BigInt> minors;
        BigInt prev = 1;
        for (std::size_t k = 0; k < n; ++k) {
            const BigInt pivot = a[k * n + k];
            minors.push_back(pivot);
            if (pivot == 0)
                return minors;
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / prev;
            prev = pivot;
        }
        return minors;
    }

} // namespace detail

/// Leading principal minors Delta_1..Delta_n, truncated after the first zero.
inline std::vector<BigInt> leading_principal_minors(const IntegerMatrix& m)
{
    if (auto fast = detail::leading_minors_i64(m)) {
        std::vector<BigInt> out(fast->begin(), fast->end());
        return out;
    }
    return detail::leading_minors_big(m);
}

/// Sylvester: a symmetric matrix is negative definite iff sign(Delta_k) = (-1)^k.
inline bool is_negative_definite(const IntegerMatrix& m)
{
    if (!m.is_symmetric())
        return false;
    const auto minors = leading_principal_minors(m);
    if (minors.size() != m.size())
        return false;
    for (std::size_t k = 0; k < minors.size(); ++k) {
        const bool odd_order = (k % 2) == 0; // Delta_{k+1}
        if (odd_order ? minors[k] >= 0 : minors[k] <= 0)
            return false;
    }
    return true;
}

inline bool is_negative_definite(const WeightedGraph& g)
{
    return is_negative_definite(intersection_matrix(g));
}

/// det of the intersection matrix (exact).
inline BigInt determinant(const IntegerMatrix& m)
{
    if (m.size() == 0)
        return 1;
    auto minors = leading_principal_minors(m);
    if (minors.size() == m.size())
        return minors.back();
    // A zero leading minor stops elimination without pivoting; fall back to a
    // pivoting fraction-free pass.
    const std::size_t n = m.size();
    std::vector<BigInt> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = m(i, j);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p * n + k] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

} // namespace singtope
