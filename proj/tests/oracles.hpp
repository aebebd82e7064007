#pragma once

// Brute-force references for the test suites. Nothing here calls into the
// library's algorithms beyond the Partition value type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "grasstilt/bigint.hpp"
#include "grasstilt/bott.hpp"
#include "grasstilt/partition.hpp"

namespace oracle {

using grasstilt::BigInt;
using grasstilt::Partition;

/// Pascal's triangle.
inline BigInt pascal(long long n, long long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    std::vector<BigInt> row{1};
    for (long long i = 1; i <= n; ++i) {
        std::vector<BigInt> next(row.size() + 1, 0);
        for (std::size_t j = 0; j < next.size(); ++j)
            next[j] = (j < row.size() ? row[j] : BigInt(0)) + (j > 0 ? row[j - 1] : BigInt(0));
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

/// Transpose by listing cells and counting per column.
inline Partition conjugate_by_cells(const Partition& p)
{
    std::set<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < p.length(); ++r)
        for (int c = 0; c < p[r]; ++c)
            cells.insert({c, static_cast<int>(r)});
    std::vector<int> rows;
    for (const auto& [r, c] : cells) {
        if (static_cast<std::size_t>(r) >= rows.size())
            rows.resize(static_cast<std::size_t>(r) + 1, 0);
        ++rows[static_cast<std::size_t>(r)];
    }
    return Partition(rows);
}

/// Every vector in [0, cols]^rows that is weakly decreasing.
inline std::vector<Partition> box_by_filter(int rows, int cols)
{
    std::vector<Partition> out;
    std::vector<int> v(static_cast<std::size_t>(rows), 0);
    while (true) {
        if (std::is_sorted(v.begin(), v.end(), std::greater<>()))
            out.emplace_back(v);
        std::size_t i = v.size();
        while (i > 0 && v[i - 1] == cols)
            v[--i] = 0;
        if (i == 0)
            break;
        ++v[i - 1];
    }
    return out;
}

/// Prefix sums after padding: +1 a dominates, -1 b dominates, 0 equal, 2 incomparable.
inline int dominance_by_prefix_sums(const Partition& a, const Partition& b)
{
    std::vector<int> pa, pb;
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.length(), b.length()); ++i) {
        pa.push_back(sa += a[i]);
        pb.push_back(sb += b[i]);
    }
    bool ge = true, le = true;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        ge = ge && pa[i] >= pb[i];
        le = le && pa[i] <= pb[i];
    }
    if (ge && le)
        return 0;
    if (ge)
        return 1;
    if (le)
        return -1;
    return 2;
}

/// Number of semistandard tableaux of shape p with entries in 1..n.
inline std::int64_t count_ssyt(const Partition& p, int n)
{
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < p.length(); ++r)
        for (int c = 0; c < p[r]; ++c)
            cells.push_back({static_cast<int>(r), c});
    std::vector<std::vector<int>> t(p.length());
    for (std::size_t r = 0; r < p.length(); ++r)
        t[r].assign(static_cast<std::size_t>(p[r]), 0);
    std::int64_t count = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[i];
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0)
            lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            fill(i + 1);
        }
    };
    fill(0);
    return count;
}

/// Weight of E^∨ ⊗ ω for E of weight w on Grass(l, m), ω = det(Q^∨ ⊗ R).
inline grasstilt::GLWeight serre_dual(const grasstilt::GrassContext& ctx, const grasstilt::GLWeight& w)
{
    grasstilt::GLWeight d;
    const int l = ctx.l();
    const int m = ctx.m();
    for (int i = l - 1; i >= 0; --i)
        d.entries.push_back(-w.entries[static_cast<std::size_t>(i)] - (m - l));
    for (int i = m - 1; i >= l; --i)
        d.entries.push_back(-w.entries[static_cast<std::size_t>(i)] + l);
    return d;
}

}  // namespace oracle
