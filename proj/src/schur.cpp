#include "grasstilt/schur.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace grasstilt {

BigInt binomial(long long n, long long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

VirtualSchurSum VirtualSchurSum::single(const Partition& p, std::optional<int> rank_bound)
{
    VirtualSchurSum s(rank_bound);
    s.add(p, 1);
    return s;
}

void VirtualSchurSum::add(const Partition& p, const BigInt& multiplicity)
{
    if (multiplicity == 0)
        return;
    if (rank_bound_ && static_cast<int>(p.length()) > *rank_bound_)
        return;
    auto [it, inserted] = terms_.try_emplace(p, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BigInt VirtualSchurSum::coefficient(const Partition& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt VirtualSchurSum::dimension(int n) const
{
    BigInt total = 0;
    for (const auto& [p, mult] : terms_)
        total += mult * schur_dim(p, n);
    return total;
}

VirtualSchurSum& VirtualSchurSum::operator+=(const VirtualSchurSum& other)
{
    for (const auto& [p, mult] : other.terms_)
        add(p, mult);
    return *this;
}

VirtualSchurSum VirtualSchurSum::operator-() const
{
    VirtualSchurSum out(rank_bound_);
    for (const auto& [p, mult] : terms_)
        out.terms_.emplace(p, -mult);
    return out;
}

namespace {

struct Cell {
    int row;
    int col;
};

// Cells of g/a in row-major order.
std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner)
{
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < outer.length(); ++r)
        for (int c = inner[r]; c < outer[r]; ++c)
            cells.push_back({static_cast<int>(r), c});
    return cells;
}

struct FillingCounter {
    const Partition& inner;
    std::vector<Cell> cells;
    std::vector<std::vector<int>> grid;  // 0 = not yet filled / inner cell
    std::vector<int> content_left;
    BigInt count = 0;

    int label_at(int r, int c) const
    {
        if (r < 0 || c < inner[static_cast<std::size_t>(r)])
            return 0;
        return grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    // Reverse reading word: rows top to bottom, each read right to left.
    bool lattice() const
    {
        std::vector<int> seen(content_left.size() + 1, 0);
        for (std::size_t r = 0; r < grid.size(); ++r) {
            for (int c = static_cast<int>(grid[r].size()) - 1; c >= inner[r]; --c) {
                const int v = grid[r][static_cast<std::size_t>(c)];
                ++seen[static_cast<std::size_t>(v)];
                if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)])
                    return false;
            }
        }
        return true;
    }

    void fill(std::size_t idx)
    {
        if (idx == cells.size()) {
            if (lattice())
                ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        const int left = label_at(r, c - 1);
        const int above = label_at(r - 1, c);
        for (std::size_t v = 1; v < content_left.size() + 1; ++v) {
            const int label = static_cast<int>(v);
            if (content_left[v - 1] == 0 || label < left || label <= above)
                continue;
            --content_left[v - 1];
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = label;
            fill(idx + 1);
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
            ++content_left[v - 1];
        }
    }
};

}  // namespace

BigInt lr_coefficient_oracle(const Partition& a, const Partition& b, const Partition& g)
{
    if (g.size() != a.size() + b.size() || !a.contained_in(g))
        return 0;
    FillingCounter counter{a, skew_cells(g, a), {}, {}, 0};
    for (std::size_t r = 0; r < g.length(); ++r)
        counter.grid.emplace_back(static_cast<std::size_t>(g[r]), 0);
    counter.content_left.assign(b.parts().begin(), b.parts().end());
    counter.fill(0);
    return counter.count;
}

namespace {

// Builds LR tableaux of shape ?/a and content b one label at a time. Label i
// occupies a horizontal strip; the reverse reading word is a lattice word iff
// for every row r the number of i's in rows <= r is at most the number of
// (i-1)'s in rows < r.
class LrBuilder {
public:
    LrBuilder(const Partition& a, const Partition& b, std::optional<int> rank_bound, VirtualSchurSum& out)
        : b_(b), out_(out)
    {
        std::size_t rows = a.length() + b.length();
        if (rank_bound)
            rows = std::min(rows, static_cast<std::size_t>(*rank_bound));
        rows_ = rows;
        shape_ = a.padded(rows_);
        counts_.assign(b.length(), std::vector<int>(rows_, 0));
    }

    void run() { place_label(0); }

private:
    void place_label(std::size_t label)
    {
        if (label == b_.length()) {
            out_.add(Partition(shape_), 1);
            return;
        }
        const std::vector<int> before = shape_;
        place_rows(label, 0, b_[label], 0, 0, before);
    }

    // cum_this: label's boxes placed in rows < r; cum_prev: (label-1)'s boxes in rows < r.
    void place_rows(std::size_t label, std::size_t r, int remaining, int cum_this, int cum_prev,
                    const std::vector<int>& before)
    {
        if (remaining == 0) {
            place_label(label + 1);
            return;
        }
        if (r == rows_)
            return;
        int cap = remaining;
        if (r > 0)
            cap = std::min(cap, before[r - 1] - before[r]);
        if (label > 0)
            cap = std::min(cap, cum_prev - cum_this);
        const int prev_here = label > 0 ? counts_[label - 1][r] : 0;
        for (int k = cap; k >= 0; --k) {
            shape_[r] += k;
            counts_[label][r] = k;
            place_rows(label, r + 1, remaining - k, cum_this + k, cum_prev + prev_here, before);
            counts_[label][r] = 0;
            shape_[r] -= k;
        }
    }

    const Partition& b_;
    VirtualSchurSum& out_;
    std::size_t rows_ = 0;
    std::vector<int> shape_;
    std::vector<std::vector<int>> counts_;
};

}  // namespace

VirtualSchurSum lr_expand(const Partition& a, const Partition& b, std::optional<int> rank_bound)
{
    VirtualSchurSum out(rank_bound);
    if (rank_bound && (static_cast<int>(a.length()) > *rank_bound || static_cast<int>(b.length()) > *rank_bound))
        return out;
    if (b.empty()) {
        out.add(a, 1);
        return out;
    }
    LrBuilder builder(a, b, rank_bound, out);
    builder.run();
    return out;
}

VirtualSchurSum multiply(const VirtualSchurSum& x, const Partition& b, std::optional<int> rank_bound)
{
    VirtualSchurSum out(rank_bound);
    for (const auto& [p, mult] : x.terms()) {
        const auto product = lr_expand(p, b, rank_bound);
        for (const auto& [g, c] : product.terms())
            out.add(g, mult * c);
    }
    return out;
}

VirtualSchurSum multiply(const VirtualSchurSum& x, const VirtualSchurSum& y, std::optional<int> rank_bound)
{
    VirtualSchurSum out(rank_bound);
    for (const auto& [q, mult] : y.terms()) {
        const auto product = multiply(x, q, rank_bound);
        for (const auto& [g, c] : product.terms())
            out.add(g, mult * c);
    }
    return out;
}

namespace {

void add_vertical_strip(const std::vector<int>& base, std::vector<int>& shape, std::size_t r, int remaining,
                        VirtualSchurSum& out)
{
    if (remaining == 0) {
        out.add(Partition(shape), 1);
        return;
    }
    if (r == shape.size())
        return;
    // Skipping row r keeps the shape a partition; adding needs room under row r-1.
    if (r == 0 || shape[r - 1] >= base[r] + 1) {
        shape[r] += 1;
        add_vertical_strip(base, shape, r + 1, remaining - 1, out);
        shape[r] -= 1;
    }
    if (shape.size() - r - 1 >= static_cast<std::size_t>(remaining))
        add_vertical_strip(base, shape, r + 1, remaining, out);
}

}  // namespace

VirtualSchurSum pieri_column(const Partition& a, int u, std::optional<int> rank_bound)
{
    if (u < 0)
        throw std::invalid_argument("exterior degree must be non-negative");
    VirtualSchurSum out(rank_bound);
    std::size_t rows = a.length() + static_cast<std::size_t>(u);
    if (rank_bound)
        rows = std::min(rows, static_cast<std::size_t>(std::max(*rank_bound, 0)));
    if (a.length() > rows)
        return out;
    const std::vector<int> base = a.padded(rows);
    std::vector<int> shape = base;
    add_vertical_strip(base, shape, 0, u, out);
    return out;
}

VirtualSchurSum exterior_product_character(std::span<const int> useq, int n)
{
    for (int u : useq)
        if (u < 0 || u > n)
            throw std::invalid_argument("exterior degree outside [0, rank]");
    VirtualSchurSum acc = VirtualSchurSum::single(Partition{}, n);
    for (int u : useq) {
        VirtualSchurSum next(n);
        for (const auto& [p, mult] : acc.terms()) {
            const auto strips = pieri_column(p, u, n);
            for (const auto& [g, c] : strips.terms())
                next.add(g, mult * c);
        }
        acc = std::move(next);
    }
    return acc;
}

BigInt schur_dim(const Partition& a, int n)
{
    if (static_cast<int>(a.length()) > n)
        return 0;
    const Partition conj = conjugate(a);
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t r = 0; r < a.length(); ++r) {
        for (int c = 0; c < a[r]; ++c) {
            num *= n + c - static_cast<int>(r);
            den *= (a[r] - c) + (conj[static_cast<std::size_t>(c)] - static_cast<int>(r)) - 1;
        }
    }
    return num / den;
}

}  // namespace grasstilt
