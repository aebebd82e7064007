#include "grasstilt/bott.hpp"

#include <algorithm>
#include <stdexcept>

#include "grasstilt/schur.hpp"

namespace grasstilt {

GrassContext::GrassContext(int l, int m) : l_(l), m_(m)
{
    if (l < 1 || l >= m)
        throw std::invalid_argument("Grassmannian needs 1 <= l < m");
}

std::span<const long> GLWeight::q_block(const GrassContext& ctx) const
{
    return std::span<const long>(entries).first(static_cast<std::size_t>(ctx.l()));
}

std::span<const long> GLWeight::r_block(const GrassContext& ctx) const
{
    return std::span<const long>(entries).subspan(static_cast<std::size_t>(ctx.l()));
}

bool GLWeight::is_dominant() const
{
    return std::is_sorted(entries.begin(), entries.end(), std::greater<>());
}

std::ostream& operator<<(std::ostream& os, const GLWeight& w)
{
    os << '(';
    for (std::size_t i = 0; i < w.entries.size(); ++i)
        os << (i ? "," : "") << w.entries[i];
    return os << ')';
}

bool BundleOrder::operator()(const TwistedSchurBundle& a, const TwistedSchurBundle& b) const
{
    if (auto c = lex_compare(a.gamma, b.gamma); c != 0)
        return c > 0;
    if (a.det_twist != b.det_twist)
        return a.det_twist < b.det_twist;
    return lex_compare(a.r_part, b.r_part) > 0;
}

void add_term(BundleSum& sum, const TwistedSchurBundle& b, const BigInt& mult)
{
    if (mult == 0)
        return;
    auto [it, inserted] = sum.try_emplace(b, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            sum.erase(it);
    }
}

void CohomologyTable::add(int degree, const GLWeight& weight, const BigInt& multiplicity, const BigInt& dim_each)
{
    if (multiplicity == 0)
        return;
    auto& row = rows_[degree];
    row.dimension += multiplicity * dim_each;
    auto [it, inserted] = row.weights.try_emplace(weight, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0)
            row.weights.erase(it);
    }
    prune(degree);
}

void CohomologyTable::add_dimension(int degree, const BigInt& dimension)
{
    rows_[degree].dimension += dimension;
    prune(degree);
}

CohomologyTable& CohomologyTable::operator+=(const CohomologyTable& other)
{
    for (const auto& [degree, row] : other.rows_) {
        auto& mine = rows_[degree];
        mine.dimension += row.dimension;
        for (const auto& [w, mult] : row.weights) {
            auto [it, inserted] = mine.weights.try_emplace(w, mult);
            if (!inserted) {
                it->second += mult;
                if (it->second == 0)
                    mine.weights.erase(it);
            }
        }
        prune(degree);
    }
    return *this;
}

void CohomologyTable::prune(int degree)
{
    auto it = rows_.find(degree);
    if (it != rows_.end() && it->second.weights.empty() && it->second.dimension == 0)
        rows_.erase(it);
}

BigInt CohomologyTable::dimension(int degree) const
{
    auto it = rows_.find(degree);
    return it == rows_.end() ? BigInt(0) : it->second.dimension;
}

std::map<int, BigInt> CohomologyTable::dimension_profile() const
{
    std::map<int, BigInt> out;
    for (const auto& [degree, row] : rows_)
        if (row.dimension != 0)
            out.emplace(degree, row.dimension);
    return out;
}

bool CohomologyTable::vanishes_in(int from, int to) const
{
    auto it = rows_.lower_bound(from);
    return it == rows_.end() || it->first > to;
}

CohomologyTable CohomologyTable::from_rows(Rows rows)
{
    CohomologyTable t;
    t.rows_ = std::move(rows);
    for (auto it = t.rows_.begin(); it != t.rows_.end();) {
        if (it->second.weights.empty() && it->second.dimension == 0)
            it = t.rows_.erase(it);
        else
            ++it;
    }
    return t;
}

GLWeight bundle_weight(const GrassContext& ctx, const TwistedSchurBundle& b)
{
    if (static_cast<int>(b.gamma.length()) > ctx.l())
        throw std::invalid_argument("gamma has more rows than rank Q");
    if (static_cast<int>(b.r_part.length()) > ctx.corank())
        throw std::invalid_argument("r_part has more rows than rank R");
    GLWeight w;
    w.entries.reserve(static_cast<std::size_t>(ctx.m()));
    for (int i = 0; i < ctx.l(); ++i)
        w.entries.push_back(static_cast<long>(b.gamma[static_cast<std::size_t>(i)]) - b.det_twist);
    for (int i = 0; i < ctx.corank(); ++i)
        w.entries.push_back(b.r_part[static_cast<std::size_t>(i)]);
    return w;
}

BigInt gl_dim(const GLWeight& w)
{
    if (w.entries.empty())
        return 1;
    const long low = w.entries.back();
    std::vector<int> shifted;
    shifted.reserve(w.entries.size());
    for (long e : w.entries)
        shifted.push_back(static_cast<int>(e - low));
    return schur_dim(Partition(std::move(shifted)), static_cast<int>(w.entries.size()));
}

CohomologyTable bott(const GrassContext& ctx, const GLWeight& w)
{
    if (static_cast<int>(w.entries.size()) != ctx.m())
        throw std::invalid_argument("weight length must equal m");
    auto decreasing = [](std::span<const long> s) { return std::is_sorted(s.begin(), s.end(), std::greater<>()); };
    if (!decreasing(w.q_block(ctx)) || !decreasing(w.r_block(ctx)))
        throw std::invalid_argument("weight blocks must be weakly decreasing");

    const std::size_t m = w.entries.size();
    std::vector<long> shifted(m);
    for (std::size_t i = 0; i < m; ++i)
        shifted[i] = w.entries[i] + static_cast<long>(m - 1 - i);

    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (shifted[i] == shifted[j])
                return {};
            if (shifted[i] < shifted[j])
                ++inversions;
        }
    }

    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    GLWeight top;
    top.entries.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        top.entries[i] = shifted[i] - static_cast<long>(m - 1 - i);

    CohomologyTable t;
    t.add(inversions, top, 1, gl_dim(top));
    return t;
}

CohomologyTable projective_line_bundle_oracle(int n, long d)
{
    if (n < 2)
        throw std::invalid_argument("projective oracle needs n >= 2");
    CohomologyTable t;
    if (d >= 0)
        t.add_dimension(0, binomial(d + n - 1, n - 1));
    else if (d <= -n)
        t.add_dimension(n - 1, binomial(-d - 1, n - 1));
    return t;
}

CohomologyTable bundle_cohomology(const GrassContext& ctx, const BundleSum& terms)
{
    CohomologyTable total;
    for (const auto& [bundle, mult] : terms) {
        const auto table = bott(ctx, bundle_weight(ctx, bundle));
        for (const auto& [degree, row] : table.rows())
            for (const auto& [weight, m] : row.weights)
                total.add(degree, weight, mult * m, gl_dim(weight));
    }
    return total;
}

}  // namespace grasstilt
