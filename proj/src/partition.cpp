#include "grasstilt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grasstilt {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(std::size_t n) const
{
    std::vector<int> out(parts_);
    if (out.size() < n)
        out.resize(n, 0);
    return out;
}

bool Partition::contained_in(const Partition& other) const
{
    if (length() > other.length())
        return false;
    for (std::size_t i = 0; i < length(); ++i)
        if (parts_[i] > other.parts_[i])
            return false;
    return true;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i)
        os << (i ? "," : "") << p[i];
    return os << ')';
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b)
{
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = a[i] <=> b[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

Partition conjugate(const Partition& a)
{
    if (a.empty())
        return {};
    std::vector<int> out(static_cast<std::size_t>(a[0]), 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        int rows = 0;
        while (static_cast<std::size_t>(rows) < a.length() && a[rows] > static_cast<int>(j))
            ++rows;
        out[j] = rows;
    }
    return Partition(std::move(out));
}

Dominance dominance_compare(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        throw std::domain_error("dominance order compares partitions of equal size only");
    bool a_above = false;
    bool b_above = false;
    int sa = 0;
    int sb = 0;
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
        a_above |= sa > sb;
        b_above |= sb > sa;
    }
    if (a_above && b_above)
        return Dominance::incomparable;
    if (a_above)
        return Dominance::dominates;
    if (b_above)
        return Dominance::dominated;
    return Dominance::equal;
}

bool PartitionBox::contains(const Partition& p) const
{
    return static_cast<int>(p.length()) <= rows && p[0] <= cols;
}

namespace {

// Emits partitions with parts bounded by `cap`, lex descending.
void fill_box(std::vector<int>& prefix, int rows_left, int cap, std::vector<Partition>& out)
{
    if (rows_left == 0 || cap == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = cap; part >= 0; --part) {
        if (part == 0) {
            out.emplace_back(prefix);
            continue;
        }
        prefix.push_back(part);
        fill_box(prefix, rows_left - 1, part, out);
        prefix.pop_back();
    }
}

void fill_size(std::vector<int>& prefix, int remaining, int cap, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
        prefix.push_back(part);
        fill_size(prefix, remaining - part, part, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_box(PartitionBox box)
{
    if (box.rows < 0 || box.cols < 0)
        throw std::invalid_argument("box dimensions must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    fill_box(prefix, box.rows, box.cols, out);
    return out;
}

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        return {};
    std::vector<Partition> out;
    std::vector<int> prefix;
    fill_size(prefix, n, n, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n)
{
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto level = partitions_of(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace grasstilt
