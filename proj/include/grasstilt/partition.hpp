#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace grasstilt {

/// Integer partition in canonical form: weakly decreasing, strictly
/// positive parts, no trailing zeros. The empty partition is valid.
///
/// Every constructor normalizes trailing zeros away and throws
/// std::invalid_argument on negative or increasing input.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    /// Part i (0-based); zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Parts zero-padded (or not truncated) to at least n entries.
    std::vector<int> padded(std::size_t n) const;

    /// Young diagram containment: (*this)[i] <= other[i] for all i.
    bool contained_in(const Partition& other) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Lexicographic comparison from the largest part, shorter partition padded
/// with zeros. Total order; (2,1) > (2) > (1,1).
std::strong_ordering lex_compare(const Partition& a, const Partition& b);

/// Strict-weak ordering adaptor placing lex-larger partitions first.
struct LexDescending {
    bool operator()(const Partition& a, const Partition& b) const { return lex_compare(a, b) > 0; }
};

Partition conjugate(const Partition& a);

enum class Dominance { dominated, equal, dominates, incomparable };

/// Dominance order on partitions of equal size; `dominates` means every
/// prefix sum of `a` is at least the matching prefix sum of `b`.
/// Throws std::domain_error when the sizes differ.
Dominance dominance_compare(const Partition& a, const Partition& b);

/// Partitions with at most `rows` parts and first part at most `cols`.
struct PartitionBox {
    int rows = 0;
    int cols = 0;

    bool contains(const Partition& p) const;
};

/// All partitions fitting in the box, lex descending. binomial(rows+cols, rows) of them.
std::vector<Partition> enumerate_box(PartitionBox box);

/// All partitions of n, lex descending.
std::vector<Partition> partitions_of(int n);

/// All partitions of size at most n, grouped by size ascending.
std::vector<Partition> partitions_up_to(int n);

}  // namespace grasstilt
