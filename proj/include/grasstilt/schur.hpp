#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>

#include "grasstilt/bigint.hpp"
#include "grasstilt/partition.hpp"

namespace grasstilt {

/// Formal integer combination of Schur functors L_p, optionally for a space of
/// fixed rank n. With a rank bound, L_p with more than n rows is zero and such
/// terms are dropped on insertion. Zero multiplicities are never stored.
class VirtualSchurSum {
public:
    using Terms = std::map<Partition, BigInt, LexDescending>;

    VirtualSchurSum() = default;
    explicit VirtualSchurSum(std::optional<int> rank_bound) : rank_bound_(rank_bound) {}

    static VirtualSchurSum single(const Partition& p, std::optional<int> rank_bound = std::nullopt);

    void add(const Partition& p, const BigInt& multiplicity);

    BigInt coefficient(const Partition& p) const;
    const Terms& terms() const { return terms_; }
    std::optional<int> rank_bound() const { return rank_bound_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Σ mult · dim L_p(rank n).
    BigInt dimension(int n) const;

    VirtualSchurSum& operator+=(const VirtualSchurSum& other);
    VirtualSchurSum operator-() const;

    /// Equal terms; the rank bound is not compared.
    friend bool operator==(const VirtualSchurSum& a, const VirtualSchurSum& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
    std::optional<int> rank_bound_;
};

/// Littlewood-Richardson coefficient c^g_{a,b} by brute-force enumeration of
/// all fillings of g/a with content b. Slow; used as a reference.
BigInt lr_coefficient_oracle(const Partition& a, const Partition& b, const Partition& g);

/// L_a ⊗ L_b = Σ c^g_{ab} L_g. Terms longer than rank_bound are discarded.
VirtualSchurSum lr_expand(const Partition& a, const Partition& b, std::optional<int> rank_bound = std::nullopt);

/// Bilinear extension of lr_expand; the result carries `rank_bound`.
VirtualSchurSum multiply(const VirtualSchurSum& x, const VirtualSchurSum& y, std::optional<int> rank_bound);
VirtualSchurSum multiply(const VirtualSchurSum& x, const Partition& b, std::optional<int> rank_bound);

/// L_a ⊗ Λ^u: add u boxes to a, no two in the same row.
VirtualSchurSum pieri_column(const Partition& a, int u, std::optional<int> rank_bound = std::nullopt);

/// Character of Λ^{u_1}E ⊗ ... ⊗ Λ^{u_k}E for E of rank n.
/// Throws std::invalid_argument if some u_j lies outside [0, n].
VirtualSchurSum exterior_product_character(std::span<const int> useq, int n);

/// dim L_a(K^n) by the hook-content formula. Zero when a has more than n rows.
BigInt schur_dim(const Partition& a, int n);

}  // namespace grasstilt
