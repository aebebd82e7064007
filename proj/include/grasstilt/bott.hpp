#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "grasstilt/bigint.hpp"
#include "grasstilt/partition.hpp"

namespace grasstilt {

/// Grassmannian Grass(l, m) of l-dimensional subspaces; Q has rank l, R rank m-l.
class GrassContext {
public:
    /// Throws std::invalid_argument unless 1 <= l < m.
    GrassContext(int l, int m);

    int l() const { return l_; }
    int m() const { return m_; }
    int corank() const { return m_ - l_; }
    int dim() const { return l_ * (m_ - l_); }

    friend bool operator==(const GrassContext&, const GrassContext&) = default;

private:
    int l_;
    int m_;
};

/// Weight of GL(m), entries ordered as (Q-block | R-block). For a homogeneous
/// bundle each block is weakly decreasing; entries may be negative.
struct GLWeight {
    std::vector<long> entries;

    std::span<const long> q_block(const GrassContext& ctx) const;
    std::span<const long> r_block(const GrassContext& ctx) const;
    bool is_dominant() const;

    friend auto operator<=>(const GLWeight&, const GLWeight&) = default;
};

std::ostream& operator<<(std::ostream& os, const GLWeight& w);

/// L_gamma Q ⊗ L_r R ⊗ (det Q)^{-det_twist}.
struct TwistedSchurBundle {
    Partition gamma;
    long det_twist = 0;
    Partition r_part;

    friend bool operator==(const TwistedSchurBundle&, const TwistedSchurBundle&) = default;
};

/// Orders bundles by (gamma lex-descending, det_twist, r_part lex-descending).
struct BundleOrder {
    bool operator()(const TwistedSchurBundle& a, const TwistedSchurBundle& b) const;
};

using BundleSum = std::map<TwistedSchurBundle, BigInt, BundleOrder>;

void add_term(BundleSum& sum, const TwistedSchurBundle& b, const BigInt& mult);

/// One cohomological degree: a virtual GL(m)-representation, given by
/// dominant highest weights with multiplicities, and its exact dimension.
struct CohomologyDegree {
    BigInt dimension = 0;
    std::map<GLWeight, BigInt> weights;

    friend bool operator==(const CohomologyDegree&, const CohomologyDegree&) = default;
};

/// Degree -> cohomology. Degrees whose virtual representation and dimension
/// both vanish are not stored.
class CohomologyTable {
public:
    using Rows = std::map<int, CohomologyDegree>;

    void add(int degree, const GLWeight& weight, const BigInt& multiplicity, const BigInt& dim_each);
    /// Dimension-only entry, for closed-form tables that carry no weights.
    void add_dimension(int degree, const BigInt& dimension);
    CohomologyTable& operator+=(const CohomologyTable& other);

    const Rows& rows() const { return rows_; }
    bool is_zero() const { return rows_.empty(); }
    BigInt dimension(int degree) const;
    /// Degree -> dimension for every degree with nonzero dimension.
    std::map<int, BigInt> dimension_profile() const;
    /// True when every degree in [from, to] is absent.
    bool vanishes_in(int from, int to) const;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

    /// Assemble from already-validated rows (deserialization).
    static CohomologyTable from_rows(Rows rows);

private:
    void prune(int degree);

    Rows rows_;
};

/// Weight of a twisted Schur bundle: Q-block gamma - k, R-block r_part, both
/// zero-padded. Throws std::invalid_argument on length violations.
GLWeight bundle_weight(const GrassContext& ctx, const TwistedSchurBundle& b);

/// Characteristic-zero cohomology of the homogeneous bundle with weight w by
/// the rho-shift algorithm, rho = (m-1, ..., 1, 0). A repeated entry in w + rho
/// gives zero; otherwise the single nonzero degree is the number of inversions
/// of w + rho and the representation has highest weight sort(w + rho) - rho.
/// Throws std::invalid_argument if a block is not weakly decreasing.
CohomologyTable bott(const GrassContext& ctx, const GLWeight& w);

/// Closed-form cohomology of O(d) on P^{n-1}, dimensions only.
CohomologyTable projective_line_bundle_oracle(int n, long d);

/// Σ mult · bott(bundle_weight(term)).
CohomologyTable bundle_cohomology(const GrassContext& ctx, const BundleSum& terms);

/// dim of the irreducible GL(m)-representation with dominant highest weight w.
BigInt gl_dim(const GLWeight& w);

}  // namespace grasstilt
