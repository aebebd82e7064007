#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "grasstilt/bigint.hpp"
#include "grasstilt/bott.hpp"
#include "grasstilt/partition.hpp"
#include "grasstilt/report.hpp"
#include "grasstilt/schur.hpp"

namespace grasstilt {

/// Smallest exterior degree allowed in a summand Λ^{u_1}Q ⊗ ... ⊗ Λ^{u_{m-l}}Q.
///
/// `nonnegative` (u_j >= 0) gives binomial(m, l) summands, among them O and
/// every Λ^{ᾱ}Q for ᾱ the zero-padded conjugate of a box partition; this is the
/// family the generation and Kapranov checks need. `positive` (u_j >= 1) gives
/// binomial(m-1, l-1) summands and is kept for comparison.
enum class SummandBound { nonnegative = 0, positive = 1 };

/// Exterior degrees l >= u_1 >= ... >= u_{m-l} >= bound.
struct ExteriorSequence {
    std::vector<int> degrees;

    friend auto operator<=>(const ExteriorSequence&, const ExteriorSequence&) = default;
};

bool is_summand(const GrassContext& ctx, const ExteriorSequence& s, SummandBound bound);

/// All summand sequences, lex ascending (so O comes first when allowed).
std::vector<ExteriorSequence> enumerate_summands(const GrassContext& ctx, SummandBound bound = SummandBound::nonnegative);

/// Rank of the summand: Π binomial(l, u_j).
BigInt summand_rank(const GrassContext& ctx, const ExteriorSequence& s);

/// (Λ^{u_1}Q)^∨ ⊗ ... ⊗ (Λ^{u_k}Q)^∨ via (Λ^u Q)^∨ = Λ^{l-u}Q ⊗ (det Q)^{-1}:
/// the character of Λ^{l-u_1}Q ⊗ ... ⊗ Λ^{l-u_k}Q with det twist k.
/// Throws std::invalid_argument unless every u_j lies in [0, l].
BundleSum dual_summand_decompose(const GrassContext& ctx, std::span<const int> useq);

/// (Λ^{u_1}Q)^∨ ⊗ ... ⊗ L_gamma Q as twisted Schur bundles.
BundleSum dual_product_with(const GrassContext& ctx, std::span<const int> useq, const Partition& gamma);

struct Prop3Result {
    bool higher_vanishing = false;  // every degree > 0 vanishes
    CohomologyTable table;
};

/// Cohomology of (Λ^{u_1}Q)^∨ ⊗ ... ⊗ (Λ^{u_k}Q)^∨ ⊗ L_gamma Q.
/// Throws std::invalid_argument if gamma has more than l rows or some u_j is outside [0, l].
Prop3Result verify_prop3(const GrassContext& ctx, std::span<const int> useq, const Partition& gamma);

struct VerifyOptions {
    SummandBound bound = SummandBound::nonnegative;
    int parallelism = 1;
    bool timing = false;
    /// Highest degree checked for Ext-vanishing; defaults to dim Grass(l, m).
    std::optional<int> max_degree;
    /// Column bound of the gamma box swept by the vanishing check; defaults to 2(m-l).
    std::optional<int> gamma_cols;
};

struct ExtPair {
    std::size_t from = 0;
    std::size_t to = 0;
    CohomologyTable table;
};

struct TiltingExtAnalysis {
    std::vector<ExteriorSequence> summands;
    std::vector<ExtPair> pairs;  // row-major over (from, to)
    std::vector<std::vector<BigInt>> hom_dims;
    std::vector<std::size_t> failing_pairs;  // indices into `pairs`
};

/// Cohomology of (T_a)^∨ ⊗ T_b for every ordered pair of summands.
TiltingExtAnalysis analyze_tilting_ext(const GrassContext& ctx, const VerifyOptions& opts = {});
VerificationReport verify_tilting_ext(const GrassContext& ctx, const VerifyOptions& opts = {});

/// Vanishing sweep over every u in [0, l]^{m-l} and every gamma in the box
/// (l, gamma_cols). For u = (l, ..., l) it also checks the reduced case:
/// gamma_l >= m-l gives degree-0 cohomology only, gamma_l < m-l gives zero.
VerificationReport verify_prop3_sweep(const GrassContext& ctx, const VerifyOptions& opts = {});

struct GenerationStep {
    Partition alpha;
    ExteriorSequence sequence;  // conjugate of alpha, zero-padded to m-l
    VirtualSchurSum character;
    bool leading_coefficient_one = false;
    bool rest_lex_smaller = false;
    bool sequence_is_summand = false;

    bool ok() const { return leading_coefficient_one && rest_lex_smaller && sequence_is_summand; }
};

/// One step per box partition, smallest first (the order the induction consumes them).
std::vector<GenerationStep> analyze_generation(const GrassContext& ctx, SummandBound bound = SummandBound::nonnegative);
VerificationReport verify_generation_order(const GrassContext& ctx, const VerifyOptions& opts = {});

struct KapranovAnalysis {
    VirtualSchurSum decomposition;
    std::size_t box_size = 0;
    std::vector<Partition> missing;  // box partitions absent from the support
    std::vector<Partition> extra;    // support outside the box
    BigInt total_rank = 0;           // Σ summand_rank
    BigInt decomposition_rank = 0;   // Σ mult · schur_dim(p, l)

    bool support_is_box() const { return missing.empty() && extra.empty(); }
    std::size_t support_size() const { return decomposition.size(); }
};

/// Characteristic-zero decomposition of the whole tilting bundle into L_p Q.
KapranovAnalysis kapranov_decomposition(const GrassContext& ctx, SummandBound bound = SummandBound::nonnegative);
VerificationReport verify_kapranov(const GrassContext& ctx, const VerifyOptions& opts = {});

struct Grass24Analysis {
    CohomologyTable dual_det_sym2;  // (Λ²Q)^∨ ⊗ S²Q
    CohomologyTable end_q;          // Q^∨ ⊗ Q
    BigInt rank_ext2 = 0;
    BigInt rank_sym2 = 0;
    BigInt rank_q_tensor_q = 0;
};

Grass24Analysis analyze_grass24();
VerificationReport example_grass24_analysis(const VerifyOptions& opts = {});

}  // namespace grasstilt
