#include "grasstilt/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "grasstilt/json_io.hpp"
#include "grasstilt/parallel.hpp"

namespace grasstilt {

namespace {

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}

    std::optional<long long> elapsed_ms() const
    {
        if (!enabled_)
            return std::nullopt;
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

VerificationReport new_report(const GrassContext& ctx, const char* check)
{
    VerificationReport r;
    r.l = ctx.l();
    r.m = ctx.m();
    r.check = check;
    return r;
}

void check_degrees(const GrassContext& ctx, std::span<const int> useq)
{
    for (int u : useq)
        if (u < 0 || u > ctx.l())
            throw std::invalid_argument("exterior degree outside [0, l]");
}

void fill_sequences(const GrassContext& ctx, int low, std::vector<int>& prefix, std::vector<ExteriorSequence>& out)
{
    if (static_cast<int>(prefix.size()) == ctx.corank()) {
        out.push_back({prefix});
        return;
    }
    const int cap = prefix.empty() ? ctx.l() : prefix.back();
    for (int u = low; u <= cap; ++u) {
        prefix.push_back(u);
        fill_sequences(ctx, low, prefix, out);
        prefix.pop_back();
    }
}

// Every vector in [0, l]^{m-l}, odometer order.
std::vector<std::vector<int>> all_degree_vectors(const GrassContext& ctx)
{
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(ctx.corank()), 0);
    while (true) {
        out.push_back(v);
        std::size_t i = v.size();
        while (i > 0 && v[i - 1] == ctx.l())
            v[--i] = 0;
        if (i == 0)
            break;
        ++v[i - 1];
    }
    return out;
}

VirtualSchurSum complement_character(const GrassContext& ctx, std::span<const int> useq)
{
    check_degrees(ctx, useq);
    std::vector<int> complement;
    complement.reserve(useq.size());
    for (int u : useq)
        complement.push_back(ctx.l() - u);
    return exterior_product_character(complement, ctx.l());
}

BundleSum twisted(const VirtualSchurSum& character, long det_twist)
{
    BundleSum out;
    for (const auto& [p, mult] : character.terms())
        add_term(out, TwistedSchurBundle{p, det_twist, {}}, mult);
    return out;
}

}  // namespace

bool is_summand(const GrassContext& ctx, const ExteriorSequence& s, SummandBound bound)
{
    const int low = static_cast<int>(bound);
    if (static_cast<int>(s.degrees.size()) != ctx.corank())
        return false;
    for (std::size_t i = 0; i < s.degrees.size(); ++i) {
        if (s.degrees[i] < low || s.degrees[i] > ctx.l())
            return false;
        if (i > 0 && s.degrees[i] > s.degrees[i - 1])
            return false;
    }
    return true;
}

std::vector<ExteriorSequence> enumerate_summands(const GrassContext& ctx, SummandBound bound)
{
    std::vector<ExteriorSequence> out;
    std::vector<int> prefix;
    fill_sequences(ctx, static_cast<int>(bound), prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt summand_rank(const GrassContext& ctx, const ExteriorSequence& s)
{
    BigInt rank = 1;
    for (int u : s.degrees)
        rank *= binomial(ctx.l(), u);
    return rank;
}

BundleSum dual_summand_decompose(const GrassContext& ctx, std::span<const int> useq)
{
    return twisted(complement_character(ctx, useq), static_cast<long>(useq.size()));
}

BundleSum dual_product_with(const GrassContext& ctx, std::span<const int> useq, const Partition& gamma)
{
    if (static_cast<int>(gamma.length()) > ctx.l())
        throw std::invalid_argument("gamma has more rows than rank Q");
    BundleSum out;
    for (const auto& [bundle, mult] : dual_summand_decompose(ctx, useq)) {
        const auto product = lr_expand(bundle.gamma, gamma, ctx.l());
        for (const auto& [p, c] : product.terms())
            add_term(out, TwistedSchurBundle{p, bundle.det_twist, {}}, mult * c);
    }
    return out;
}

Prop3Result verify_prop3(const GrassContext& ctx, std::span<const int> useq, const Partition& gamma)
{
    Prop3Result r;
    r.table = bundle_cohomology(ctx, dual_product_with(ctx, useq, gamma));
    r.higher_vanishing = r.table.vanishes_in(1, ctx.dim());
    return r;
}

TiltingExtAnalysis analyze_tilting_ext(const GrassContext& ctx, const VerifyOptions& opts)
{
    TiltingExtAnalysis out;
    out.summands = enumerate_summands(ctx, opts.bound);
    const std::size_t n = out.summands.size();
    const int top = std::min(opts.max_degree.value_or(ctx.dim()), ctx.dim());

    std::vector<VirtualSchurSum> characters;
    std::vector<VirtualSchurSum> duals;
    for (const auto& s : out.summands) {
        characters.push_back(exterior_product_character(s.degrees, ctx.l()));
        duals.push_back(complement_character(ctx, s.degrees));
    }

    out.pairs = parallel_map(n * n, opts.parallelism, [&](std::size_t idx) {
        const std::size_t from = idx / n;
        const std::size_t to = idx % n;
        const auto product = multiply(duals[from], characters[to], ctx.l());
        return ExtPair{from, to, bundle_cohomology(ctx, twisted(product, ctx.corank()))};
    });

    out.hom_dims.assign(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < out.pairs.size(); ++i) {
        const auto& p = out.pairs[i];
        out.hom_dims[p.from][p.to] = p.table.dimension(0);
        if (!p.table.vanishes_in(1, top))
            out.failing_pairs.push_back(i);
    }
    return out;
}

VerificationReport verify_tilting_ext(const GrassContext& ctx, const VerifyOptions& opts)
{
    Stopwatch clock(opts.timing);
    auto r = new_report(ctx, "tilting_ext");
    const auto analysis = analyze_tilting_ext(ctx, opts);

    for (std::size_t i : analysis.failing_pairs) {
        const auto& p = analysis.pairs[i];
        r.witnesses.push_back({{"from", analysis.summands[p.from]},
                               {"to", analysis.summands[p.to]},
                               {"table", p.table}});
    }
    json hom = json::array();
    BigInt algebra_dim = 0;
    for (const auto& row : analysis.hom_dims) {
        json jr = json::array();
        for (const auto& v : row) {
            jr.push_back(bigint_to_json(v));
            algebra_dim += v;
        }
        hom.push_back(std::move(jr));
    }
    r.tables = {
        {"summand_bound", static_cast<int>(opts.bound)},
        {"summands", analysis.summands},
        {"summand_count", analysis.summands.size()},
        {"pair_count", analysis.pairs.size()},
        {"degrees_checked", {1, std::min(opts.max_degree.value_or(ctx.dim()), ctx.dim())}},
        {"hom_dims", hom},
        {"endomorphism_algebra_dim", bigint_to_json(algebra_dim)},
    };
    r.settle();
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_prop3_sweep(const GrassContext& ctx, const VerifyOptions& opts)
{
    Stopwatch clock(opts.timing);
    auto r = new_report(ctx, "prop3_vanishing");
    const int cols = opts.gamma_cols.value_or(2 * ctx.corank());
    if (cols < 0)
        throw std::invalid_argument("gamma column bound must be non-negative");
    const auto sequences = all_degree_vectors(ctx);
    const auto gammas = enumerate_box({ctx.l(), cols});

    struct Outcome {
        json witnesses = json::array();
        std::size_t dominant_reduced = 0;
        std::size_t vanishing_reduced = 0;
    };

    const auto outcomes = parallel_map(sequences.size(), opts.parallelism, [&](std::size_t idx) {
        Outcome o;
        const auto& useq = sequences[idx];
        const bool reduced = std::all_of(useq.begin(), useq.end(), [&](int u) { return u == ctx.l(); });
        for (const auto& gamma : gammas) {
            auto res = verify_prop3(ctx, useq, gamma);
            if (!res.higher_vanishing) {
                o.witnesses.push_back({{"useq", useq}, {"gamma", gamma}, {"table", res.table}, {"reason", "higher cohomology"}});
                continue;
            }
            if (!reduced)
                continue;
            const bool dominant = gamma[static_cast<std::size_t>(ctx.l() - 1)] >= ctx.corank();
            if (dominant) {
                ++o.dominant_reduced;
                if (res.table.is_zero())
                    o.witnesses.push_back({{"useq", useq}, {"gamma", gamma}, {"table", res.table},
                                           {"reason", "dominant reduced case has no sections"}});
            } else {
                ++o.vanishing_reduced;
                if (!res.table.is_zero())
                    o.witnesses.push_back({{"useq", useq}, {"gamma", gamma}, {"table", res.table},
                                           {"reason", "non-dominant reduced case has cohomology"}});
            }
        }
        return o;
    });

    std::size_t dominant = 0;
    std::size_t vanishing = 0;
    for (const auto& o : outcomes) {
        for (const auto& w : o.witnesses)
            r.witnesses.push_back(w);
        dominant += o.dominant_reduced;
        vanishing += o.vanishing_reduced;
    }
    r.tables = {
        {"gamma_box", {{"rows", ctx.l()}, {"cols", cols}}},
        {"sequence_count", sequences.size()},
        {"gamma_count", gammas.size()},
        {"checks", sequences.size() * gammas.size()},
        {"reduced_case", {{"dominant_degree0_only", dominant}, {"non_dominant_all_zero", vanishing}}},
    };
    r.settle();
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

std::vector<GenerationStep> analyze_generation(const GrassContext& ctx, SummandBound bound)
{
    auto box = enumerate_box({ctx.l(), ctx.corank()});
    std::reverse(box.begin(), box.end());
    std::vector<GenerationStep> steps;
    steps.reserve(box.size());
    for (auto& alpha : box) {
        GenerationStep step;
        step.sequence.degrees = conjugate(alpha).padded(static_cast<std::size_t>(ctx.corank()));
        step.character = exterior_product_character(step.sequence.degrees, ctx.l());
        step.leading_coefficient_one = step.character.coefficient(alpha) == 1;
        step.rest_lex_smaller = std::all_of(step.character.terms().begin(), step.character.terms().end(),
                                            [&](const auto& term) { return term.first == alpha || lex_compare(term.first, alpha) < 0; });
        step.sequence_is_summand = is_summand(ctx, step.sequence, bound);
        step.alpha = std::move(alpha);
        steps.push_back(std::move(step));
    }
    return steps;
}

VerificationReport verify_generation_order(const GrassContext& ctx, const VerifyOptions& opts)
{
    Stopwatch clock(opts.timing);
    auto r = new_report(ctx, "generation_order");
    const auto steps = analyze_generation(ctx, opts.bound);
    json listing = json::array();
    for (const auto& s : steps) {
        json entry = {{"alpha", s.alpha}, {"sequence", s.sequence}, {"character", s.character}};
        listing.push_back(entry);
        if (!s.ok()) {
            entry["leading_coefficient_one"] = s.leading_coefficient_one;
            entry["rest_lex_smaller"] = s.rest_lex_smaller;
            entry["sequence_is_summand"] = s.sequence_is_summand;
            r.witnesses.push_back(std::move(entry));
        }
    }
    r.tables = {
        {"summand_bound", static_cast<int>(opts.bound)},
        {"box", {{"rows", ctx.l()}, {"cols", ctx.corank()}}},
        {"base_case", {{"alpha", Partition{}},
                       {"sequence", std::vector<int>(static_cast<std::size_t>(ctx.corank()), 0)},
                       {"covering_summand", "structure sheaf (all exterior degrees zero)"}}},
        {"steps", listing},
    };
    r.settle();
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

KapranovAnalysis kapranov_decomposition(const GrassContext& ctx, SummandBound bound)
{
    KapranovAnalysis out;
    out.decomposition = VirtualSchurSum(ctx.l());
    for (const auto& s : enumerate_summands(ctx, bound)) {
        out.decomposition += exterior_product_character(s.degrees, ctx.l());
        out.total_rank += summand_rank(ctx, s);
    }
    out.decomposition_rank = out.decomposition.dimension(ctx.l());

    const PartitionBox box{ctx.l(), ctx.corank()};
    const auto members = enumerate_box(box);
    out.box_size = members.size();
    for (const auto& p : members)
        if (out.decomposition.coefficient(p) == 0)
            out.missing.push_back(p);
    for (const auto& [p, mult] : out.decomposition.terms())
        if (!box.contains(p))
            out.extra.push_back(p);
    return out;
}

VerificationReport verify_kapranov(const GrassContext& ctx, const VerifyOptions& opts)
{
    Stopwatch clock(opts.timing);
    auto r = new_report(ctx, "kapranov_recovery");
    const auto main = kapranov_decomposition(ctx, opts.bound);
    const SummandBound other_bound = opts.bound == SummandBound::nonnegative ? SummandBound::positive : SummandBound::nonnegative;
    const auto other = kapranov_decomposition(ctx, other_bound);

    for (const auto& p : main.missing)
        r.witnesses.push_back({{"partition", p}, {"reason", "box partition missing from support"}});
    for (const auto& p : main.extra)
        r.witnesses.push_back({{"partition", p}, {"reason", "support outside the box"}});
    if (main.total_rank != main.decomposition_rank)
        r.witnesses.push_back({{"reason", "rank mismatch"},
                               {"summand_ranks", bigint_to_json(main.total_rank)},
                               {"decomposition_rank", bigint_to_json(main.decomposition_rank)}});
    const Partition full(std::vector<int>(static_cast<std::size_t>(ctx.l()), ctx.corank()));
    const BigInt full_mult = main.decomposition.coefficient(full);
    if (full_mult != 1)
        r.witnesses.push_back({{"partition", full}, {"reason", "full box multiplicity is not 1"},
                               {"multiplicity", bigint_to_json(full_mult)}});

    auto summary = [&](const KapranovAnalysis& a, SummandBound b) {
        return json{{"summand_bound", static_cast<int>(b)},
                    {"summand_count", enumerate_summands(ctx, b).size()},
                    {"support_size", a.support_size()},
                    {"box_size", a.box_size},
                    {"missing", a.missing},
                    {"extra", a.extra},
                    {"support_is_box", a.support_is_box()}};
    };
    r.tables = {
        {"decomposition", main.decomposition},
        {"total_rank", bigint_to_json(main.total_rank)},
        {"decomposition_rank", bigint_to_json(main.decomposition_rank)},
        {"full_box_multiplicity", bigint_to_json(full_mult)},
        {"support", summary(main, opts.bound)},
        {"comparison", summary(other, other_bound)},
    };
    if (ctx.l() == 1)
        r.tables["caveat"] =
            "l = 1: with exterior degrees >= 1 the bundle is Q^(m-1), whose support is the single partition (m-1); "
            "with degrees >= 0 it is O + O(1) + ... + O(m-1) and the support is the whole box. Both counts are listed.";
    r.settle();
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

Grass24Analysis analyze_grass24()
{
    const GrassContext ctx(2, 4);
    Grass24Analysis a;
    BundleSum dual_det_sym2;
    add_term(dual_det_sym2, TwistedSchurBundle{Partition{2}, 1, {}}, 1);
    a.dual_det_sym2 = bundle_cohomology(ctx, dual_det_sym2);
    const int one[] = {1};
    a.end_q = bundle_cohomology(ctx, dual_product_with(ctx, one, Partition{1}));
    a.rank_ext2 = schur_dim(Partition{1, 1}, 2);
    a.rank_sym2 = schur_dim(Partition{2}, 2);
    const int ones[] = {1, 1};
    a.rank_q_tensor_q = exterior_product_character(ones, 2).dimension(2);
    return a;
}

VerificationReport example_grass24_analysis(const VerifyOptions& opts)
{
    Stopwatch clock(opts.timing);
    auto r = new_report(GrassContext(2, 4), "example_grass_2_4");
    const auto a = analyze_grass24();
    if (!a.dual_det_sym2.is_zero())
        r.witnesses.push_back({{"reason", "dual of L^2 Q tensor S^2 Q has cohomology"}, {"table", a.dual_det_sym2}});
    const std::map<int, BigInt> expected_end{{0, 1}};
    if (a.end_q.dimension_profile() != expected_end || !a.end_q.vanishes_in(1, 4))
        r.witnesses.push_back({{"reason", "End(Q) is not one-dimensional in degree 0"}, {"table", a.end_q}});
    if (a.rank_ext2 + a.rank_sym2 != a.rank_q_tensor_q)
        r.witnesses.push_back({{"reason", "rank(L^2 Q) + rank(S^2 Q) != rank(Q x Q)"}});
    r.tables = {
        {"dual_ext2_tensor_sym2", a.dual_det_sym2},
        {"end_q", a.end_q},
        {"ranks", {{"ext2", bigint_to_json(a.rank_ext2)},
                   {"sym2", bigint_to_json(a.rank_sym2)},
                   {"q_tensor_q", bigint_to_json(a.rank_q_tensor_q)}}},
    };
    r.settle();
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

}  // namespace grasstilt
