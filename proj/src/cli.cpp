#include "grasstilt/cli.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "grasstilt/json_io.hpp"
#include "grasstilt/verifier.hpp"

namespace grasstilt::cli {

namespace {

std::vector<long> parse_integers(const std::string& text)
{
    std::vector<long> out;
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '[' && c != ']')
            trimmed.push_back(c);
    if (trimmed.empty())
        return out;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer list: '" + text + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("malformed integer list: '" + text + "'");
        out.push_back(v);
    }
    if (!trimmed.empty() && trimmed.back() == ',')
        throw std::invalid_argument("malformed integer list: '" + text + "'");
    return out;
}

struct Options {
    std::optional<int> l;
    std::optional<int> m;
    std::string format = "json";
    int jobs = 1;
    int min_degree = 0;
    bool timing = false;
    std::string out_file;

    int rows = 0;
    int cols = 0;
    std::string a;
    std::string b;
    std::string g;
    std::optional<int> rank;
    int n = 0;
    std::string weight;
    std::string useq;
    std::string gamma;
    std::optional<int> gamma_cols;
    std::optional<int> max_degree;
};

GrassContext require_context(const Options& o)
{
    if (!o.l || !o.m)
        throw std::invalid_argument("--l and --m are required");
    return GrassContext(*o.l, *o.m);
}

VerifyOptions verify_options(const Options& o)
{
    VerifyOptions v;
    v.bound = o.min_degree == 1 ? SummandBound::positive : SummandBound::nonnegative;
    v.parallelism = o.jobs;
    v.timing = o.timing;
    v.max_degree = o.max_degree;
    v.gamma_cols = o.gamma_cols;
    return v;
}

struct Output {
    json document;
    bool ok = true;
};

// Plain-text rendering, for reading at a terminal.
void render_table(const json& doc, std::ostream& os, int indent = 0)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            if (value.is_structured() && !(value.is_array() && !value.empty() && value.front().is_primitive())) {
                os << pad << key << ":\n";
                render_table(value, os, indent + 2);
            } else {
                os << pad << key << ": " << value.dump() << '\n';
            }
        }
    } else if (doc.is_array()) {
        for (const auto& value : doc) {
            if (value.is_structured() && !(value.is_array() && (value.empty() || value.front().is_primitive()))) {
                os << pad << "-\n";
                render_table(value, os, indent + 2);
            } else {
                os << pad << "- " << value.dump() << '\n';
            }
        }
    } else {
        os << pad << doc.dump() << '\n';
    }
}

Output report_output(const VerificationReport& r)
{
    return {json(r), r.verdict != Verdict::failed};
}

Output cmd_box(const Options& o)
{
    if (o.rows < 0 || o.cols < 0)
        throw std::invalid_argument("--rows and --cols must be non-negative");
    auto box = enumerate_box({o.rows, o.cols});
    return {{{"rows", o.rows}, {"cols", o.cols}, {"count", box.size()}, {"partitions", box}}};
}

Output cmd_lr(const Options& o)
{
    const Partition a = parse_partition(o.a);
    const Partition b = parse_partition(o.b);
    if (o.rank && *o.rank < 1)
        throw std::invalid_argument("--rank must be positive");
    json doc = {{"a", a}, {"b", b}, {"rank_bound", o.rank ? json(*o.rank) : json(nullptr)},
                {"product", lr_expand(a, b, o.rank)}};
    if (!o.g.empty()) {
        const Partition g = parse_partition(o.g);
        doc["g"] = g;
        doc["oracle_coefficient"] = bigint_to_json(lr_coefficient_oracle(a, b, g));
    }
    return {doc};
}

Output cmd_dim(const Options& o)
{
    if (o.n < 1)
        throw std::invalid_argument("--n must be positive");
    const Partition a = parse_partition(o.a);
    return {{{"partition", a}, {"n", o.n}, {"dimension", bigint_to_json(schur_dim(a, o.n))}}};
}

Output cmd_bott(const Options& o)
{
    const auto ctx = require_context(o);
    GLWeight w;
    if (!o.weight.empty()) {
        w = parse_weight(o.weight, ctx);
    } else {
        TwistedSchurBundle bundle{parse_partition(o.gamma), 0, {}};
        w = bundle_weight(ctx, bundle);
    }
    const auto table = bott(ctx, w);
    return {{{"context", {{"l", ctx.l()}, {"m", ctx.m()}}},
             {"weight", w},
             {"table", table},
             {"characteristic", "0"}}};
}

Output cmd_summands(const Options& o)
{
    const auto ctx = require_context(o);
    const auto bound = verify_options(o).bound;
    json list = json::array();
    BigInt total = 0;
    for (const auto& s : enumerate_summands(ctx, bound)) {
        const BigInt rank = summand_rank(ctx, s);
        total += rank;
        list.push_back({{"sequence", s}, {"rank", bigint_to_json(rank)}});
    }
    return {{{"context", {{"l", ctx.l()}, {"m", ctx.m()}}},
             {"summand_bound", static_cast<int>(bound)},
             {"count", list.size()},
             {"total_rank", bigint_to_json(total)},
             {"summands", list}}};
}

Output cmd_verify_prop3(const Options& o)
{
    const auto ctx = require_context(o);
    if (o.useq.empty() && o.gamma.empty())
        return report_output(verify_prop3_sweep(ctx, verify_options(o)));

    std::vector<int> useq;
    for (long v : parse_integers(o.useq))
        useq.push_back(static_cast<int>(v));
    const Partition gamma = parse_partition(o.gamma);
    const auto res = verify_prop3(ctx, useq, gamma);
    VerificationReport r;
    r.l = ctx.l();
    r.m = ctx.m();
    r.check = "prop3_single";
    r.tables = {{"useq", useq}, {"gamma", gamma}, {"table", res.table}};
    if (!res.higher_vanishing)
        r.witnesses.push_back({{"useq", useq}, {"gamma", gamma}, {"table", res.table}});
    r.settle();
    return report_output(r);
}

Output cmd_report_all(const Options& o)
{
    const auto ctx = require_context(o);
    const auto v = verify_options(o);
    std::vector<VerificationReport> sections{
        verify_tilting_ext(ctx, v),
        verify_prop3_sweep(ctx, v),
        verify_generation_order(ctx, v),
        verify_kapranov(ctx, v),
    };
    if (ctx == GrassContext(2, 4))
        sections.push_back(example_grass24_analysis(v));
    bool ok = true;
    for (const auto& s : sections)
        ok = ok && s.verdict != Verdict::failed;
    json doc = {
        {"version", kVersion},
        {"characteristic", "0"},
        {"disclaimer", "Cohomology is computed over a field of characteristic 0; verdicts say nothing about positive characteristic."},
        {"context", {{"l", ctx.l()}, {"m", ctx.m()}}},
        {"summand_bound", static_cast<int>(v.bound)},
        {"verdict", ok ? "verified" : "failed"},
        {"sections", sections},
    };
    return {doc, ok};
}

void write_atomically(const std::string& path, const std::string& text)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path temp = target;
    temp += ".tmp";
    {
        std::ofstream f(temp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot open '" + temp.string() + "' for writing");
        f << text;
        if (!f.flush())
            throw std::runtime_error("cannot write '" + temp.string() + "'");
    }
    fs::rename(temp, target);
}

}  // namespace

Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    for (long v : parse_integers(text))
        parts.push_back(static_cast<int>(v));
    return Partition(std::move(parts));
}

GLWeight parse_weight(const std::string& text, const GrassContext& ctx)
{
    GLWeight w;
    const auto bar = text.find('|');
    if (bar == std::string::npos) {
        w.entries = parse_integers(text);
    } else {
        w.entries = parse_integers(text.substr(0, bar));
        if (static_cast<int>(w.entries.size()) != ctx.l())
            throw std::invalid_argument("Q-block of the weight must have l entries");
        auto rest = parse_integers(text.substr(bar + 1));
        w.entries.insert(w.entries.end(), rest.begin(), rest.end());
    }
    if (static_cast<int>(w.entries.size()) != ctx.m())
        throw std::invalid_argument("weight must have m entries");
    return w;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Schur calculus, Bott cohomology and tilting checks on Grassmannians", "grasstilt"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--l", o.l, "rank of Q (Grass(l, m))");
    app.add_option("--m", o.m, "ambient dimension");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs,--parallelism", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--min-degree", o.min_degree, "smallest exterior degree in a summand")->check(CLI::IsMember({0, 1}));
    app.add_flag("--timing", o.timing, "fill elapsed_ms in reports");
    app.add_option("--out", o.out_file, "write the document to FILE instead of standard output");

    auto* box = app.add_subcommand("box", "partitions in a rows x cols box");
    box->add_option("--rows", o.rows)->required();
    box->add_option("--cols", o.cols)->required();
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson product L_a x L_b");
    lr->add_option("--a", o.a)->required();
    lr->add_option("--b", o.b)->required();
    lr->add_option("--g", o.g, "also report the brute-force coefficient of g");
    lr->add_option("--rank", o.rank, "drop partitions with more rows");
    auto* dim = app.add_subcommand("dim", "dimension of L_a of a rank-n space");
    dim->add_option("--a,--partition", o.a)->required();
    dim->add_option("--n", o.n)->required();
    auto* bott_cmd = app.add_subcommand("bott", "cohomology of a homogeneous bundle");
    auto* weight_opt = bott_cmd->add_option("--weight", o.weight, "Q-block|R-block, e.g. 1,0|0,0");
    bott_cmd->add_option("--gamma", o.gamma, "L_gamma Q instead of an explicit weight")->excludes(weight_opt);
    app.add_subcommand("summands", "summands of the tilting bundle");
    auto* ext = app.add_subcommand("verify-ext", "Ext-vanishing between all summands");
    ext->add_option("--max-degree", o.max_degree);
    auto* prop3 = app.add_subcommand("verify-prop3", "higher-cohomology vanishing sweep");
    prop3->add_option("--useq", o.useq, "single exterior sequence instead of the sweep");
    prop3->add_option("--gamma", o.gamma);
    prop3->add_option("--gamma-cols", o.gamma_cols, "column bound of the gamma sweep");
    app.add_subcommand("verify-generation", "lexicographic generation check");
    app.add_subcommand("kapranov", "decomposition into L_alpha Q");
    app.add_subcommand("example-2-4", "cohomology inputs on Grass(2,4)");
    app.add_subcommand("report-all", "every check for one Grassmannian");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    Output result;
    try {
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "box")
            result = cmd_box(o);
        else if (name == "lr")
            result = cmd_lr(o);
        else if (name == "dim")
            result = cmd_dim(o);
        else if (name == "bott")
            result = cmd_bott(o);
        else if (name == "summands")
            result = cmd_summands(o);
        else if (name == "verify-ext")
            result = report_output(verify_tilting_ext(require_context(o), verify_options(o)));
        else if (name == "verify-prop3")
            result = cmd_verify_prop3(o);
        else if (name == "verify-generation")
            result = report_output(verify_generation_order(require_context(o), verify_options(o)));
        else if (name == "kapranov")
            result = report_output(verify_kapranov(require_context(o), verify_options(o)));
        else if (name == "example-2-4")
            result = report_output(example_grass24_analysis(verify_options(o)));
        else
            result = cmd_report_all(o);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    std::ostringstream text;
    if (o.format == "table")
        render_table(result.document, text);
    else
        text << result.document.dump(2) << '\n';

    if (o.out_file.empty()) {
        out << text.str();
    } else {
        try {
            write_atomically(o.out_file, text.str());
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return kUsageError;
        }
    }
    if (!result.ok)
        err << "one or more checks failed; see witnesses\n";
    return result.ok ? kOk : kCheckFailed;
}

}  // namespace grasstilt::cli
