// Command-line surface: generate, color, decompose, certify, verify.
// Exit codes: 0 success, 2 certificate emitted, 3 precondition breach,
// 4 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgc/constants.hpp"
#include "dgc/decomposition.hpp"
#include "dgc/error.hpp"
#include "dgc/exact.hpp"
#include "dgc/gen.hpp"
#include "dgc/graph.hpp"
#include "dgc/lowerbound.hpp"
#include "dgc/reducers.hpp"
#include "dgc/sparse_dense.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertificate = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;

struct Common {
    std::uint64_t seed = 0;
    std::string profile = "desk";
    int max_rounds = 1'000'000;
    std::string verify_level = "fast";
    std::string trace_path;
    std::uint64_t budget = 50'000'000;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--seed", c.seed, "random seed")->envname("DGC_SEED");
    cmd->add_option("--profile", c.profile, "constants profile: paper, desk, or a JSON file")
        ->envname("DGC_PROFILE");
    cmd->add_option("--max-rounds", c.max_rounds, "simulator round limit")
        ->envname("DGC_MAX_ROUNDS");
    cmd->add_option("--verify", c.verify_level, "verification level")
        ->check(CLI::IsMember({ "none", "fast", "oracle" }))
        ->envname("DGC_VERIFY");
    cmd->add_option("--trace", c.trace_path, "JSON-lines round trace output path")
        ->envname("DGC_TRACE");
    cmd->add_option("--budget", c.budget, "exact-solver / clique-search work budget")
        ->envname("DGC_BUDGET");
}

std::ofstream g_trace;

void open_trace(const Common& c)
{
    if (c.trace_path.empty())
        return;
    g_trace.open(c.trace_path);
    if (!g_trace)
        throw dgc::PreconditionError("cannot open trace file '" + c.trace_path + "'");
    dgc::sim::set_default_trace(&g_trace);
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path);
    if (!out)
        throw dgc::PreconditionError("cannot open output file '" + path + "'");
    out << content;
}

std::string coloring_lines(const dgc::PartialColoring& col, int n)
{
    std::ostringstream ss;
    for (int v = 1; v <= n; ++v)
        ss << v << ' ' << col.at(v) << '\n';
    return ss.str();
}

dgc::PartialColoring load_coloring(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in)
        throw dgc::PreconditionError("cannot open coloring file '" + path + "'");
    dgc::PartialColoring col = dgc::PartialColoring::empty(n, 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        int v = 0, c = 0;
        if (!(ls >> v >> c) || v < 1 || v > n || c < 0)
            throw dgc::ParseError("bad coloring line", lineno);
        col.set(v, c);
        col.palette = std::max(col.palette, c);
    }
    return col;
}

nlohmann::ordered_json stats_json(const dgc::sim::RoundStats& stats)
{
    nlohmann::ordered_json j;
    j["rounds"] = stats.rounds;
    j["messages"] = stats.messages;
    j["phases"] = nlohmann::ordered_json::object();
    for (const auto& [name, r] : stats.phase_rounds)
        j["phases"][name] = r;
    return j;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

int run_gen(const Common& common, const std::string& kind, int n, int delta, int c, int i,
    int count, bool minus_matching, const std::string& out, const std::string& layers_out)
{
    dgc::Graph g;
    std::string layers_json;
    if (kind == "chain") {
        dgc::LayeredGraph chain = dgc::build_chain(delta, c, i);
        g = chain.graph;
        layers_json = chain.layers_json();
    } else if (kind == "hard") {
        g = dgc::build_hard_instance(delta, c, i);
    } else if (kind == "random") {
        g = dgc::gen_random_capped(n, delta, common.seed);
    } else if (kind == "bipartite") {
        g = dgc::gen_random_bipartite(n, delta, common.seed);
    } else if (kind == "clique-union") {
        g = dgc::gen_clique_union(delta, count, minus_matching);
    } else {
        throw dgc::PreconditionError("unknown generator kind '" + kind + "'");
    }
    dgc::save_graph_file(g, out);
    if (!layers_out.empty()) {
        if (layers_json.empty())
            throw dgc::PreconditionError("--layers-out only applies to the chain generator");
        write_file(layers_out, layers_json);
    }
    std::cout << "{\"command\":\"gen\",\"kind\":\"" << kind << "\",\"n\":" << g.n()
              << ",\"m\":" << g.m() << ",\"delta\":" << g.delta() << "}\n";
    return kExitOk;
}

int run_color(const Common& common, const std::string& in, int k, const std::string& out,
    const std::string& cert_out, const std::string& report_out)
{
    Timer timer;
    dgc::Graph g = dgc::load_graph_file(in);
    dgc::ConstantsProfile profile = dgc::ConstantsProfile::load(common.profile);
    dgc::Theorem1Result res = dgc::theorem1_run(g, k, profile, common.seed);

    nlohmann::ordered_json report;
    report["command"] = "color";
    report["input"] = in;
    report["seed"] = common.seed;
    report["profile"] = profile.name;
    report["k"] = k;
    report["stats"] = stats_json(res.stats);
    report["breaches"] = res.breaches.items;

    if (res.certificate) {
        nlohmann::ordered_json cert;
        cert["vertex"] = res.certificate->first;
        cert["clique"] = res.certificate->second.ids();
        report["certificate"] = cert;
        report["wall_time_s"] = timer.seconds();
        std::string text = report.dump(2) + "\n";
        if (!cert_out.empty())
            write_file(cert_out, cert.dump(2) + "\n");
        if (!report_out.empty())
            write_file(report_out, text);
        std::cout << text;
        return kExitCertificate;
    }

    report["palette"] = res.palette;
    report["colors_used"] = res.coloring->max_color();
    if (common.verify_level != "none") {
        bool proper = dgc::is_proper(g, *res.coloring);
        bool within = res.coloring->max_color() <= res.palette;
        report["verification"] = { { "proper", proper }, { "palette_respected", within } };
        if (common.verify_level == "oracle") {
            auto clique = dgc::maximum_clique(g, common.budget);
            report["verification"]["max_clique_below_palette"]
                = static_cast<int>(clique.size()) <= res.palette;
        }
        if (!proper || !within)
            throw dgc::ModelViolation("produced coloring failed verification");
    }
    report["wall_time_s"] = timer.seconds();
    if (!out.empty())
        write_file(out, coloring_lines(*res.coloring, g.n()));
    std::string text = report.dump(2) + "\n";
    if (!report_out.empty())
        write_file(report_out, text);
    std::cout << text;
    return kExitOk;
}

int run_decompose([[maybe_unused]] const Common& common, const std::string& in, int d, const std::string& out)
{
    Timer timer;
    dgc::Graph g = dgc::load_graph_file(in);
    dgc::sim::RoundStats stats;
    if (d < 0)
        d = g.delta() / 100; // default density
    dgc::DenseDecomposition dec = dgc::build_decomposition(g, d, &stats);
    dgc::DecompositionReport rep = dgc::verify_decomposition(g, dec);

    nlohmann::ordered_json report;
    report["command"] = "decompose";
    report["input"] = in;
    report["d"] = d;
    report["sparse_size"] = dec.sparse.size();
    report["components"] = static_cast<int>(dec.components.size());
    report["stats"] = stats_json(stats);
    report["properties"] = nlohmann::json::parse(rep.to_json());
    report["all_pass"] = rep.all_pass();
    report["wall_time_s"] = timer.seconds();
    if (!out.empty())
        write_file(out, dec.to_json() + "\n");
    std::cout << report.dump(2) << "\n";
    return rep.all_pass() ? kExitOk : kExitPrecondition;
}

int run_certify(const Common& common, const std::string& in, int c, const std::string& cert_out)
{
    Timer timer;
    dgc::Graph g = dgc::load_graph_file(in);
    dgc::CertifyReport rep = dgc::certify_non_colorable(g, c, common.budget);
    nlohmann::ordered_json report;
    report["command"] = "certify";
    report["input"] = in;
    report["c"] = c;
    report["scanned"] = rep.scanned;
    report["hypothesis_c_large_enough"] = rep.hypothesis_c_large_enough;
    report["certificate_found"] = rep.certificate.has_value();
    report["wall_time_s"] = timer.seconds();
    if (rep.certificate) {
        report["certificate"] = nlohmann::json::parse(rep.certificate->to_json());
        if (!cert_out.empty())
            write_file(cert_out, rep.certificate->to_json() + "\n");
        std::cout << report.dump(2) << "\n";
        return kExitCertificate;
    }
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int run_verify(const Common& common, const std::string& in, const std::string& coloring_path,
    int c, const std::string& decomposition_path)
{
    dgc::Graph g = dgc::load_graph_file(in);
    nlohmann::ordered_json report;
    report["command"] = "verify";
    report["input"] = in;
    bool ok = true;
    if (!coloring_path.empty()) {
        dgc::PartialColoring col = load_coloring(coloring_path, g.n());
        auto conflict = dgc::find_conflict_edge(g, col);
        report["coloring"]["proper"] = !conflict.has_value();
        if (conflict) {
            ok = false;
            report["coloring"]["failing_edge"] = { conflict->first, conflict->second };
        }
        bool total = col.total(g.n());
        report["coloring"]["total"] = total;
        if (c > 0) {
            bool within = col.max_color() <= c;
            report["coloring"]["palette_respected"] = within;
            ok = ok && within && total;
        }
        if (common.verify_level == "oracle" && c > 0) {
            report["coloring"]["chromatic_number"] = dgc::chromatic_number(g, common.budget);
        }
    }
    if (!decomposition_path.empty()) {
        std::ifstream din(decomposition_path);
        if (!din)
            throw dgc::PreconditionError(
                "cannot open decomposition file '" + decomposition_path + "'");
        std::ostringstream ss;
        ss << din.rdbuf();
        dgc::DenseDecomposition dec = dgc::DenseDecomposition::from_json(ss.str());
        dgc::DecompositionReport rep = dgc::verify_decomposition(g, dec);
        report["decomposition"] = nlohmann::json::parse(rep.to_json());
        ok = ok && rep.all_pass();
    }
    report["pass"] = ok;
    std::cout << report.dump(2) << "\n";
    return ok ? kExitOk : kExitPrecondition;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "LOCAL-model graph coloring toolkit" };
    app.require_subcommand(1);

    Common common;

    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string gen_kind = "random", gen_out, gen_layers_out;
    int gen_n = 100, gen_delta = 10, gen_c = 0, gen_i = 1, gen_count = 1;
    bool gen_minus = false;
    add_common(gen, common);
    gen->add_option("--kind", gen_kind, "chain|hard|random|bipartite|clique-union");
    gen->add_option("--n", gen_n, "vertex count (random kinds)");
    gen->add_option("--delta", gen_delta, "maximum degree");
    gen->add_option("--c", gen_c, "palette parameter (chain/hard)");
    gen->add_option("--i", gen_i, "chain length (chain/hard)");
    gen->add_option("--count", gen_count, "component count (clique-union)");
    gen->add_flag("--minus-matching", gen_minus, "remove a near-perfect matching per clique");
    gen->add_option("--out", gen_out, "output graph file")->required();
    gen->add_option("--layers-out", gen_layers_out, "layer annotation sidecar (chain)");

    auto* color = app.add_subcommand("color", "run the coloring pipeline");
    std::string color_in, color_out, color_cert, color_report;
    int color_k = 1;
    add_common(color, common);
    color->add_option("--in", color_in, "input graph")->required();
    color->add_option("--k", color_k, "clique/palette tradeoff parameter")->required();
    color->add_option("--out", color_out, "coloring output file");
    color->add_option("--cert-out", color_cert, "clique certificate output file");
    color->add_option("--report", color_report, "report output file");

    auto* decompose = app.add_subcommand("decompose", "dense decomposition");
    std::string dec_in, dec_out;
    int dec_d = -1;
    add_common(decompose, common);
    decompose->add_option("--in", dec_in, "input graph")->required();
    decompose->add_option("--d", dec_d, "density parameter (default Delta/100)");
    decompose->add_option("--out", dec_out, "decomposition JSON output");

    auto* certify = app.add_subcommand("certify", "closed-neighborhood colorability certificates");
    std::string cert_in, cert_file;
    int cert_c = 1;
    add_common(certify, common);
    certify->add_option("--in", cert_in, "input graph")->required();
    certify->add_option("--c", cert_c, "palette size")->required();
    certify->add_option("--cert-out", cert_file, "certificate output file");

    auto* verify = app.add_subcommand("verify", "verify colorings and decompositions");
    std::string ver_in, ver_coloring, ver_dec;
    int ver_c = 0;
    add_common(verify, common);
    verify->add_option("--in", ver_in, "input graph")->required();
    verify->add_option("--coloring", ver_coloring, "coloring file to verify");
    verify->add_option("--c", ver_c, "expected palette size");
    verify->add_option("--decomposition", ver_dec, "decomposition JSON to verify");

    CLI11_PARSE(app, argc, argv);

    try {
        open_trace(common);
        if (gen->parsed())
            return run_gen(common, gen_kind, gen_n, gen_delta, gen_c, gen_i, gen_count, gen_minus,
                gen_out, gen_layers_out);
        if (color->parsed())
            return run_color(common, color_in, color_k, color_out, color_cert, color_report);
        if (decompose->parsed())
            return run_decompose(common, dec_in, dec_d, dec_out);
        if (certify->parsed())
            return run_certify(common, cert_in, cert_c, cert_file);
        if (verify->parsed())
            return run_verify(common, ver_in, ver_coloring, ver_c, ver_dec);
    } catch (const dgc::BudgetExceeded& e) {
        std::cerr << "error (budget): " << e.what() << "\n";
        return kExitBudget;
    } catch (const dgc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
