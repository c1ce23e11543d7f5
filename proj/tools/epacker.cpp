// Command-line front end: solve / verify / pathwidth / oracle / generate.
// Certificates go to standard output, diagnostics to standard error.
// Exit codes: 0 ok, 1 invalid certificate, 2 parse or usage error,
// 3 capacity exceeded, 4 internal invariant violation.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "epacker/certificate.hpp"
#include "epacker/generate.hpp"
#include "epacker/graph_io.hpp"
#include "epacker/oracles.hpp"
#include "epacker/pathwidth_ep.hpp"
#include "epacker/solver.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw epk::parse_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

epk::Graph load_graph(const std::string& path, const std::string& format_flag) {
    epk::GraphFormat format;
    if (format_flag == "edge-list") {
        format = epk::GraphFormat::edge_list;
    } else if (format_flag == "graph6") {
        format = epk::GraphFormat::graph6;
    } else if (format_flag.empty()) {
        auto detected = epk::format_from_extension(path);
        if (!detected)
            throw epk::parse_error("cannot detect format of \"" + path +
                                   "\" (use .edges/.g6 or --format)");
        format = *detected;
    } else {
        throw epk::parse_error("unknown format \"" + format_flag +
                               "\" (expected edge-list or graph6)");
    }
    return epk::parse_graph(read_file(path), format);
}

long long node_budget_default() {
    if (const char* env = std::getenv("EPACKER_NODE_BUDGET")) {
        try {
            long long value = std::stoll(env);
            if (value > 0) return value;
        } catch (...) {
        }
        throw epk::parse_error("EPACKER_NODE_BUDGET must be a positive integer");
    }
    return epk::SearchBudget{}.limit;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

struct CommonOptions {
    std::string format;
    bool debug_assert = false;
    long long node_budget = 0; // 0: default/env
};

epk::SolveOptions solve_options(const CommonOptions& common) {
    epk::SolveOptions options;
    options.debug_assertions = common.debug_assert;
    options.node_budget = common.node_budget > 0 ? common.node_budget : node_budget_default();
    return options;
}

int run_solve(const std::string& graph_file, const std::string& pattern_file, int k, bool check,
              const CommonOptions& common) {
    if (k < 1) throw epk::domain_error("--k must be at least 1");
    epk::Graph g = load_graph(graph_file, common.format);
    epk::Graph pattern = load_graph(pattern_file, common.format);
    epk::SolveOptions options = solve_options(common);

    auto start = std::chrono::steady_clock::now();
    std::string kind;
    std::optional<epk::Instance> instance;
    if (epk::is_connected(pattern)) {
        kind = "tree";
        instance.emplace(g, std::vector<epk::Tree>{epk::Tree(pattern)}, std::vector<int>{k});
    } else {
        kind = "forest";
        epk::Forest forest(pattern);
        instance.emplace(g, forest.components(),
                         std::vector<int>(forest.component_count(), k));
    }
    epk::Outcome outcome = epk::solve(*instance, options);
    json certificate = epk::build_solve_certificate(kind, *instance, outcome, elapsed_ms(start));

    if (check) {
        auto verdict = epk::verify_certificate(g, certificate, options);
        if (!verdict.ok) {
            for (const auto& v : verdict.violations) std::cerr << "self-check: " << v << "\n";
            throw epk::invariant_violation("fresh certificate failed verification");
        }
    }
    std::cout << certificate.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& graph_file, const std::string& cert_file,
               const CommonOptions& common) {
    epk::Graph g = load_graph(graph_file, common.format);
    json certificate;
    try {
        certificate = json::parse(read_file(cert_file));
    } catch (const json::exception& e) {
        throw epk::parse_error(std::string("certificate is not valid JSON: ") + e.what());
    }
    auto verdict = epk::verify_certificate(g, certificate, solve_options(common));
    if (verdict.ok) {
        std::cerr << "certificate OK\n";
        return 0;
    }
    for (const auto& v : verdict.violations) std::cerr << "violation: " << v << "\n";
    return 1;
}

int run_pathwidth(const std::string& graph_file, int p, int k, const CommonOptions& common) {
    epk::Graph g = load_graph(graph_file, common.format);
    if (p < 0 && k < 0) {
        auto result = epk::pathwidth_exact(g);
        std::cout << result.width << "\n";
        return 0;
    }
    if (p < 1 || k < 1)
        throw epk::domain_error("--p and --k must be supplied together and be at least 1");
    epk::SolveOptions options = solve_options(common);
    auto start = std::chrono::steady_clock::now();
    epk::PwOutcome outcome = epk::pathwidth_pack_or_cover(g, p, k, options);
    json certificate = epk::build_pathwidth_certificate(g, p, k, outcome, elapsed_ms(start));
    std::cout << certificate.dump(2) << "\n";
    return 0;
}

int run_oracle(const std::string& what, const std::string& graph_file,
               const std::string& tree_file, int limit, const CommonOptions& common) {
    epk::Graph g = load_graph(graph_file, common.format);
    epk::OracleLimits limits;
    if (limit > 0) limits.max_vertices = limit;
    auto start = std::chrono::steady_clock::now();
    json certificate;
    if (what == "pathwidth") {
        int width = epk::pathwidth_reference(g, limits);
        certificate = epk::build_oracle_pathwidth_certificate(g, width, elapsed_ms(start));
    } else if (what == "packing" || what == "hitting") {
        if (tree_file.empty())
            throw epk::domain_error("oracle " + what + " needs a tree file");
        epk::Tree tree(load_graph(tree_file, common.format));
        if (what == "packing") {
            auto result = epk::max_packing_bruteforce(g, tree, limits);
            certificate = epk::build_oracle_packing_certificate(g, tree, result, elapsed_ms(start));
        } else {
            auto result = epk::min_hitting_bruteforce(g, tree, limits);
            certificate = epk::build_oracle_hitting_certificate(g, tree, result, elapsed_ms(start));
        }
    } else {
        throw epk::domain_error("unknown oracle query \"" + what +
                                "\" (expected packing, hitting or pathwidth)");
    }
    std::cout << certificate.dump(2) << "\n";
    return 0;
}

int run_generate(const std::string& family, const std::vector<std::string>& params, int opt_t,
                 int opt_k, std::optional<std::uint64_t> seed, const std::string& out_format,
                 const CommonOptions& common) {
    auto need_params = [&](size_t count) {
        if (params.size() != count)
            throw epk::domain_error("family \"" + family + "\" takes " + std::to_string(count) +
                                    " parameter(s)");
    };
    auto as_int = [](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (...) {
            throw epk::domain_error("bad integer parameter \"" + s + "\"");
        }
    };
    epk::Graph g;
    if (family == "complete") {
        need_params(1);
        g = epk::make_complete(as_int(params[0]));
    } else if (family == "path") {
        need_params(1);
        g = epk::make_path(as_int(params[0]));
    } else if (family == "star") {
        need_params(1);
        g = epk::make_star(as_int(params[0]));
    } else if (family == "cycle") {
        need_params(1);
        g = epk::make_cycle(as_int(params[0]));
    } else if (family == "ternary") {
        need_params(1);
        g = epk::make_complete_ternary_tree(as_int(params[0]));
    } else if (family == "random") {
        need_params(2);
        if (!seed) throw epk::domain_error("family \"random\" needs --seed");
        double prob = 0;
        try {
            prob = std::stod(params[1]);
        } catch (...) {
            throw epk::domain_error("bad probability \"" + params[1] + "\"");
        }
        g = epk::make_erdos_renyi(as_int(params[0]), prob, *seed);
    } else if (family == "tight") {
        need_params(0);
        if (opt_t < 1 || opt_k < 1) throw epk::domain_error("family \"tight\" needs --t and --k");
        g = epk::make_complete(opt_t * opt_k - 1);
    } else if (family == "union") {
        need_params(2);
        g = epk::disjoint_union(load_graph(params[0], common.format),
                                load_graph(params[1], common.format));
    } else {
        throw epk::domain_error("unknown family \"" + family + "\"");
    }
    epk::GraphFormat format =
        out_format == "graph6" ? epk::GraphFormat::graph6 : epk::GraphFormat::edge_list;
    std::string text = epk::serialize_graph(g, format);
    std::cout << text;
    if (format == epk::GraphFormat::graph6) std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifying pack-or-cover solver for tree and forest minors"};
    app.require_subcommand(1);

    CommonOptions common;

    std::string graph_file, pattern_file, cert_file, tree_file, what, family, out_format;
    std::vector<std::string> gen_params;
    int k = -1, p = -1, oracle_limit = 0, opt_t = -1, opt_k = -1;
    bool check = false;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* cmd, bool with_budget = true) {
        cmd->add_option("--format", common.format, "input format: edge-list or graph6");
        if (with_budget) {
            cmd->add_flag("--debug-assert", common.debug_assert,
                          "re-check the proof invariants at every recursion level");
            cmd->add_option("--node-budget", common.node_budget,
                            "search node budget (default 1e7, env EPACKER_NODE_BUDGET)");
        }
    };

    auto* solve_cmd = app.add_subcommand("solve", "pack k disjoint minors or emit a cover");
    solve_cmd->add_option("graph", graph_file)->required();
    solve_cmd->add_option("pattern", pattern_file)->required();
    solve_cmd->add_option("--k", k, "number of disjoint models wanted")->required();
    solve_cmd->add_flag("--check", check, "verify the certificate before printing");
    add_common(solve_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "verify a certificate against a graph");
    verify_cmd->add_option("graph", graph_file)->required();
    verify_cmd->add_option("certificate", cert_file)->required();
    add_common(verify_cmd);

    auto* pw_cmd = app.add_subcommand("pathwidth", "exact pathwidth, or pack-or-cover with --p/--k");
    pw_cmd->add_option("graph", graph_file)->required();
    pw_cmd->add_option("--p", p, "pathwidth threshold");
    pw_cmd->add_option("--k", k, "number of disjoint subgraphs wanted");
    add_common(pw_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive baselines (packing/hitting/pathwidth)");
    oracle_cmd->add_option("what", what)->required();
    oracle_cmd->add_option("graph", graph_file)->required();
    oracle_cmd->add_option("tree", tree_file);
    oracle_cmd->add_option("--limit", oracle_limit, "oracle size limit (default 10)");
    add_common(oracle_cmd, false);

    auto* gen_cmd = app.add_subcommand("generate", "emit a graph from a named family");
    gen_cmd->add_option("family", family)->required();
    gen_cmd->add_option("params", gen_params, "family parameters");
    gen_cmd->add_option("--t", opt_t, "tree size for the tight family");
    gen_cmd->add_option("--k", opt_k, "multiplicity for the tight family");
    gen_cmd->add_option("--seed", seed, "random seed (required for the random family)");
    gen_cmd->add_option("--out-format", out_format, "output format: edge-list or graph6");
    gen_cmd->add_option("--format", common.format, "format of input graphs for union");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*solve_cmd) return run_solve(graph_file, pattern_file, k, check, common);
        if (*verify_cmd) return run_verify(graph_file, cert_file, common);
        if (*pw_cmd) return run_pathwidth(graph_file, p, k, common);
        if (*oracle_cmd) return run_oracle(what, graph_file, tree_file, oracle_limit, common);
        if (*gen_cmd)
            return run_generate(family, gen_params, opt_t, opt_k, seed, out_format, common);
    } catch (const epk::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const epk::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const epk::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const epk::invariant_violation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
