// gpinv command-line tool: generate graphs, compute adjacency
// pseudoinverses along the regularization path, verify candidates and
// probe nonsingularity. Matrix/edge-list payload goes to stdout (or -o),
// diagnostics go to stderr so pipelines stay clean.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpinv/gpinv.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitNonConvergence = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;
constexpr int kExitCantCreate = 73;

constexpr int kVerifyTrials = 20;
constexpr std::uint64_t kVerifySeed = 42;

struct FileError : std::runtime_error {
    FileError(const std::string& path, bool output)
        : std::runtime_error((output ? "cannot create '" : "cannot read '") + path + "'"),
          is_output(output) {}
    bool is_output;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError(path, false);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

gpinv::Graph load_graph(const std::string& path) {
    return gpinv::parse_edge_list(read_file(path));
}

/// Writes to the named file, or stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError(path, true);
    out << payload;
    if (!out) throw FileError(path, true);
}

std::string render_matrix(const gpinv::Matrix& m, const std::string& format_name) {
    std::ostringstream ss;
    gpinv::write_matrix(ss, m, gpinv::parse_format_name(format_name));
    return ss.str();
}

void print_diagnostics(const gpinv::PinvResult& r) {
    std::fprintf(stderr, "final lambda:  %.6e\n", r.final_lambda);
    std::fprintf(stderr, "iterations:    %d\n", r.iterations);
    std::fprintf(stderr, "mp residual AXA=A:       %.6e\n", r.mp_residuals.residual_axiom1);
    std::fprintf(stderr, "mp residual XAX=X:       %.6e\n", r.mp_residuals.residual_axiom2);
    std::fprintf(stderr, "mp residual (AX)^T=AX:   %.6e\n", r.mp_residuals.residual_axiom3);
    std::fprintf(stderr, "mp residual (XA)^T=XA:   %.6e\n", r.mp_residuals.residual_axiom4);
    std::fprintf(stderr, "rank estimate: %d\n", r.rank_estimate);
}

int run_gen(const std::string& family, const std::vector<std::string>& params,
            std::uint64_t seed, const std::string& out_path) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw CLI::ValidationError("gen", "family '" + family + "' takes " +
                                                  std::to_string(k) + " parameter(s)");
    };
    auto as_int = [](const std::string& s) {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw CLI::ValidationError("gen", "bad integer '" + s + "'");
        return v;
    };

    gpinv::Graph g = [&]() {
        if (family == "star") { need(1); return gpinv::gen_star(as_int(params[0])); }
        if (family == "complete") { need(1); return gpinv::gen_complete(as_int(params[0])); }
        if (family == "path") { need(1); return gpinv::gen_path(as_int(params[0])); }
        if (family == "cycle") { need(1); return gpinv::gen_cycle(as_int(params[0])); }
        if (family == "petersen") { need(0); return gpinv::gen_petersen(); }
        if (family == "erdos-renyi") {
            need(2);
            return gpinv::gen_erdos_renyi(as_int(params[0]), std::stod(params[1]), seed);
        }
        throw CLI::ValidationError(
            "gen", "unknown family '" + family +
                       "' (star, complete, path, cycle, petersen, erdos-renyi)");
    }();

    write_output(out_path, gpinv::write_edge_list(g));
    return 0;
}

int run_pinv(const std::string& graph_path, const gpinv::PathConfig& cfg,
             const std::string& format_name, const std::string& out_path, int threads) {
    const gpinv::Graph g = load_graph(graph_path);
    try {
        const gpinv::PinvResult r = gpinv::pinv(g, cfg, threads);
        write_output(out_path, render_matrix(r.pinv.mat(), format_name));
        print_diagnostics(r);
        return 0;
    } catch (const gpinv::NonConvergence& nc) {
        write_output(out_path, render_matrix(nc.last_iterate().mat(), format_name));
        std::fprintf(stderr,
                     "warning: no convergence: max-entry change %.3e > tol %.3e at "
                     "lambda cap %.3e; wrote the last iterate\n",
                     nc.achieved_diff(), cfg.tol, nc.final_lambda());
        const auto mp = gpinv::mp_check(gpinv::adjacency_matrix(g), nc.last_iterate(),
                                        100.0 * cfg.tol);
        std::fprintf(stderr, "mp residuals of last iterate: %.3e %.3e %.3e %.3e\n",
                     mp.residual_axiom1, mp.residual_axiom2, mp.residual_axiom3,
                     mp.residual_axiom4);
        return kExitNonConvergence;
    }
}

int run_verify(const std::string& graph_path, const std::string& matrix_path, double tol) {
    const gpinv::Graph g = load_graph(graph_path);

    std::istringstream ms(read_file(matrix_path));
    const gpinv::Matrix raw = gpinv::read_matrix(ms);
    if (raw.dim() != static_cast<std::size_t>(g.order())) {
        std::printf("FAIL matrix is %zux%zu but the graph has %d vertices\n", raw.dim(),
                    raw.dim(), g.order());
        return kExitVerifyFail;
    }
    const double asym = raw.max_asymmetry();
    const gpinv::SymMatrix candidate = gpinv::SymMatrix::symmetrized(raw);

    const gpinv::MpReport rep = gpinv::mp_check(gpinv::adjacency_matrix(g), candidate, tol);
    const bool variational = gpinv::variational_check(g, candidate, kVerifyTrials, kVerifySeed);
    const bool passed = rep.passed && variational && asym <= tol;

    std::printf("input asymmetry:         %.6e\n", asym);
    std::printf("mp residual AXA=A:       %.6e\n", rep.residual_axiom1);
    std::printf("mp residual XAX=X:       %.6e\n", rep.residual_axiom2);
    std::printf("mp residual (AX)^T=AX:   %.6e\n", rep.residual_axiom3);
    std::printf("mp residual (XA)^T=XA:   %.6e\n", rep.residual_axiom4);
    std::printf("tolerance:               %.6e\n", rep.tolerance);
    std::printf("variational probes:      %s\n", variational ? "pass" : "fail");
    std::printf("%s\n", passed ? "PASS" : "FAIL");
    return passed ? 0 : kExitVerifyFail;
}

int run_rank_test(const std::string& graph_path, double lambda_cap, double tol) {
    const gpinv::Graph g = load_graph(graph_path);
    const gpinv::RankTestResult r = gpinv::nonsingularity_test(g, lambda_cap, tol);
    std::printf("%s\n", r.verdict == gpinv::Singularity::nonsingular ? "nonsingular"
                                                                     : "singular");
    std::printf("witness %.6e\n", r.witness);
    return 0;
}

int run_trace(const std::string& graph_path, double ratio, double lambda_cap) {
    const gpinv::Graph g = load_graph(graph_path);
    const gpinv::SymMatrix oracle = gpinv::spectral_pinv(gpinv::adjacency_matrix(g));

    std::printf("lambda,max_entry_change,error_vs_oracle\n");
    gpinv::SymMatrix prev(static_cast<std::size_t>(g.order())); // zero matrix
    double lambda = 1.0;
    for (;;) {
        const gpinv::SymMatrix x = gpinv::path_iterate(g, lambda);
        std::printf("%.12e,%.12e,%.12e\n", lambda, gpinv::max_abs_diff(x, prev),
                    gpinv::max_abs_diff(x, oracle));
        prev = x;
        lambda *= ratio;
        if (lambda > lambda_cap) break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moore-Penrose pseudoinverses of undirected-graph adjacency matrices "
                 "via the Tikhonov regularization path of the resolvent (1/lambda)I + A^2"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family as an edge list");
    std::string gen_family;
    std::vector<std::string> gen_params;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("family", gen_family,
                    "star | complete | path | cycle | petersen | erdos-renyi")
        ->required();
    gen->add_option("params", gen_params, "family parameters (n, or n p)");
    gen->add_option("--seed", gen_seed, "PRNG seed for erdos-renyi (default 1)");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // pinv
    auto* pinv_cmd = app.add_subcommand("pinv", "compute the adjacency pseudoinverse");
    std::string pinv_graph, pinv_format = "tsv", pinv_out;
    gpinv::PathConfig cfg;
    bool no_extrapolate = false;
    int threads = 1;
    pinv_cmd->add_option("graph-file", pinv_graph, "edge-list file ('-' for stdin)")->required();
    pinv_cmd->add_option("--tol", cfg.tol, "convergence tolerance (default 1e-9)");
    pinv_cmd->add_option("--lambda-cap", cfg.lambda_cap, "largest lambda (default 1e8)");
    pinv_cmd->add_option("--ratio", cfg.lambda_ratio, "geometric lambda step (default 10)");
    pinv_cmd->add_flag("--no-extrapolate", no_extrapolate,
                       "return the last iterate instead of the Richardson combination");
    pinv_cmd->add_option("--format", pinv_format, "tsv | csv | matrix-market-array");
    pinv_cmd->add_option("-o,--output", pinv_out, "output file (default stdout)");
    pinv_cmd->add_option("--threads", threads, "column-solve threads (default 1)");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "check a candidate pseudoinverse against a graph");
    std::string verify_graph, verify_matrix;
    double verify_tol = 1e-6;
    verify_cmd->add_option("graph-file", verify_graph, "edge-list file")->required();
    verify_cmd->add_option("matrix-file", verify_matrix, "candidate matrix file")->required();
    verify_cmd->add_option("--tol", verify_tol, "residual tolerance (default 1e-6)");

    // rank-test
    auto* rank_cmd = app.add_subcommand("rank-test", "nonsingularity test of the adjacency matrix");
    std::string rank_graph;
    double rank_cap = 1e6, rank_tol = 1e-3;
    rank_cmd->add_option("graph-file", rank_graph, "edge-list file")->required();
    rank_cmd->add_option("--lambda-cap", rank_cap, "evaluation lambda (default 1e6)");
    rank_cmd->add_option("--tol", rank_tol, "projector distance threshold (default 1e-3)");

    // trace
    auto* trace_cmd =
        app.add_subcommand("trace", "CSV of the lambda schedule for convergence plots");
    std::string trace_graph;
    double trace_ratio = 10.0, trace_cap = 1e8;
    trace_cmd->add_option("graph-file", trace_graph, "edge-list file")->required();
    trace_cmd->add_option("--ratio", trace_ratio, "geometric lambda step (default 10)");
    trace_cmd->add_option("--lambda-cap", trace_cap, "largest lambda (default 1e8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen) return run_gen(gen_family, gen_params, gen_seed, gen_out);
        if (*pinv_cmd) {
            cfg.extrapolate = !no_extrapolate;
            gpinv::parse_format_name(pinv_format); // reject bad names before any work
            return run_pinv(pinv_graph, cfg, pinv_format, pinv_out, threads);
        }
        if (*verify_cmd) return run_verify(verify_graph, verify_matrix, verify_tol);
        if (*rank_cmd) return run_rank_test(rank_graph, rank_cap, rank_tol);
        if (*trace_cmd) return run_trace(trace_graph, trace_ratio, trace_cap);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
        return kExitUsage;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_output ? kExitCantCreate : kExitNoInput;
    } catch (const gpinv::ParseError& e) {
        std::cerr << "error: bad edge list: " << e.what() << "\n";
        return kExitNoInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
