#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "gpinv/matrix_io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string cli() { return std::string("\"") + GPINV_CLI_PATH + "\""; }

std::filesystem::path temp_file(const std::string& tag) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("gpinv_cli_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
            std::to_string(counter++));
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_shell(const std::string& cmd) {
    const auto out_p = temp_file("out");
    const auto err_p = temp_file("err");
    const std::string full = cmd + " > " + out_p.string() + " 2> " + err_p.string();
    const int rc = std::system(full.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_p);
    r.err = slurp(err_p);
    std::filesystem::remove(out_p);
    std::filesystem::remove(err_p);
    return r;
}

std::filesystem::path write_temp(const std::string& tag, const std::string& content) {
    const auto p = temp_file(tag);
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

gpinv::Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return gpinv::read_matrix(in);
}

} // namespace

TEST_CASE("cli gen") {
    SECTION("star 5 writes the exact edge list") {
        const auto r = run_shell(cli() + " gen star 5");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "n 5\n1 2\n1 3\n1 4\n1 5\n");
    }
    SECTION("output is bit-identical across runs") {
        const auto a = run_shell(cli() + " gen erdos-renyi 10 0.5 --seed 7");
        const auto b = run_shell(cli() + " gen erdos-renyi 10 0.5 --seed 7");
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
    SECTION("-o writes a file") {
        const auto p = temp_file("gen_o");
        const auto r = run_shell(cli() + " gen cycle 4 -o " + p.string());
        CHECK(r.exit_code == 0);
        CHECK(r.out.empty());
        CHECK(slurp(p) == "n 4\n1 2\n1 4\n2 3\n3 4\n");
        std::filesystem::remove(p);
    }
    SECTION("bad family and bad arity are usage errors") {
        CHECK(run_shell(cli() + " gen moebius 5").exit_code == 64);
        CHECK(run_shell(cli() + " gen star").exit_code == 64);
        CHECK(run_shell(cli() + " gen star 4 5").exit_code == 64);
    }
}

TEST_CASE("cli pinv") {
    SECTION("gen star 5 | pinv /dev/stdin shows 1/4 in the first row") {
        const auto r = run_shell(cli() + " gen star 5 | " + cli() + " pinv /dev/stdin");
        REQUIRE(r.exit_code == 0);
        const auto m = parse_matrix(r.out);
        REQUIRE(m.dim() == 5);
        for (std::size_t j = 1; j < 5; ++j) {
            CHECK_THAT(m(0, j), Catch::Matchers::WithinAbs(0.25, 1e-8));
            CHECK_THAT(m(j, 0), Catch::Matchers::WithinAbs(0.25, 1e-8));
        }
        CHECK_THAT(m(0, 0), Catch::Matchers::WithinAbs(0.0, 1e-8));
        CHECK_THAT(m(2, 3), Catch::Matchers::WithinAbs(0.0, 1e-8));
    }
    SECTION("diagnostics go to stderr, payload to stdout") {
        const auto g = write_temp("k4", "n 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
        const auto r = run_shell(cli() + " pinv " + g.string());
        CHECK(r.exit_code == 0);
        CHECK(r.err.find("rank estimate: 4") != std::string::npos);
        CHECK(r.err.find("iterations:") != std::string::npos);
        CHECK(r.out.find("rank") == std::string::npos);
        std::filesystem::remove(g);
    }
    SECTION("matrix-market output format") {
        const auto r = run_shell(cli() + " gen complete 3 | " + cli() +
                                 " pinv /dev/stdin --format matrix-market-array");
        CHECK(r.exit_code == 0);
        CHECK(r.out.rfind("%%MatrixMarket matrix array real general\n", 0) == 0);
        CHECK(run_shell(cli() + " gen complete 3 | " + cli() +
                        " pinv /dev/stdin --format yaml")
                  .exit_code == 64);
    }
    SECTION("no convergence without extrapolation: exit 2, last iterate still written") {
        const auto r = run_shell(cli() + " gen path 3 | " + cli() +
                                 " pinv /dev/stdin --no-extrapolate --lambda-cap 100");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("warning") != std::string::npos);
        const auto m = parse_matrix(r.out);
        CHECK(m.dim() == 3);
    }
    SECTION("threading does not change the payload") {
        const auto g = write_temp("er", "");
        run_shell(cli() + " gen erdos-renyi 20 0.4 --seed 3 -o " + g.string());
        const auto one = run_shell(cli() + " pinv " + g.string() + " --threads 1");
        const auto four = run_shell(cli() + " pinv " + g.string() + " --threads 4");
        CHECK(one.exit_code == 0);
        CHECK(one.out == four.out);
        std::filesystem::remove(g);
    }
}

TEST_CASE("cli rank-test") {
    SECTION("K_4 is nonsingular") {
        const auto r = run_shell(cli() + " gen complete 4 | " + cli() + " rank-test /dev/stdin");
        CHECK(r.exit_code == 0);
        CHECK(r.out.rfind("nonsingular\n", 0) == 0);
    }
    SECTION("S_6 is singular") {
        const auto r = run_shell(cli() + " gen star 6 | " + cli() + " rank-test /dev/stdin");
        CHECK(r.exit_code == 0);
        CHECK(r.out.rfind("singular\n", 0) == 0);
        CHECK(r.out.find("witness") != std::string::npos);
    }
}

TEST_CASE("cli verify") {
    const auto g = write_temp("verify_g", "");
    run_shell(cli() + " gen path 7 -o " + g.string());
    const auto m = temp_file("verify_m");

    SECTION("accepts the pinv output") {
        REQUIRE(run_shell(cli() + " pinv " + g.string() + " -o " + m.string()).exit_code == 0);
        const auto r = run_shell(cli() + " verify " + g.string() + " " + m.string());
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("PASS") != std::string::npos);
    }
    SECTION("rejects a wrong candidate") {
        // the adjacency matrix itself is not its own pseudoinverse for P_7
        std::ostringstream adj;
        adj << "0\t1\t0\t0\t0\t0\t0\n1\t0\t1\t0\t0\t0\t0\n0\t1\t0\t1\t0\t0\t0\n"
            << "0\t0\t1\t0\t1\t0\t0\n0\t0\t0\t1\t0\t1\t0\n0\t0\t0\t0\t1\t0\t1\n"
            << "0\t0\t0\t0\t0\t1\t0\n";
        std::ofstream(m, std::ios::binary) << adj.str();
        const auto r = run_shell(cli() + " verify " + g.string() + " " + m.string());
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("FAIL") != std::string::npos);
    }
    SECTION("rejects a dimension mismatch") {
        std::ofstream(m, std::ios::binary) << "0.0\t0.5\n0.5\t0.0\n";
        const auto r = run_shell(cli() + " verify " + g.string() + " " + m.string());
        CHECK(r.exit_code == 1);
    }
    std::filesystem::remove(g);
    std::filesystem::remove(m);
}

TEST_CASE("cli trace") {
    const auto r = run_shell(cli() + " gen complete 4 | " + cli() +
                             " trace /dev/stdin --lambda-cap 1e4");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "lambda,max_entry_change,error_vs_oracle");
    int rows = 0;
    double prev_err = 1e300;
    while (std::getline(lines, line)) {
        ++rows;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        REQUIRE(c2 != std::string::npos);
        const double err = std::stod(line.substr(c2 + 1));
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(rows == 5); // lambda = 1, 10, 100, 1e3, 1e4
}

TEST_CASE("cli error exits") {
    SECTION("unknown subcommand and unknown flag: 64") {
        CHECK(run_shell(cli() + " frobnicate x").exit_code == 64);
        CHECK(run_shell(cli() + " gen star 5 --frobnicate").exit_code == 64);
        CHECK(run_shell(cli()).exit_code == 64);
    }
    SECTION("missing input file: 66") {
        CHECK(run_shell(cli() + " pinv /nonexistent/graph.txt").exit_code == 66);
        CHECK(run_shell(cli() + " rank-test /nonexistent/graph.txt").exit_code == 66);
    }
    SECTION("malformed edge list: 66 with the line number") {
        const auto g = write_temp("bad", "1 2\n1 1\n");
        const auto r = run_shell(cli() + " pinv " + g.string());
        CHECK(r.exit_code == 66);
        CHECK(r.err.find("line 2") != std::string::npos);
        std::filesystem::remove(g);
    }
    SECTION("uncreatable output file: 73") {
        const auto r = run_shell(cli() + " gen star 4 -o /nonexistent-dir/out.txt");
        CHECK(r.exit_code == 73);
    }
    SECTION("help exits 0") {
        CHECK(run_shell(cli() + " --help").exit_code == 0);
        CHECK(run_shell(cli() + " pinv --help").exit_code == 0);
    }
}
