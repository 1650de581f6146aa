#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

// run the CLI with stderr dropped; stdout and the exit code come back
CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(QRDW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string& name) { return std::string(QRDW_FIXTURES_DIR) + "/" + name; }

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

} // namespace

TEST_SUITE("cli") {

    TEST_CASE("invariant with all methods agrees on the worked example") {
        const auto result = run_cli("invariant 5 29 37 73 --method all");
        CHECK(result.exit_code == 0);
        CHECK(count_occurrences(result.out, "Z_k = 4") == 3);
        CHECK(result.out.find("agreement OK") != std::string::npos);
    }

    TEST_CASE("invariant single methods") {
        CHECK(run_cli("invariant 5 13 61 --method fast").out == "Z_k = 0\n");
        CHECK(run_cli("invariant 5 13 37 --method hirano").out == "Z_k = 2\n");
        CHECK(run_cli("invariant 13 --method product").out == "Z_k = 1/2\n");
    }

    TEST_CASE("invariant validation failures exit 2") {
        CHECK(run_cli("invariant 3 5").exit_code == 2);   // 3 == 3 (mod 4)
        CHECK(run_cli("invariant 21").exit_code == 2);    // composite
        CHECK(run_cli("invariant").exit_code == 2);       // missing primes
    }

    TEST_CASE("invariant over the hom limit exits 4") {
        const auto result = run_cli("invariant 5 13 17 29 37 --method hirano --hom-limit 3");
        CHECK(result.exit_code == 4);
    }

    TEST_CASE("graph json matches the worked figures byte for byte") {
        CHECK(run_cli("graph 5 13 37 --format json").out ==
              "{\"r\":3,\"edges\":[[1,2],[1,3],[2,3]]}\n");
        CHECK(run_cli("graph 5 --format json").out == "{\"r\":1,\"edges\":[]}\n");
        CHECK(run_cli("graph 5 13 37 41 --format json").out ==
              "{\"r\":4,\"edges\":[[1,2],[1,3],[2,3],[2,4]]}\n");
    }

    TEST_CASE("graph dot and ascii") {
        const auto dot = run_cli("graph 5 13 37 --format dot");
        CHECK(dot.exit_code == 0);
        CHECK(dot.out.find("graph G {") == 0);
        CHECK(dot.out.find("1 [label=\"5\", pos=\"1.0000,0.0000!\"];") != std::string::npos);
        CHECK(dot.out.find("2 -- 3;") != std::string::npos);

        const auto ascii = run_cli("graph 5 13 17");
        CHECK(ascii.exit_code == 0);
        CHECK(ascii.out.find("even: no") != std::string::npos);
        CHECK(ascii.out.find("  5: 13 17") != std::string::npos);
    }

    TEST_CASE("table recomputes the embedded golden rows") {
        const auto result = run_cli("table");
        CHECK(result.exit_code == 0);
        CHECK(result.out.find("table: 18/18 rows match") != std::string::npos);
        CHECK(result.out.find("MISMATCH") == std::string::npos);
        CHECK(result.out.find("r=3  {5 13 37}  Z_k = 2  expected 2  OK") != std::string::npos);
    }

    TEST_CASE("table flags corrupted golden rows and exits 3") {
        const auto result = run_cli("table --golden " + fixture("golden_corrupted.txt"));
        CHECK(result.exit_code == 3);
        CHECK(result.out.find("{5 13 37}  Z_k = 2  expected 4  MISMATCH") != std::string::npos);
        CHECK(result.out.find("table: 2/3 rows match") != std::string::npos);
    }

    TEST_CASE("table rejects an empty golden set") {
        CHECK(run_cli("table --golden " + fixture("golden_empty.txt")).exit_code == 2);
        CHECK(run_cli("table --golden /nonexistent.txt").exit_code == 2);
    }

    TEST_CASE("verify on a tiny pool") {
        const auto result = run_cli("verify --max-prime 10 --max-r 1");
        CHECK(result.exit_code == 0);
        CHECK(result.out.find("subsets checked: 1 ") != std::string::npos);
        CHECK(result.out.find("verify: PASS") != std::string::npos);
    }

    TEST_CASE("verify over the full 16-prime pool") {
        const auto result = run_cli("verify --max-prime 150 --max-r 5");
        CHECK(result.exit_code == 0);
        // sum of C(16,r) for r = 1..5
        CHECK(result.out.find("subsets checked: 6884 ") != std::string::npos);
        CHECK(result.out.find("graphs checked: 33867 ") != std::string::npos);
        CHECK(result.out.find("verify: PASS") != std::string::npos);
    }

    TEST_CASE("verify usage errors exit 2") {
        CHECK(run_cli("verify --max-r 0").exit_code == 2);
        CHECK(run_cli("verify --max-prime -5").exit_code == 2);
    }

    TEST_CASE("enumerate prints the closed-form counts") {
        CHECK(run_cli("enumerate --r 4").out == "64 graphs, 8 even, ratio 1/8\n");
        CHECK(run_cli("enumerate --r 1").out == "1 graphs, 1 even, ratio 1\n");
        CHECK(run_cli("enumerate --r 20").out.find("1569275433846670190958947355801916604025588861116008628224") == 0);
    }

    TEST_CASE("link reads the matrix file format") {
        const auto result = run_cli("link --matrix " + fixture("triangle_plus_isolated.txt"));
        CHECK(result.exit_code == 0);
        CHECK(result.out == "Z_M = 4\n");

        const auto all = run_cli("link --matrix " + fixture("triangle_plus_isolated.txt") +
                                 " --method all");
        CHECK(all.exit_code == 0);
        CHECK(all.out.find("agreement OK") != std::string::npos);

        CHECK(run_cli("link --matrix /nonexistent.txt").exit_code == 2);
    }

    TEST_CASE("density exhaustive CSV") {
        const auto result = run_cli("density --r 2 --x 100 --exhaustive");
        CHECK(result.exit_code == 0);
        CHECK(result.out ==
              "r,x,mode,samples,hits,empirical,theoretical,std_error,seed,pi41_x\n"
              "2,100,exhaustive,55,23,0.4181818182,0.5,,,11\n");
    }

    TEST_CASE("density monte carlo runs are byte-identical for a fixed seed") {
        const std::string invocation = "density --r 2 --x 1000 --samples 2000 --seed 7";
        const auto first = run_cli(invocation);
        const auto second = run_cli(invocation);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK(first.out.find("monte_carlo") != std::string::npos);
    }

    TEST_CASE("density budget violations exit 4") {
        CHECK(run_cli("density --r 3 --x 300 --exhaustive --budget 10").exit_code == 4);
    }

    TEST_CASE("density without a mode exits 2") {
        CHECK(run_cli("density --r 2 --x 100").exit_code == 2);
        // --exhaustive and --samples are mutually exclusive
        CHECK(run_cli("density --r 2 --x 100 --exhaustive --samples 10").exit_code == 2);
    }

    TEST_CASE("charsum single point and trend") {
        const auto result = run_cli("charsum --r 2 --s 1 --x 100");
        CHECK(result.exit_code == 0);
        CHECK(result.out.find("E_1(x)=-18") != std::string::npos);
        CHECK(result.out.find("pi41(x)=11") != std::string::npos);

        const auto trend = run_cli("charsum --r 2 --s 1 --trend");
        CHECK(trend.exit_code == 0);
        CHECK(trend.out.find("x=200") != std::string::npos);
        CHECK(trend.out.find("x=1600") != std::string::npos);

        CHECK(run_cli("charsum --r 2 --s 1").exit_code == 2); // no --x, no --trend
    }

    TEST_CASE("identical invocations produce identical bytes") {
        for (const char* invocation :
             {"table", "verify --max-prime 40 --max-r 3", "graph 5 13 37 41 --format dot"}) {
            const auto first = run_cli(invocation);
            const auto second = run_cli(invocation);
            CHECK(first.out == second.out);
            CHECK(first.exit_code == second.exit_code);
        }
    }
}
