// qrdw: mod-2 Dijkgraaf-Witten invariants of real quadratic fields
// Q(sqrt(p_1...p_r)), p_i == 1 (mod 4), through quadratic residue graphs,
// plus the graph-census and prime-density experiments around them.

#include <cstdio>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrdw/combinatorics.hpp"
#include "qrdw/density.hpp"
#include "qrdw/dw_invariant.hpp"
#include "qrdw/enumeration.hpp"
#include "qrdw/errors.hpp"
#include "qrdw/graph.hpp"
#include "qrdw/link_invariant.hpp"
#include "qrdw/number_theory.hpp"
#include "qrdw/qr_graph.hpp"

namespace {

using namespace qrdw;

struct GoldenRow {
    std::vector<std::uint64_t> primes;
    std::int64_t expected;
};

// published r=3 and r=4 tables of Z_k
const std::vector<GoldenRow>& appendix_rows() {
    static const std::vector<GoldenRow> rows = {
        {{5, 13, 17}, 0},
        {{5, 13, 37}, 2},
        {{5, 13, 41}, 0},
        {{5, 13, 61}, 0},
        {{5, 29, 37}, 0},
        {{5, 13, 17, 29}, 0},
        {{5, 13, 17, 41}, 4},
        {{5, 13, 29, 53}, 0},
        {{5, 13, 29, 61}, 0},
        {{5, 13, 37, 101}, 4},
        {{5, 17, 29, 37}, 0},
        {{5, 13, 37, 113}, 0},
        {{13, 17, 29, 97}, 0},
        {{5, 17, 41, 53}, 4},
        {{13, 17, 53, 73}, 0},
        {{5, 17, 37, 113}, 0},
        {{5, 29, 41, 89}, 4},
        {{5, 37, 61, 101}, 0},
    };
    return rows;
}

// one row per line: the primes, then the expected integer Z_k; '#' comments
std::vector<GoldenRow> load_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open golden table: " + path);
    }
    std::vector<GoldenRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::vector<std::int64_t> values;
        std::int64_t v = 0;
        while (fields >> v) {
            values.push_back(v);
        }
        if (!fields.eof()) {
            throw ValidationError("golden table: bad token in line '" + line + "'");
        }
        if (values.size() < 2) {
            throw ValidationError("golden table: line '" + line + "' needs primes and a value");
        }
        GoldenRow row;
        row.expected = values.back();
        for (std::size_t k = 0; k + 1 < values.size(); ++k) {
            if (values[k] <= 0) {
                throw ValidationError("golden table: nonpositive prime in line '" + line + "'");
            }
            row.primes.push_back(static_cast<std::uint64_t>(values[k]));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string join_primes(const std::vector<std::uint64_t>& primes) {
    std::string out;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        if (k > 0) {
            out += " ";
        }
        out += std::to_string(primes[k]);
    }
    return out;
}

int run_invariant(const std::vector<std::uint64_t>& primes, const std::string& method,
                  int hom_limit) {
    const PrimeSet s(primes);
    if (method == "all") {
        const DyadicValue fast = invariant_fast(s);
        const DyadicValue sum = hirano_sum(s, hom_limit);
        const DyadicValue product = product_indicator(s);
        std::printf("Z_k = %s   [fast]\n", fast.to_string().c_str());
        std::printf("Z_k = %s   [hirano]\n", sum.to_string().c_str());
        std::printf("Z_k = %s   [product]\n", product.to_string().c_str());
        if (fast == sum && sum == product) {
            std::printf("agreement OK\n");
            return 0;
        }
        std::printf("method disagreement\n");
        return 3;
    }
    DyadicValue z;
    if (method == "fast") {
        z = invariant_fast(s);
    } else if (method == "hirano") {
        z = hirano_sum(s, hom_limit);
    } else {
        z = product_indicator(s);
    }
    std::printf("Z_k = %s\n", z.to_string().c_str());
    return 0;
}

int run_graph(const std::vector<std::uint64_t>& primes, const std::string& format) {
    const PrimeSet s(primes);
    const Graph g = build_qr_graph(s);
    if (format == "json") {
        std::printf("%s\n", to_json(g).c_str());
        return 0;
    }
    if (format == "dot") {
        std::vector<std::string> labels;
        for (int i = 1; i <= s.size(); ++i) {
            labels.push_back(std::to_string(s.prime(i)));
        }
        std::printf("%s", to_dot(g, labels).c_str());
        return 0;
    }
    std::printf("G(S) on %d vertices, %zu edges, even: %s\n", g.num_vertices(), g.num_edges(),
                g.is_even() ? "yes" : "no");
    for (int i = 1; i <= s.size(); ++i) {
        std::printf("  %llu:", static_cast<unsigned long long>(s.prime(i)));
        for (int j = 1; j <= s.size(); ++j) {
            if (j != i && g.has_edge(i, j)) {
                std::printf(" %llu", static_cast<unsigned long long>(s.prime(j)));
            }
        }
        std::printf("\n");
    }
    return 0;
}

int run_table(const std::string& golden_path, int hom_limit) {
    const std::vector<GoldenRow> rows =
        golden_path.empty() ? appendix_rows() : load_golden_file(golden_path);
    if (rows.empty()) {
        throw ValidationError("golden table is empty");
    }
    int mismatches = 0;
    for (const auto& row : rows) {
        const PrimeSet s(row.primes);
        const DyadicValue z = hirano_sum(s, hom_limit);
        const DyadicValue expected = DyadicValue::from_integer(row.expected);
        const bool match = z == expected;
        if (!match) {
            ++mismatches;
        }
        std::printf("r=%d  {%s}  Z_k = %s  expected %s  %s\n", s.size(),
                    join_primes(row.primes).c_str(), z.to_string().c_str(),
                    expected.to_string().c_str(), match ? "OK" : "MISMATCH");
    }
    std::printf("table: %zu/%zu rows match\n", rows.size() - mismatches, rows.size());
    return mismatches == 0 ? 0 : 3;
}

int run_verify(std::uint64_t max_prime, int max_r, int hom_limit) {
    const auto pool = primes_1_mod_4_up_to(max_prime);
    bool all_good = true;
    std::uint64_t subsets = 0;

    for (int r = 1; r <= max_r; ++r) {
        for_each_combination(static_cast<int>(pool.size()), r, [&](const std::vector<int>& idx) {
            std::vector<std::uint64_t> primes;
            for (int k : idx) {
                primes.push_back(pool[static_cast<std::size_t>(k)]);
            }
            const PrimeSet s(primes);
            const SymbolMatrix symbols(s);

            const DyadicValue sum = hirano_sum(s, hom_limit);
            const DyadicValue product = product_indicator(s);
            const DyadicValue fast = invariant_fast(s);

            std::int64_t phi_sum = 0;
            for (std::uint64_t k = 0; k < HomElement::count(r); ++k) {
                phi_sum += phi_character(symbols, HomElement::from_index(r, k));
            }
            const bool even = build_qr_graph(symbols).is_even();
            const std::int64_t full = std::int64_t{1} << (r - 1);
            const DyadicValue expected = even ? DyadicValue::pow2(r - 2) : DyadicValue::zero();

            const bool good = sum == product && sum == fast && sum == expected &&
                              phi_sum == (even ? full : 0);
            if (!good) {
                all_good = false;
                std::printf("FAIL {%s}: hirano=%s product=%s fast=%s phi_sum=%lld\n",
                            join_primes(primes).c_str(), sum.to_string().c_str(),
                            product.to_string().c_str(), fast.to_string().c_str(),
                            static_cast<long long>(phi_sum));
            }
            ++subsets;
        });
    }
    std::printf("subsets checked: %llu (r = 1..%d, primes <= %llu, pool = %zu)\n",
                static_cast<unsigned long long>(subsets), max_r,
                static_cast<unsigned long long>(max_prime), pool.size());

    std::uint64_t graphs = 0;
    for (int r = 1; r <= 6; ++r) {
        std::uint64_t evens = 0;
        const std::uint64_t masks = std::uint64_t{1} << pair_count(r);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            if (Graph::from_bitmask(r, mask).is_even()) {
                ++evens;
            }
        }
        graphs += masks;
        if (evens != count_even_graphs(static_cast<std::uint64_t>(r)).as_uint64()) {
            all_good = false;
            std::printf("FAIL even-graph census at r=%d: %llu\n", r,
                        static_cast<unsigned long long>(evens));
        }
    }
    std::printf("graphs checked: %llu (even-graph census, r = 1..6)\n",
                static_cast<unsigned long long>(graphs));
    std::printf("verify: %s\n", all_good ? "PASS" : "FAIL");
    return all_good ? 0 : 3;
}

int run_density(int r, std::uint64_t x, bool exhaustive, std::uint64_t samples,
                std::uint64_t seed, const std::string& output, std::uint64_t budget,
                int threads) {
    DensityReport report;
    if (exhaustive) {
        report = exact_density_scan(r, x, budget, threads);
    } else {
        if (samples == 0) {
            throw DomainError("monte carlo mode needs --samples (or pass --exhaustive)");
        }
        report = monte_carlo_density(r, x, samples, seed, threads);
    }
    if (output.empty()) {
        write_csv_header(std::cout);
        write_csv_row(std::cout, report);
        std::cout.flush();
    } else {
        std::ofstream out(output);
        if (!out) {
            throw ValidationError("cannot open output file: " + output);
        }
        write_csv_header(out);
        write_csv_row(out, report);
    }
    return 0;
}

int run_enumerate(std::uint64_t r) {
    std::printf("%s graphs, %s even, ratio %s\n",
                count_all_graphs(r).to_decimal_string().c_str(),
                count_even_graphs(r).to_decimal_string().c_str(),
                even_graph_ratio(static_cast<int>(r)).to_string().c_str());
    return 0;
}

int run_link(const std::string& matrix_path, const std::string& method, int hom_limit) {
    const LinkingMatrix m = load_linking_matrix(matrix_path);
    if (method == "all") {
        const DyadicValue fast = link_invariant_fast(m);
        const DyadicValue sum = link_hirano_sum(m, hom_limit);
        std::printf("Z_M = %s   [fast]\n", fast.to_string().c_str());
        std::printf("Z_M = %s   [hirano]\n", sum.to_string().c_str());
        if (fast == sum) {
            std::printf("agreement OK\n");
            return 0;
        }
        std::printf("method disagreement\n");
        return 3;
    }
    const DyadicValue z =
        method == "fast" ? link_invariant_fast(m) : link_hirano_sum(m, hom_limit);
    std::printf("Z_M = %s\n", z.to_string().c_str());
    return 0;
}

void print_charsum_line(int r, int s, std::uint64_t x, std::uint64_t budget) {
    const long long value = character_sum_es(r, s, x, budget);
    const auto pool = primes_1_mod_4_up_to(x);
    double denom = 1.0;
    for (int k = 0; k < r; ++k) {
        denom *= static_cast<double>(pool.size());
    }
    const double ratio = pool.size() == 0 ? 0.0 : std::abs(static_cast<double>(value)) / denom;
    std::printf("x=%llu  E_%d(x)=%lld  pi41(x)=%zu  |E|/pi41^%d=%.10g\n",
                static_cast<unsigned long long>(x), s, value, pool.size(), r, ratio);
}

int run_charsum(int r, int s, std::uint64_t x, bool trend, std::uint64_t budget) {
    if (trend) {
        for (std::uint64_t xi : {200ULL, 400ULL, 800ULL, 1600ULL}) {
            print_charsum_line(r, s, xi, budget);
        }
        return 0;
    }
    print_charsum_line(r, s, x, budget);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-2 Dijkgraaf-Witten invariants of real quadratic fields via quadratic "
                 "residue graphs"};
    app.require_subcommand(1);
    int exit_code = 0;

    // invariant
    std::vector<std::uint64_t> inv_primes;
    std::string inv_method = "fast";
    int inv_hom_limit = kDefaultHomLimit;
    auto* invariant_cmd = app.add_subcommand("invariant", "compute Z_k for a set of primes");
    invariant_cmd->add_option("primes", inv_primes, "distinct primes == 1 (mod 4)")->required();
    invariant_cmd->add_option("--method", inv_method, "fast|hirano|product|all")
        ->check(CLI::IsMember({"fast", "hirano", "product", "all"}));
    invariant_cmd->add_option("--hom-limit", inv_hom_limit,
                              "largest r the character sum will brute-force");
    invariant_cmd->callback(
        [&] { exit_code = run_invariant(inv_primes, inv_method, inv_hom_limit); });

    // graph
    std::vector<std::uint64_t> graph_primes;
    std::string graph_format = "ascii";
    auto* graph_cmd = app.add_subcommand("graph", "print the quadratic residue graph G(S)");
    graph_cmd->add_option("primes", graph_primes, "distinct primes == 1 (mod 4)")->required();
    graph_cmd->add_option("--format", graph_format, "ascii|dot|json")
        ->check(CLI::IsMember({"ascii", "dot", "json"}));
    graph_cmd->callback([&] { exit_code = run_graph(graph_primes, graph_format); });

    // table
    std::string table_golden;
    int table_hom_limit = kDefaultHomLimit;
    auto* table_cmd =
        app.add_subcommand("table", "recompute the published Z_k tables and diff-check them");
    table_cmd->add_option("--golden", table_golden,
                          "override the embedded golden rows with a file");
    table_cmd->add_option("--hom-limit", table_hom_limit,
                          "largest r the character sum will brute-force");
    table_cmd->callback([&] { exit_code = run_table(table_golden, table_hom_limit); });

    // verify
    std::uint64_t verify_max_prime = 150;
    int verify_max_r = 5;
    int verify_hom_limit = kDefaultHomLimit;
    auto* verify_cmd = app.add_subcommand(
        "verify", "cross-check all invariant routes over a prime pool, plus the graph census");
    verify_cmd->add_option("--max-prime", verify_max_prime, "prime pool bound")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-r", verify_max_r, "largest subset size")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--hom-limit", verify_hom_limit,
                           "largest r the character sum will brute-force");
    verify_cmd->callback(
        [&] { exit_code = run_verify(verify_max_prime, verify_max_r, verify_hom_limit); });

    // density
    int density_r = 0;
    std::uint64_t density_x = 0;
    bool density_exhaustive = false;
    std::uint64_t density_samples = 0;
    std::uint64_t density_seed = 0;
    std::string density_output;
    std::uint64_t density_budget = kDefaultSubsetBudget;
    int density_threads = 1;
    auto* density_cmd =
        app.add_subcommand("density", "measure the even-graph density over prime subsets");
    density_cmd->add_option("--r", density_r, "subset size")->required()->check(
        CLI::PositiveNumber);
    density_cmd->add_option("--x", density_x, "prime pool bound")->required()->check(
        CLI::PositiveNumber);
    auto* exhaustive_flag =
        density_cmd->add_flag("--exhaustive", density_exhaustive, "scan every subset");
    density_cmd->add_option("--samples", density_samples, "monte carlo sample count")
        ->excludes(exhaustive_flag);
    density_cmd->add_option("--seed", density_seed, "monte carlo seed");
    density_cmd->add_option("--output", density_output, "write the CSV here instead of stdout");
    density_cmd->add_option("--budget", density_budget, "largest exhaustive subset count");
    density_cmd->add_option("--threads", density_threads, "worker threads")
        ->check(CLI::PositiveNumber);
    density_cmd->callback([&] {
        exit_code = run_density(density_r, density_x, density_exhaustive, density_samples,
                                density_seed, density_output, density_budget, density_threads);
    });

    // enumerate
    std::uint64_t enumerate_r = 0;
    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "count labeled graphs and even graphs on r vertices");
    enumerate_cmd->add_option("--r", enumerate_r, "vertex count")->required()->check(
        CLI::PositiveNumber);
    enumerate_cmd->callback([&] { exit_code = run_enumerate(enumerate_r); });

    // link
    std::string link_matrix;
    std::string link_method = "fast";
    int link_hom_limit = kDefaultHomLimit;
    auto* link_cmd =
        app.add_subcommand("link", "compute Z_M from a mod-2 linking matrix file");
    link_cmd->add_option("--matrix", link_matrix, "linking matrix file")->required();
    link_cmd->add_option("--method", link_method, "fast|hirano|all")
        ->check(CLI::IsMember({"fast", "hirano", "all"}));
    link_cmd->add_option("--hom-limit", link_hom_limit,
                         "largest r the character sum will brute-force");
    link_cmd->callback([&] { exit_code = run_link(link_matrix, link_method, link_hom_limit); });

    // charsum
    int charsum_r = 2;
    int charsum_s = 1;
    std::uint64_t charsum_x = 0;
    bool charsum_trend = false;
    std::uint64_t charsum_budget = kDefaultSubsetBudget;
    auto* charsum_cmd = app.add_subcommand(
        "charsum", "character-sum error term E_s(x) over ordered prime tuples");
    charsum_cmd->add_option("--r", charsum_r, "tuple size");
    charsum_cmd->add_option("--s", charsum_s, "denominator block size");
    auto* charsum_x_opt =
        charsum_cmd->add_option("--x", charsum_x, "prime pool bound")->check(CLI::PositiveNumber);
    charsum_cmd->add_flag("--trend", charsum_trend, "tabulate x = 200,400,800,1600")
        ->excludes(charsum_x_opt);
    charsum_cmd->add_option("--budget", charsum_budget, "largest ordered-tuple count");
    charsum_cmd->callback([&] {
        if (!charsum_trend && charsum_x == 0) {
            throw DomainError("charsum needs --x (or --trend)");
        }
        exit_code = run_charsum(charsum_r, charsum_s, charsum_x, charsum_trend, charsum_budget);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const LimitError& e) {
        std::fprintf(stderr, "limit: %s\n", e.what());
        return 4;
    } catch (const BudgetError& e) {
        std::fprintf(stderr, "budget: %s\n", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal: %s\n", e.what());
        return 3;
    }
    return exit_code;
}
