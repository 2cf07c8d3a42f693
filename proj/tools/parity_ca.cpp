// parity-ca: command-line front end for the parity cellular-automaton toolkit.
//
// Exit codes: 0 success/pass, 1 verification failure (counterexample printed),
// 2 usage error, 3 impossibility-pipeline escalation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parity/debruijn.hpp"
#include "parity/impossibility.hpp"
#include "parity/parallel.hpp"
#include "parity/pattern.hpp"
#include "parity/simulate.hpp"

namespace {

using namespace parity;

unsigned budget_factor_from_env() {
    if (const char* env = std::getenv("PARITY_CA_MAX_STEPS_FACTOR")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1u << 20) return static_cast<unsigned>(v);
        throw std::invalid_argument("PARITY_CA_MAX_STEPS_FACTOR must be a positive integer");
    }
    return 8;
}

LocalRule resolve_rule(const std::string& spec) {
    if (spec == "bfo") return bfo_rule();
    if (spec.rfind("num:", 0) == 0) {
        std::string rest = spec.substr(4);
        auto colon = rest.rfind(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == rest.size())
            throw std::invalid_argument("rule number form is num:<decimal>:<radius>");
        int radius = std::stoi(rest.substr(colon + 1));
        if (radius < 0 || radius > 8)
            throw std::invalid_argument("radius must be between 0 and 8");
        return rule_from_number(rest.substr(0, colon), radius);
    }
    auto patterns = load_pattern_file(spec);
    int radius = static_cast<int>((patterns.front().cells.size() - 1) / 2);
    return compile_patterns(patterns, radius);
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(csv);
    std::string field;
    while (std::getline(ss, field, ',')) {
        if (field.empty()) continue;
        sizes.push_back(static_cast<std::size_t>(std::stoul(field)));
    }
    if (sizes.empty()) throw std::invalid_argument("--sizes needs at least one lattice size");
    return sizes;
}

std::string outcome_line(const Outcome& outcome) {
    std::string line = to_string(outcome.tag);
    line += " steps=" + std::to_string(outcome.steps);
    if (outcome.tag == OutcomeTag::Cycle) line += " period=" + std::to_string(outcome.period);
    if (!outcome.converged()) line += " witness=" + outcome.witness.str();
    return line;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-dimensional binary circular cellular automata: parity-problem toolkit"};
    app.require_subcommand(1);

    std::string rule_spec = "bfo";
    std::string config_str;
    std::string sizes_csv;
    std::string format = "ascii";
    std::uint64_t max_steps = 0;  // 0 = factor * n^2
    std::uint64_t steps = 1;
    unsigned jobs = 0;
    bool allow_even = false;
    bool prime_only = false;
    bool dump_graph = false;
    int target = 1;
    std::size_t length = 5;

    auto add_rule_option = [&rule_spec](CLI::App* cmd) {
        cmd->add_option("--rule", rule_spec,
                        "bfo, a pattern file path, or num:<decimal>:<radius>");
    };

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "apply the rule for a number of steps");
    add_rule_option(simulate_cmd);
    simulate_cmd->add_option("--config", config_str, "initial configuration, e.g. 0001000")
        ->required();
    simulate_cmd->add_option("--steps", steps, "number of steps (default 1)");

    CLI::App* classify_cmd = app.add_subcommand("classify", "iterate to a fixed point, cycle, or budget");
    add_rule_option(classify_cmd);
    classify_cmd->add_option("--config", config_str)->required();
    classify_cmd->add_option("--max-steps", max_steps, "step budget (default 8*n^2)");
    classify_cmd->add_flag("--allow-even", allow_even, "permit even lattice sizes (diagnostic)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustively check parity convergence");
    add_rule_option(verify_cmd);
    verify_cmd->add_option("--sizes", sizes_csv, "comma-separated lattice sizes")->required();
    verify_cmd->add_option("--max-steps", max_steps, "fixed step budget (default 8*n^2)");
    verify_cmd->add_option("--jobs", jobs, "worker threads (default: hardware)");
    verify_cmd->add_flag("--allow-even", allow_even, "permit even lattice sizes (diagnostic)");

    CLI::App* cert_cmd = app.add_subcommand("parity-cert", "certify or refute pairwise parity preservation");
    add_rule_option(cert_cmd);
    cert_cmd->add_flag("--dump-graph", dump_graph, "print the de Bruijn edge list and exit");

    CLI::App* pre_cmd = app.add_subcommand("preimages", "pre-images of a homogeneous configuration");
    add_rule_option(pre_cmd);
    pre_cmd->add_option("--target", target, "homogeneous target bit")->check(CLI::Range(0, 1));
    pre_cmd->add_option("--length", length, "lattice size")->required();

    CLI::App* tables_cmd = app.add_subcommand("r2-tables", "feasible radius-2 pre-image cycles at sizes 5 and 7");

    CLI::App* r1_cmd = app.add_subcommand("r1-search", "eliminate radius-1 candidates");

    CLI::App* r2_cmd = app.add_subcommand("r2-search", "enumerate and refute radius-2 candidates");
    r2_cmd->add_flag("--prime-only", prime_only, "restrict lattice sizes to primes");
    r2_cmd->add_option("--jobs", jobs, "worker threads (default: hardware)");

    CLI::App* st_cmd = app.add_subcommand("spacetime", "write the evolution as rows of cells");
    add_rule_option(st_cmd);
    st_cmd->add_option("--config", config_str)->required();
    st_cmd->add_option("--steps", steps, "rows below the initial configuration")->required();
    st_cmd->add_option("--format", format, "ascii or pbm")
        ->check(CLI::IsMember({"ascii", "pbm"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        unsigned factor = budget_factor_from_env();
        auto budget_for = [&](std::size_t n) {
            return max_steps ? max_steps : StepBudget{factor, 0}.for_size(n);
        };

        if (simulate_cmd->parsed()) {
            LocalRule rule = resolve_rule(rule_spec);
            Configuration c = Configuration::from_string(config_str);
            for (std::uint64_t t = 0; t < steps; ++t) c = step(rule, c);
            std::cout << c.str() << '\n';
            return 0;
        }

        if (classify_cmd->parsed()) {
            LocalRule rule = resolve_rule(rule_spec);
            Configuration c = Configuration::from_string(config_str);
            if (c.size() % 2 == 0 && !allow_even) {
                std::cerr << "classify: even lattice size " << c.size()
                          << " makes the parity problem ill-defined; pass --allow-even to inspect it anyway\n";
                return 2;
            }
            std::cout << outcome_line(classify(rule, c, budget_for(c.size()))) << '\n';
            return 0;
        }

        if (verify_cmd->parsed()) {
            LocalRule rule = resolve_rule(rule_spec);
            VerifyOptions opts;
            opts.budget = max_steps ? StepBudget{0, max_steps} : StepBudget{factor, 0};
            opts.jobs = jobs;
            opts.allow_even = allow_even;
            auto sizes = parse_sizes(sizes_csv);
            for (std::size_t n : sizes) {
                if (n % 2 == 0 && !allow_even) {
                    std::cerr << "verify: even lattice size " << n
                              << " makes the parity problem ill-defined; pass --allow-even to inspect it anyway\n";
                    return 2;
                }
            }
            VerifyReport report = verify_perfect(rule, sizes, opts);
            for (const auto& size_report : report.sizes)
                std::cout << format_report_line(size_report) << '\n';
            return report.all_pass ? 0 : 1;
        }

        if (cert_cmd->parsed()) {
            LocalRule rule = resolve_rule(rule_spec);
            DeBruijnGraph graph = build_debruijn(rule);
            if (dump_graph) {
                write_edge_list(graph, std::cout);
                return 0;
            }
            CertifyResult result = certify_pairwise_parity(graph);
            if (result.certified) {
                std::string bits(result.potential.size(), '0');
                for (std::size_t i = 0; i < result.potential.size(); ++i)
                    if (result.potential[i]) bits[i] = '1';
                std::cout << "certified\npotential=" << bits << '\n';
                return 0;
            }
            const CycleWitness& walk = *result.witness;
            std::cout << "refuted length=" << walk.length() << " active_weight=" << walk.weight
                      << "\ncycle=";
            for (std::size_t i = 0; i < walk.nodes.size(); ++i)
                std::cout << (i ? " " : "") << graph.node_name(walk.nodes[i]);
            std::cout << '\n';
            return 1;
        }

        if (pre_cmd->parsed()) {
            LocalRule rule = resolve_rule(rule_spec);
            for (const auto& c : preimage_necklaces(rule, target, length))
                std::cout << c.str() << '\n';
            return 0;
        }

        if (tables_cmd->parsed()) {
            CycleTables tables = r2_cycle_tables();
            auto print = [](const char* label, const std::vector<std::string>& list) {
                std::cout << label;
                for (const auto& s : list) std::cout << ' ' << s;
                std::cout << '\n';
            };
            print("1-pre-images n=5:", tables.one_pre_5);
            print("0-pre-images n=5:", tables.zero_pre_5);
            print("1-pre-images n=7:", tables.one_pre_7);
            print("0-pre-images n=7:", tables.zero_pre_7);
            return 0;
        }

        if (r1_cmd->parsed()) {
            auto reports = radius1_eliminate();
            for (const auto& report : reports)
                std::cout << format_candidate_line(report) << '\n';
            std::cout << "candidates=" << reports.size() << '\n';
            return 0;
        }

        if (r2_cmd->parsed()) {
            auto reports = r2_enumerate_candidates({prime_only, jobs});
            for (const auto& report : reports)
                std::cout << format_candidate_line(report) << '\n';
            std::cout << "candidates=" << reports.size() << '\n';
            return 0;
        }

        if (st_cmd->parsed()) {
            LocalRule rule = resolve_rule(rule_spec);
            Configuration c = Configuration::from_string(config_str);
            std::vector<std::string> rows;
            rows.reserve(steps + 1);
            rows.push_back(c.str());
            for (std::uint64_t t = 0; t < steps; ++t) {
                c = step(rule, c);
                rows.push_back(c.str());
            }
            if (format == "pbm") {
                // P1 text bitmap: 1 = black = cell state 1, top row first
                std::cout << "P1\n" << rows.front().size() << ' ' << rows.size() << '\n';
                for (const auto& row : rows) {
                    for (std::size_t i = 0; i < row.size(); ++i)
                        std::cout << (i ? " " : "") << row[i];
                    std::cout << '\n';
                }
            } else {
                for (const auto& row : rows) {
                    std::string line = row;
                    for (char& ch : line) ch = (ch == '1') ? '#' : '.';
                    std::cout << line << '\n';
                }
            }
            return 0;
        }
    } catch (const escalation_error& e) {
        std::cerr << "escalation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
