// Command-line driver: figure-data emission (CSV/JSON), the verification
// suite, single-point queries, and seeded Monte Carlo runs.

#include "qid/haar.hpp"
#include "qid/minerr.hpp"
#include "qid/scenarios.hpp"
#include "qid/unamb.hpp"
#include "qid/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::uint64_t parse_seed(const std::string& text) {
    std::size_t pos = 0;
    const std::string body =
        text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0 ? text.substr(2) : text;
    const std::uint64_t value = std::stoull(body, &pos, 16);
    if (pos != body.size()) throw std::invalid_argument("trailing characters");
    return value;
}

int write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    file << content;
    file.flush();
    if (!file) {
        std::cerr << "error: could not write " << out_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
};

std::string table_to_csv(const Table& table) {
    std::ostringstream os;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) os << ',';
        os << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            if (row[c]) os << fmt12(*row[c]);
        }
        os << '\n';
    }
    return os.str();
}

std::string table_to_json(const Table& table, ordered_json parameters) {
    ordered_json doc;
    doc["parameters"] = std::move(parameters);
    doc["columns"] = table.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json r = ordered_json::array();
        for (const auto& cell : row) {
            if (cell) {
                r.push_back(*cell);
            } else {
                r.push_back(nullptr);
            }
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

int run_figure(int id, const std::vector<std::size_t>& d_list,
               const std::vector<std::size_t>& n_list, std::size_t grid,
               const std::string& format, const std::string& out_path) {
    Table table;
    if (id == 1 || id == 2) {
        table.columns.push_back("eta1");
        for (std::size_t d : d_list) {
            table.columns.push_back((id == 1 ? "pc_one_known_d" : "ps_one_known_d") +
                                    std::to_string(d));
        }
        for (std::size_t d : d_list) {
            table.columns.push_back(
                (id == 1 ? "pc_two_unknown_d" : "ps_two_unknown_d") +
                std::to_string(d));
        }
        for (std::size_t i = 0; i < grid; ++i) {
            const double eta1 =
                static_cast<double>(i) / static_cast<double>(grid - 1);
            std::vector<std::optional<double>> row{eta1};
            for (std::size_t d : d_list) {
                row.push_back(id == 1 ? qid::pc_one_known(d, eta1)
                                      : qid::ps_one_known(d, eta1));
            }
            for (std::size_t d : d_list) {
                row.push_back(id == 1 ? qid::pc_two_unknown(d, eta1)
                                      : qid::ps_two_unknown(d, eta1));
            }
            table.rows.push_back(std::move(row));
        }
    } else {
        table.columns.push_back("d");
        for (std::size_t n : n_list) {
            table.columns.push_back("ps_n_states_N" + std::to_string(n));
        }
        std::size_t d_max = 0;
        for (std::size_t d : d_list) d_max = std::max(d_max, d);
        std::size_t d_min = *std::min_element(n_list.begin(), n_list.end());
        for (std::size_t d = d_min; d <= d_max; ++d) {
            std::vector<std::optional<double>> row{static_cast<double>(d)};
            for (std::size_t n : n_list) {
                if (d >= n) {
                    row.push_back(qid::ps_n_states(n, d));
                } else {
                    row.push_back(std::nullopt);
                }
            }
            table.rows.push_back(std::move(row));
        }
    }

    if (format == "csv") {
        return write_output(table_to_csv(table), out_path);
    }
    ordered_json params;
    params["command"] = "figure";
    params["id"] = id;
    params["d"] = d_list;
    params["n"] = n_list;
    params["grid"] = grid;
    return write_output(table_to_json(table, std::move(params)), out_path);
}

int run_verify(const std::string& level_name, std::uint64_t seed) {
    const qid::VerifyLevel level = level_name == "full" ? qid::VerifyLevel::Full
                                                        : qid::VerifyLevel::Quick;
    const std::vector<qid::CheckResult> checks = qid::run_checks(level, seed);
    std::size_t failures = 0;
    for (const auto& c : checks) {
        if (!c.passed) ++failures;
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name
                  << " (observed=" << fmt12(c.observed)
                  << ", tol=" << fmt12(c.tolerance) << ")\n";
    }
    std::cout << checks.size() - failures << "/" << checks.size()
              << " checks passed (level " << level_name << ", seed 0x" << std::hex
              << seed << std::dec << ")\n";
    return failures == 0 ? kExitOk : kExitVerifyFailure;
}

std::string one_known_unamb_branch(std::size_t d, double eta1) {
    const double dd = static_cast<double>(d);
    if (eta1 <= 1.0 / (dd + 2.0)) return "upper";
    if (eta1 <= 4.0 / (dd + 5.0)) return "middle";
    return "lower";
}

std::string two_unknown_unamb_branch(double eta1) {
    if (eta1 <= 0.2) return "upper";
    if (eta1 >= 0.8) return "lower";
    return "middle";
}

int run_point(const std::string& scenario, std::size_t d, double eta1,
              std::size_t n) {
    std::ostringstream os;
    if (scenario == "one-known-minerr") {
        const double closed = qid::pc_one_known(d, eta1);
        const double oracle = qid::pc_oracle_reduced(qid::Scenario::one_known(d, eta1));
        os << "scenario: one-known-minerr\nd: " << d << "\neta1: " << fmt12(eta1)
           << "\nclosed: " << fmt12(closed) << "\noracle: " << fmt12(oracle)
           << "\ndiff: " << fmt12(std::abs(closed - oracle)) << "\n";
    } else if (scenario == "two-unknown-minerr") {
        const double closed = qid::pc_two_unknown(d, eta1);
        const double oracle =
            qid::pc_oracle_reduced(qid::Scenario::two_unknown(d, eta1));
        os << "scenario: two-unknown-minerr\nd: " << d << "\neta1: " << fmt12(eta1)
           << "\nclosed: " << fmt12(closed) << "\noracle: " << fmt12(oracle)
           << "\ndiff: " << fmt12(std::abs(closed - oracle)) << "\n";
    } else if (scenario == "one-known-unamb") {
        const double closed = qid::ps_one_known(d, eta1);
        const qid::UnambiguousMeasurement meas = qid::one_known_measurement(d, eta1);
        os << "scenario: one-known-unamb\nd: " << d << "\neta1: " << fmt12(eta1)
           << "\nclosed: " << fmt12(closed)
           << "\nbranch: " << one_known_unamb_branch(d, eta1)
           << "\nalpha1: " << fmt12(meas.alpha1)
           << "\nalpha2: " << fmt12(meas.alpha2) << "\n";
    } else if (scenario == "two-unknown-unamb") {
        const double closed = qid::ps_two_unknown(d, eta1);
        const qid::UnambiguousMeasurement meas = qid::two_unknown_measurement(eta1);
        os << "scenario: two-unknown-unamb\nd: " << d << "\neta1: " << fmt12(eta1)
           << "\nclosed: " << fmt12(closed)
           << "\nbranch: " << two_unknown_unamb_branch(eta1)
           << "\nalpha1: " << fmt12(meas.alpha1)
           << "\nalpha2: " << fmt12(meas.alpha2) << "\n";
    } else {  // n-state
        if (d < n) {
            std::cerr << "error: n-state identification needs d >= N\n";
            return kExitUsage;
        }
        os << "scenario: n-state\nN: " << n << "\nd: " << d
           << "\nclosed: " << fmt12(qid::ps_n_states(n, d)) << "\n";
    }
    std::cout << os.str();
    return kExitOk;
}

int run_montecarlo(const std::string& scenario, std::size_t d, double eta1,
                   std::size_t n, std::uint64_t samples, std::uint64_t seed) {
    double closed = 0.0;
    qid::MonteCarloReport report;
    if (scenario == "one-known-minerr") {
        closed = qid::pc_one_known(d, eta1);
        report = qid::mc_minerr(qid::Scenario::one_known(d, eta1), samples, seed);
    } else if (scenario == "two-unknown-minerr") {
        closed = qid::pc_two_unknown(d, eta1);
        report = qid::mc_minerr(qid::Scenario::two_unknown(d, eta1), samples, seed);
    } else if (scenario == "one-known-unamb") {
        closed = qid::ps_one_known(d, eta1);
        report = qid::mc_unamb(qid::Scenario::one_known(d, eta1),
                               qid::one_known_measurement(d, eta1), samples, seed);
    } else if (scenario == "two-unknown-unamb") {
        closed = qid::ps_two_unknown(d, eta1);
        report = qid::mc_unamb(qid::Scenario::two_unknown(d, eta1),
                               qid::two_unknown_measurement(eta1), samples, seed);
    } else {  // n-state
        if (d < n) {
            std::cerr << "error: n-state identification needs d >= N\n";
            return kExitUsage;
        }
        closed = qid::ps_n_states(n, d);
        report = qid::mc_unamb(qid::Scenario::n_unknown(n, d),
                               qid::n_states_measurement(n), samples, seed);
    }
    const double sigmas = report.std_error > 0.0
                              ? std::abs(report.estimate - closed) / report.std_error
                              : 0.0;
    std::cout << "scenario: " << scenario << "\nestimate: " << fmt12(report.estimate)
              << "\nstd_error: " << fmt12(report.std_error)
              << "\nclosed: " << fmt12(closed) << "\nsigmas: " << fmt12(sigmas)
              << "\nsamples: " << report.samples << "\nseed: 0x" << std::hex
              << report.seed << std::dec << "\n";
    return kExitOk;
}

int run_moments(std::size_t d, std::uint64_t samples, std::uint64_t seed) {
    const auto line = [](const std::string& name, const qid::MonteCarloReport& rep,
                         double exact) {
        std::cout << name << ": estimate=" << fmt12(rep.estimate)
                  << " std_error=" << fmt12(rep.std_error)
                  << " exact=" << fmt12(exact) << "\n";
    };
    const qid::MonteCarloReport second = qid::estimate_mean(
        [d](qid::Rng& rng) {
            return std::norm(qid::sample_pure_state(d, rng).amplitudes[0]);
        },
        samples, qid::mix_seed(seed, 0));
    line("overlap2", second, qid::moment_overlap2(d));
    const qid::MonteCarloReport fourth = qid::estimate_mean(
        [d](qid::Rng& rng) {
            const double p = std::norm(qid::sample_pure_state(d, rng).amplitudes[0]);
            return p * p;
        },
        samples, qid::mix_seed(seed, 1));
    line("overlap4", fourth, qid::moment_overlap4(d));
    for (std::size_t j = 2; j <= std::min<std::size_t>(d, 4); ++j) {
        const qid::MonteCarloReport res = qid::estimate_mean(
            [d, j](qid::Rng& rng) {
                std::vector<qid::PureState> states;
                for (std::size_t i = 0; i < j; ++i) {
                    states.push_back(qid::sample_pure_state(d, rng));
                }
                return qid::gram_schmidt(states).residuals[j - 1];
            },
            samples, qid::mix_seed(seed, 1 + j));
        line("residual_j" + std::to_string(j), res, qid::moment_residual(j, d));
    }
    std::cout << "samples: " << samples << "\nseed: 0x" << std::hex << seed
              << std::dec << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal identification of qudit-encoded pure states"};
    app.require_subcommand(1);

    const std::vector<std::string> scenario_names{
        "one-known-minerr", "two-unknown-minerr", "one-known-unamb",
        "two-unknown-unamb", "n-state"};

    // figure
    auto* fig = app.add_subcommand("figure", "Emit curve data as CSV or JSON");
    int fig_id = 0;
    std::vector<std::size_t> fig_d{2, 3, 5, 10};
    std::vector<std::size_t> fig_n{3, 4};
    std::size_t fig_grid = 201;
    std::string fig_out;
    std::string fig_format = "csv";
    fig->add_option("--id", fig_id, "Figure id")->required()->check(CLI::Range(1, 3));
    fig->add_option("--d", fig_d, "Qudit dimensions")->delimiter(',');
    fig->add_option("--n", fig_n, "State counts for the N-state figure")
        ->delimiter(',');
    fig->add_option("--grid", fig_grid, "Grid points over eta1 in [0,1]")
        ->check(CLI::Range(2, 100000));
    fig->add_option("--out", fig_out, "Output path (default stdout)");
    fig->add_option("--format", fig_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* ver = app.add_subcommand("verify", "Run the verification suite");
    std::string ver_level = "quick";
    std::string ver_seed = "5EED";
    ver->add_option("--level", ver_level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    ver->add_option("--seed", ver_seed, "Hex seed");

    // point
    auto* pt = app.add_subcommand("point", "Evaluate one scenario point");
    std::string pt_scenario;
    std::size_t pt_d = 2;
    double pt_eta1 = 0.5;
    std::size_t pt_n = 2;
    pt->add_option("--scenario", pt_scenario)
        ->required()
        ->check(CLI::IsMember(scenario_names));
    pt->add_option("--d", pt_d)->required()->check(CLI::Range(2, 1000000));
    pt->add_option("--eta1", pt_eta1)->check(CLI::Range(0.0, 1.0));
    pt->add_option("--n", pt_n)->check(CLI::Range(2, 5));

    // montecarlo
    auto* mc = app.add_subcommand("montecarlo", "Seeded Monte Carlo estimate");
    std::string mc_scenario;
    std::size_t mc_d = 2;
    double mc_eta1 = 0.5;
    std::size_t mc_n = 2;
    std::size_t mc_samples = 100000;
    std::string mc_seed = "5EED";
    mc->add_option("--scenario", mc_scenario)
        ->required()
        ->check(CLI::IsMember(scenario_names));
    mc->add_option("--d", mc_d)->required()->check(CLI::Range(2, 64));
    mc->add_option("--eta1", mc_eta1)->check(CLI::Range(0.0, 1.0));
    mc->add_option("--n", mc_n)->check(CLI::Range(2, 4));
    mc->add_option("--samples", mc_samples)->check(CLI::Range(2, 100000000));
    mc->add_option("--seed", mc_seed, "Hex seed");

    // moments
    auto* mo = app.add_subcommand("moments", "Haar moment estimates");
    std::size_t mo_d = 2;
    std::size_t mo_samples = 100000;
    std::string mo_seed = "5EED";
    mo->add_option("--d", mo_d)->required()->check(CLI::Range(2, 64));
    mo->add_option("--samples", mo_samples)->check(CLI::Range(2, 100000000));
    mo->add_option("--seed", mo_seed, "Hex seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (fig->parsed()) {
            return run_figure(fig_id, fig_d, fig_n, fig_grid, fig_format, fig_out);
        }
        if (ver->parsed()) return run_verify(ver_level, parse_seed(ver_seed));
        if (pt->parsed()) return run_point(pt_scenario, pt_d, pt_eta1, pt_n);
        if (mc->parsed()) {
            return run_montecarlo(mc_scenario, mc_d, mc_eta1, mc_n, mc_samples,
                                  parse_seed(mc_seed));
        }
        if (mo->parsed()) return run_moments(mo_d, mo_samples, parse_seed(mo_seed));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
