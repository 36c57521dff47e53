#include "trispace/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "trispace/bounds.hpp"
#include "trispace/rng.hpp"
#include "trispace/sample.hpp"

namespace trispace {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_config(const std::string& what) {
    throw std::invalid_argument("sweep config: " + what);
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& is) {
    SweepConfig cfg;
    bool saw_n = false, saw_c = false, saw_trials = false, saw_seed = false, saw_out = false;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) bad_config("line " + std::to_string(lineno) + " is not key=value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        try {
            if (key == "n_list") {
                for (const auto& part : split_commas(value)) cfg.n_list.push_back(std::stoi(trim(part)));
                saw_n = true;
            } else if (key == "c_list") {
                for (const auto& part : split_commas(value)) cfg.c_list.push_back(std::stod(trim(part)));
                saw_c = true;
            } else if (key == "trials") {
                cfg.trials = std::stoi(value);
                saw_trials = true;
            } else if (key == "seed") {
                cfg.seed = std::stoull(value);
                saw_seed = true;
            } else if (key == "theta") {
                cfg.theta = std::stod(value);
            } else if (key == "out_dir") {
                cfg.out_dir = value;
                saw_out = true;
            } else {
                bad_config("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            bad_config("bad value for key '" + key + "'");
        }
    }
    if (!saw_n) bad_config("missing key n_list");
    if (!saw_c) bad_config("missing key c_list");
    if (!saw_trials) bad_config("missing key trials");
    if (!saw_seed) bad_config("missing key seed");
    if (!saw_out) bad_config("missing key out_dir");
    for (int n : cfg.n_list)
        if (n < 1) bad_config("n values must be >= 1");
    for (double c : cfg.c_list)
        if (!(c > 0)) bad_config("c values must be > 0");
    if (cfg.trials < 1) bad_config("trials must be >= 1");
    if (cfg.theta && !(*cfg.theta > 0 && *cfg.theta < 1)) bad_config("theta must lie in (0,1)");
    return cfg;
}

SweepConfig parse_sweep_config_text(const std::string& text) {
    std::istringstream is(text);
    return parse_sweep_config(is);
}

SweepResult run_sweep(const SweepConfig& config, int workers,
                      const std::function<void(const TrialRecord&)>& on_record) {
    if (workers < 1) throw std::invalid_argument("run_sweep: workers must be >= 1");

    struct Task {
        std::size_t ni, ci;
        int trial;
    };
    std::vector<Task> tasks;
    for (std::size_t ni = 0; ni < config.n_list.size(); ++ni)
        for (std::size_t ci = 0; ci < config.c_list.size(); ++ci)
            for (int t = 0; t < config.trials; ++t) tasks.push_back({ni, ci, t});

    SweepResult result;
    result.records.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex sink_mutex;
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            try {
                const int n = config.n_list[task.ni];
                const double c = config.c_list[task.ci];
                const double p = threshold_p(n, c);
                const std::uint64_t seed = trial_seed(config.seed, task.ni, task.ci,
                                                      static_cast<std::uint64_t>(task.trial));
                TrialRecord rec;
                if (config.theta) {
                    if (n > 2000) throw std::invalid_argument("run_trial: resource guard, n must be <= 2000");
                    const TwoRound rounds = sample_two_round(n, p, *config.theta, seed);
                    rec = measure_graph(graph_union(rounds.g0, rounds.g1), c, p, seed);
                } else {
                    rec = run_trial_c(n, c, seed);
                }
                result.records[i] = rec;
                if (on_record) {
                    std::lock_guard<std::mutex> lock(sink_mutex);
                    on_record(rec);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(tasks.size());
                return;
            }
        }
    };

    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    // Records are already in (n index, c index, trial) order by construction.
    for (std::size_t ni = 0; ni < config.n_list.size(); ++ni) {
        for (std::size_t ci = 0; ci < config.c_list.size(); ++ci) {
            CellSummary cell;
            cell.n = config.n_list[ni];
            cell.c = config.c_list[ci];
            cell.p = threshold_p(cell.n, cell.c);
            cell.trials = config.trials;
            long long q_count = 0, teqc_count = 0, qneq_count = 0, betti_sum = 0;
            const std::size_t base = (ni * config.c_list.size() + ci) * static_cast<std::size_t>(config.trials);
            for (int t = 0; t < config.trials; ++t) {
                const TrialRecord& r = result.records[base + static_cast<std::size_t>(t)];
                q_count += r.q;
                teqc_count += r.betti1 == 0;
                qneq_count += r.q && r.betti1 > 0;
                betti_sum += r.betti1;
            }
            const double trials = static_cast<double>(config.trials);
            cell.p_q = static_cast<double>(q_count) / trials;
            cell.p_t_eq_c = static_cast<double>(teqc_count) / trials;
            cell.p_q_and_neq = static_cast<double>(qneq_count) / trials;
            cell.mean_betti1 = static_cast<double>(betti_sum) / trials;
            cell.mu_analytic = cell.n >= 2 ? mu_no_triangle(cell.n, cell.p) : 0.0;
            cell.exp_neg_mu = std::exp(-cell.mu_analytic);
            result.cells.push_back(cell);
        }
    }
    return result;
}

void write_records_jsonl(std::ostream& os, const std::vector<TrialRecord>& records) {
    for (const auto& r : records) os << to_json_line(r) << '\n';
}

namespace {

std::string sig6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

void write_summary_csv(std::ostream& os, const std::vector<CellSummary>& cells) {
    os << "n,c,p,trials,p_q,p_t_eq_c,p_q_and_neq,mean_betti1,mu_analytic,exp_neg_mu\n";
    for (const auto& cell : cells) {
        os << cell.n << ',' << sig6(cell.c) << ',' << sig6(cell.p) << ',' << cell.trials << ','
           << sig6(cell.p_q) << ',' << sig6(cell.p_t_eq_c) << ',' << sig6(cell.p_q_and_neq) << ','
           << sig6(cell.mean_betti1) << ',' << sig6(cell.mu_analytic) << ',' << sig6(cell.exp_neg_mu)
           << '\n';
    }
}

SweepResult run_sweep_to_dir(const SweepConfig& config, int workers,
                             const std::function<void(const TrialRecord&)>& on_record) {
    if (config.out_dir.empty()) throw std::invalid_argument("run_sweep_to_dir: out_dir is empty");
    SweepResult result = run_sweep(config, workers, on_record);

    std::filesystem::create_directories(config.out_dir);
    const auto records_path = std::filesystem::path(config.out_dir) / "records.jsonl";
    const auto summary_path = std::filesystem::path(config.out_dir) / "summary.csv";
    {
        std::ofstream os(records_path);
        if (!os) throw std::runtime_error("run_sweep_to_dir: cannot write " + records_path.string());
        write_records_jsonl(os, result.records);
    }
    {
        std::ofstream os(summary_path);
        if (!os) throw std::runtime_error("run_sweep_to_dir: cannot write " + summary_path.string());
        write_summary_csv(os, result.cells);
    }
    return result;
}

}  // namespace trispace
