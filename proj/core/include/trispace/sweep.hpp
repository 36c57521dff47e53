#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trispace/trial.hpp"

namespace trispace {

/// Sweep grid: p = c * sqrt(ln n / n) per (n, c) cell, `trials` seeded
/// trials per cell.
struct SweepConfig {
    std::vector<int> n_list;
    std::vector<double> c_list;
    int trials = 0;
    std::uint64_t seed = 0;
    std::optional<double> theta;  // two-round exposure fraction
    std::string out_dir;
};

/// Flat key=value text; keys n_list, c_list, trials, seed, theta (optional),
/// out_dir. Lists are comma-separated. Blank lines and lines starting with
/// '#' are skipped; unknown keys are rejected.
SweepConfig parse_sweep_config(std::istream& is);
SweepConfig parse_sweep_config_text(const std::string& text);

struct CellSummary {
    int n = 0;
    double c = 0, p = 0;
    int trials = 0;
    double p_q = 0;          // empirical P(every edge in a triangle)
    double p_t_eq_c = 0;     // empirical P(dim T == dim C)
    double p_q_and_neq = 0;  // empirical P(Q and betti1 > 0)
    double mean_betti1 = 0;
    double mu_analytic = 0;  // C(n,2) p (1-p^2)^(n-2)
    double exp_neg_mu = 0;
};

struct SweepResult {
    std::vector<TrialRecord> records;  // sorted by (n index, c index, trial)
    std::vector<CellSummary> cells;
};

/// Runs all (n, c, trial) cells on `workers` threads. Per-trial seeds are
/// trial_seed(master, n index, c index, trial index), so the record set is
/// independent of scheduling. `on_record` (optional) is invoked as trials
/// complete, possibly out of order, under an internal lock.
SweepResult run_sweep(const SweepConfig& config, int workers,
                      const std::function<void(const TrialRecord&)>& on_record = {});

void write_records_jsonl(std::ostream& os, const std::vector<TrialRecord>& records);
void write_summary_csv(std::ostream& os, const std::vector<CellSummary>& cells);

/// run_sweep plus output files: <out_dir>/records.jsonl and
/// <out_dir>/summary.csv, both written only after every cell completes.
SweepResult run_sweep_to_dir(const SweepConfig& config, int workers,
                             const std::function<void(const TrialRecord&)>& on_record = {});

}  // namespace trispace
