#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bdris/channel.hpp"
#include "bdris/codebook.hpp"
#include "bdris/estimator.hpp"

namespace bdris {

/// Invalid experiment configuration; the message names the offending field.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inclusive dBm power sweep.
struct PowerSweep {
    double start_dbm = 0.0;
    double stop_dbm = 50.0;
    double step_db = 5.0;

    std::vector<double> points() const;
};

/// Full description of one MSE-versus-power experiment.
struct ExperimentConfig {
    int n_bs = 4;
    std::vector<std::pair<int, int>> architectures = {{32, 1}, {16, 2}, {1, 32}};  ///< (G, M_bar)
    std::vector<BaseKind> strategies = {BaseKind::Dft, BaseKind::Hadamard,
                                        BaseKind::RandomUnitary};
    PowerSweep powers;
    LinkBudget link;  ///< tx_power_dbm is overwritten per sweep point
    int n_trials = 1000;
    std::uint64_t master_seed = 1;
    std::string out_path = "mse_sweep.csv";
};

/// Throws ConfigError naming the first invalid field.
void validate_config(const ExperimentConfig& cfg);

/// Parses a flat key=value config file ('#' starts a comment; arch and
/// strategy keys repeat or take comma-separated lists). Unknown keys throw
/// ConfigError. Starts from `base` so CLI defaults survive.
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

/// Parses "GxM_bar", e.g. "16x2".
std::pair<int, int> parse_arch(const std::string& text);

/// Parses "start:stop:step" in dBm.
PowerSweep parse_powers(const std::string& text);

/// Runs the full sweep: one MseRecord per (power, architecture, strategy)
/// triple, in that loop order, each carrying the theoretical MSE and the
/// lower-bound curve value. Deterministic given cfg.master_seed.
std::vector<MseRecord> run_sweep(const ExperimentConfig& cfg);

/// CSV rows under the header
/// power_dbm,G,M_bar,strategy,empirical_mse,theoretical_mse,lower_bound,n_trials
/// with floating-point fields printed to 10 significant digits.
std::string mse_csv_string(const std::vector<MseRecord>& records);
void write_mse_csv(const std::vector<MseRecord>& records, const std::string& path);

/// Training overhead of a topology: T^min = G*M_bar^2 slots and the MSE
/// multiplier M_bar of the lower bound.
struct OverheadReport {
    long t_min = 0;
    double e_min_factor = 0.0;
};
OverheadReport report_overhead(const GroupTopology& top);

/// One validated constraint of a codebook.
struct ValidationCheck {
    std::string name;
    double violation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Constraint-validator output for a codebook: per-constraint max-abs
/// violations, informational notes, and the measured MSE factor.
struct ValidationReport {
    std::string codebook;
    std::vector<ValidationCheck> checks;
    std::vector<std::string> notes;
    double mse_factor = 0.0;
    bool ok = false;

    std::string text() const;
};

/// Runs the constraint validators (per-block unitarity for every kind; the
/// row/column Gram identities for Dft/Hadamard) plus a full-rank check.
ValidationReport validate_codebook_report(const TrainingCodebook& cb, double tol = kDefaultTol);

}  // namespace bdris
