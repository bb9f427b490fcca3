#pragma once

#include <optional>
#include <string>

#include "bdris/channel.hpp"
#include "bdris/codebook.hpp"
#include "bdris/linalg.hpp"
#include "bdris/rng.hpp"

namespace bdris {

/// Stacked received pilots Y (N x T) from one training phase.
struct TrainingObservation {
    CMatrix y;
    std::string codebook_ref;  ///< TrainingCodebook::describe() of the codebook used
    double tx_power_w = 0.0;
};

/// One (power, architecture, strategy) result row of an MSE sweep.
struct MseRecord {
    double tx_power_dbm = 0.0;
    int g = 0;
    int m_bar = 0;
    BaseKind strategy = BaseKind::Dft;
    double empirical_mse = 0.0;
    double theoretical_mse = 0.0;
    double lower_bound = 0.0;
    int n_trials = 0;
};

/// Uplink training: Y = sqrt(P_u) Q Phi_hat + N with noise entries i.i.d.
/// CN(0, noise_power). Pilot symbols are fixed to 1 and absorbed into
/// Phi_hat.
TrainingObservation simulate_training(const CascadedChannel& q, const TrainingCodebook& cb,
                                      const LinkBudget& lb, Rng& rng);

enum class LsPath {
    Auto,     ///< inversion-free Phi_hat^H / M for Dft/Hadamard, solve otherwise
    General,  ///< always the Hermitian solve
};

/// Right pseudoinverse Phi_hat^H (Phi_hat Phi_hat^H)^-1 of the training
/// matrix. For Dft/Hadamard codebooks the Auto path returns Phi_hat^H / M
/// without any inversion. Throws std::runtime_error on rank deficiency.
CMatrix codebook_pseudoinverse(const TrainingCodebook& cb, LsPath path = LsPath::Auto);

/// LS estimate Q_hat = (sqrt(P_u))^-1 Y Phi_hat^+. Throws
/// std::invalid_argument if the observation was not generated with `cb`.
CascadedChannel ls_estimate(const TrainingObservation& obs, const TrainingCodebook& cb,
                            LsPath path = LsPath::Auto);

/// Closed-form LS MSE (N sigma^2 / P_u) tr((Phi_hat Phi_hat^H)^-1).
double theoretical_mse(const TrainingCodebook& cb, const LinkBudget& lb, int n_bs);

/// MSE lower bound e^min = (N sigma^2 / P_u) M_bar, met exactly by the
/// Dft/Hadamard construction.
double mse_lower_bound(const GroupTopology& top, const LinkBudget& lb);

/// Monte Carlo MSE: averages ||Q_hat - Q||_F^2 over n_trials independent
/// (channel, noise) draws, trial i seeded from trial_seeds.child(i). Fills
/// every MseRecord field. `mse_factor`, when provided, must equal
/// codebook_mse_factor(cb) and skips recomputing the Hermitian solve.
MseRecord empirical_mse(const GroupTopology& top, const LinkBudget& lb,
                        const TrainingCodebook& cb, int n_trials, const Rng& trial_seeds,
                        std::optional<double> mse_factor = std::nullopt);

}  // namespace bdris
