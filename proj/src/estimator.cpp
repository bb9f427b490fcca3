#include "bdris/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bdris {

namespace {

constexpr double kRcondFloor = 1e-12;
constexpr int kTrialBatch = 64;  // trials stacked per GEMM in empirical_mse

CMatrix draw_noise(Index rows, Index cols, double variance, Rng& rng) {
    CMatrix n(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            n(i, j) = rng.cnormal(variance);
        }
    }
    return n;
}

}  // namespace

TrainingObservation simulate_training(const CascadedChannel& q, const TrainingCodebook& cb,
                                      const LinkBudget& lb, Rng& rng) {
    if (q.q.cols() != cb.phi_hat.rows()) {
        throw std::invalid_argument("simulate_training: cascaded channel width " +
                                    std::to_string(q.q.cols()) + " does not match codebook rows " +
                                    std::to_string(cb.phi_hat.rows()));
    }
    TrainingObservation obs;
    obs.codebook_ref = cb.describe();
    obs.tx_power_w = lb.tx_power_w();
    obs.y = std::sqrt(obs.tx_power_w) * q.q * cb.phi_hat;
    const double sigma2 = lb.noise_power_w();
    if (sigma2 > 0.0) {
        obs.y += draw_noise(obs.y.rows(), obs.y.cols(), sigma2, rng);
    }
    return obs;
}

CMatrix codebook_pseudoinverse(const TrainingCodebook& cb, LsPath path) {
    if (path == LsPath::Auto &&
        (cb.kind == BaseKind::Dft || cb.kind == BaseKind::Hadamard)) {
        // Phi_hat Phi_hat^H = M I for the optimal construction, so the
        // pseudoinverse is Phi_hat^H / M: no inversion needed.
        return cb.phi_hat.adjoint() / static_cast<double>(cb.topology.m);
    }
    const CMatrix gram = cb.phi_hat * cb.phi_hat.adjoint();
    Eigen::LDLT<CMatrix> ldlt(gram);
    if (ldlt.info() != Eigen::Success || ldlt.rcond() < kRcondFloor) {
        throw std::runtime_error("codebook_pseudoinverse: training matrix is rank deficient "
                                 "(Gram condition number exceeds 1e12)");
    }
    // Phi_hat^H (Phi_hat Phi_hat^H)^-1 = ((Phi_hat Phi_hat^H)^-1 Phi_hat)^H
    return ldlt.solve(cb.phi_hat).adjoint();
}

CascadedChannel ls_estimate(const TrainingObservation& obs, const TrainingCodebook& cb,
                            LsPath path) {
    if (obs.codebook_ref != cb.describe()) {
        throw std::invalid_argument("ls_estimate: observation was generated with codebook '" +
                                    obs.codebook_ref + "', not '" + cb.describe() + "'");
    }
    if (obs.y.cols() != cb.t_slots) {
        throw std::invalid_argument("ls_estimate: observation has " +
                                    std::to_string(obs.y.cols()) + " slots, codebook expects " +
                                    std::to_string(cb.t_slots));
    }
    CascadedChannel est;
    est.q = obs.y * codebook_pseudoinverse(cb, path) / std::sqrt(obs.tx_power_w);
    return est;
}

double theoretical_mse(const TrainingCodebook& cb, const LinkBudget& lb, int n_bs) {
    return n_bs * lb.noise_power_w() / lb.tx_power_w() * codebook_mse_factor(cb);
}

double mse_lower_bound(const GroupTopology& top, const LinkBudget& lb) {
    return top.n_bs * lb.noise_power_w() / lb.tx_power_w() * top.m_bar;
}

MseRecord empirical_mse(const GroupTopology& top, const LinkBudget& lb,
                        const TrainingCodebook& cb, int n_trials, const Rng& trial_seeds,
                        std::optional<double> mse_factor) {
    if (n_trials < 1) {
        throw std::invalid_argument("empirical_mse: n_trials must be >= 1");
    }
    if (cb.topology.g != top.g || cb.topology.m_bar != top.m_bar) {
        throw std::invalid_argument("empirical_mse: codebook was built for a different topology");
    }

    const Index n = top.n_bs;
    const Index width = cb.phi_hat.rows();  // G * M_bar^2
    const Index t_slots = cb.t_slots;
    const double sqrt_pu = std::sqrt(lb.tx_power_w());
    const double sigma2 = lb.noise_power_w();
    const CMatrix pinv = codebook_pseudoinverse(cb);

    double total_sq_err = 0.0;
    CMatrix q_stack(kTrialBatch * n, width);
    CMatrix y_stack(kTrialBatch * n, t_slots);
    for (int start = 0; start < n_trials; start += kTrialBatch) {
        const int batch = std::min(kTrialBatch, n_trials - start);
        for (int i = 0; i < batch; ++i) {
            Rng trial_rng = trial_seeds.child(static_cast<std::uint64_t>(start + i));
            const ChannelRealization ch = draw_channels(top, lb, trial_rng);
            q_stack.middleRows(i * n, n) = cascade(top, ch).q;
            if (sigma2 > 0.0) {
                y_stack.middleRows(i * n, n) = draw_noise(n, t_slots, sigma2, trial_rng);
            } else {
                y_stack.middleRows(i * n, n).setZero();
            }
        }
        auto q_rows = q_stack.topRows(batch * n);
        auto y_rows = y_stack.topRows(batch * n);
        y_rows.noalias() += sqrt_pu * q_rows * cb.phi_hat;
        const CMatrix est = y_rows * pinv / sqrt_pu;
        total_sq_err += (est - q_rows).squaredNorm();
    }

    MseRecord rec;
    rec.tx_power_dbm = lb.tx_power_dbm;
    rec.g = top.g;
    rec.m_bar = top.m_bar;
    rec.strategy = cb.kind;
    rec.empirical_mse = total_sq_err / n_trials;
    rec.theoretical_mse =
        n * sigma2 / lb.tx_power_w() * (mse_factor ? *mse_factor : codebook_mse_factor(cb));
    rec.lower_bound = mse_lower_bound(top, lb);
    rec.n_trials = n_trials;
    return rec;
}

}  // namespace bdris
