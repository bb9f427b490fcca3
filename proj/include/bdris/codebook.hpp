#pragma once

#include <string>
#include <vector>

#include "bdris/linalg.hpp"
#include "bdris/rng.hpp"

namespace bdris {

/// Dimensions of the system and the group-connected BD-RIS architecture:
/// N BS antennas, M RIS ports uniformly split into G groups of M_bar ports.
struct GroupTopology {
    int n_bs = 1;   ///< N, BS antenna count
    int m = 1;      ///< M, total RIS port count (= g * m_bar)
    int g = 1;      ///< G, group count
    int m_bar = 1;  ///< M_bar, ports per group

    GroupTopology() = default;

    /// Throws std::invalid_argument unless all counts are >= 1.
    GroupTopology(int n_bs_, int g_, int m_bar_);

    /// Minimum training length T^min = G * M_bar^2.
    int training_length() const { return g * m_bar * m_bar; }
};

/// Orthogonal base used for the training matrix. Dft and Hadamard realize the
/// MSE-optimal construction; RandomUnitary is the Monte Carlo baseline.
enum class BaseKind { Dft, Hadamard, RandomUnitary };

std::string to_string(BaseKind kind);
BaseKind base_kind_from_string(const std::string& name);

/// Training matrix Phi_hat (G*M_bar^2 x T): column t stacks
/// vec(Phi_{t,1}),...,vec(Phi_{t,G}), the vectorized per-slot scattering
/// blocks. Immutable after construction.
struct TrainingCodebook {
    GroupTopology topology;
    int t_slots = 0;   ///< training length T (always G * M_bar^2 here)
    CMatrix phi_hat;   ///< G*M_bar^2 x T
    BaseKind kind = BaseKind::Dft;
    double alpha1 = 1.0;  ///< scaling of the first base (Z1^H Z1 = alpha1 I)
    double alpha2 = 1.0;  ///< scaling of the second base (Z2^H Z2 = alpha2 I)

    /// Structural identifier, e.g. "dft:G=16,Mbar=2,T=64".
    std::string describe() const;
};

/// G x G group-level base X with X X^H = G I and unit-modulus entries.
/// kind must be Dft or Hadamard; Hadamard requires a power-of-two order.
CMatrix build_group_base(int g, BaseKind kind);

/// M_bar^2 x M_bar^2 block-level base Phi_bar from two scaled-unitary bases:
/// column (m-1)*M_bar + n is
///   circshift(vec(z1), (n-1)*M_bar) hadamard ([z2]_{:,m} kron ones(M_bar)).
/// Requires z1^H z1 = alpha1 I, z2^H z2 = alpha2 I with constant entry
/// modulus sqrt(alpha2/M_bar), and alpha1*alpha2 = M_bar. Throws
/// std::invalid_argument naming the violated condition.
CMatrix build_phibar(int m_bar, const CMatrix& z1, const CMatrix& z2);

/// MSE-optimal codebook Phi_hat = X kron Phi_bar with T = G*M_bar^2, built
/// from DFT or Hadamard bases (z1 = B, z2 = B/sqrt(M_bar), so alpha1 = M_bar
/// and alpha2 = 1). kind must be Dft or Hadamard.
TrainingCodebook build_codebook(const GroupTopology& top, BaseKind kind);

/// Haar-uniform n x n unitary: QR of a standard complex Gaussian matrix with
/// the R-diagonal phase correction.
CMatrix haar_unitary(int n, Rng& rng);

/// Baseline codebook: T = G*M_bar^2 columns, every per-slot block drawn
/// independently Haar-uniform on U(M_bar). Block unitarity holds by
/// construction; the Gram identity generally does not.
TrainingCodebook random_codebook(const GroupTopology& top, Rng& rng);

/// The G per-group scattering blocks Phi_{t,g} of training slot t (1-based,
/// 1 <= slot <= T). Throws std::out_of_range otherwise.
std::vector<CMatrix> slot_matrices(const TrainingCodebook& cb, int slot);

/// tr((Phi_hat Phi_hat^H)^-1) via a Hermitian solve. Throws
/// std::runtime_error if the Gram matrix is numerically rank deficient
/// (reciprocal condition below 1e-12).
double codebook_mse_factor(const TrainingCodebook& cb);

/// Max over slots and groups of max-abs entry of (Phi^H Phi - I): the
/// per-block unitarity constraint.
double max_block_unitarity_violation(const TrainingCodebook& cb);

/// Max-abs entry of (Phi_hat Phi_hat^H - M I), the row-Gram identity of the
/// optimal construction. With `columns` set, checks Phi_hat^H Phi_hat - M I
/// instead.
double max_gram_identity_violation(const TrainingCodebook& cb, bool columns = false);

}  // namespace bdris
