#pragma once

#include <string>
#include <vector>

#include "bdris/codebook.hpp"
#include "bdris/linalg.hpp"
#include "bdris/rng.hpp"

namespace bdris {

/// dB power gain to linear.
inline double db_to_gain(double db) { return std::pow(10.0, db / 10.0); }

/// dBm to watts.
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

/// Pathloss, noise, and power parameters of the simulated link.
struct LinkBudget {
    double zeta0_db = -30.0;         ///< reference attenuation at d0 (dB)
    double d0_m = 1.0;               ///< reference distance (m)
    double d_bi_m = 50.0;            ///< BS-RIS distance (m)
    double d_iu_m = 10.0;            ///< RIS-user distance (m)
    double epsilon = 2.2;            ///< pathloss exponent
    double noise_power_dbm = -100.0; ///< noise power (dBm)
    double tx_power_dbm = 0.0;       ///< uplink transmit power (dBm)

    double noise_power_w() const { return dbm_to_watts(noise_power_dbm); }
    double tx_power_w() const { return dbm_to_watts(tx_power_dbm); }
};

enum class LinkId { BsRis, RisUser };

/// Distance-dependent linear power gain zeta = zeta0 * (d/d0)^(-epsilon).
double pathloss(const LinkBudget& lb, LinkId which);

/// One draw of the physical channels: G (RIS->BS, N x M) and h (user->RIS,
/// M x 1).
struct ChannelRealization {
    CMatrix g_mat;
    CVector h_vec;
};

/// Cascaded channel Q = [Q_1,...,Q_G], N x G*M_bar^2, with
/// Q_g = h_g^T kron G_g.
struct CascadedChannel {
    CMatrix q;
};

/// i.i.d. Rayleigh fading: entries of G are CN(0, zeta_BI) and entries of h
/// are CN(0, zeta_IU).
ChannelRealization draw_channels(const GroupTopology& top, const LinkBudget& lb, Rng& rng);

/// Assemble Q from a channel realization using the per-group slices
/// G_g = G(:, (g-1)M_bar+1 : g*M_bar) and h_g = h((g-1)M_bar+1 : g*M_bar).
CascadedChannel cascade(const GroupTopology& top, const ChannelRealization& ch);

/// Effective uplink channel h_u = sum_g Q_g vec(Phi_g) for one scattering
/// configuration. Blocks are expected unitary; dimensions are checked.
CVector effective_uplink(const CascadedChannel& q, const std::vector<CMatrix>& phi_blocks);

/// Max-abs difference between the downlink row h^T blkdiag(Phi') G^T computed
/// directly and sum_g vec^T(Phi_g'^T) Q_g^T computed from the cascaded
/// channel: the TDD reciprocity identity. Zero up to roundoff for any input.
double reciprocity_check(const CascadedChannel& q, const ChannelRealization& ch,
                         const std::vector<CMatrix>& phi_blocks);

/// Debug dump: N, M header line then one row per BS antenna with interleaved
/// re/im entries of G, followed by one row for h.
void write_channel_csv(const ChannelRealization& ch, const std::string& path);

}  // namespace bdris
