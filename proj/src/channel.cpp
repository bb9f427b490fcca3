#include "bdris/channel.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace bdris {

namespace {

void check_blocks(Index n_groups, Index m_bar, const std::vector<CMatrix>& phi_blocks,
                  const char* what) {
    if (static_cast<Index>(phi_blocks.size()) != n_groups) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n_groups) +
                                    " scattering blocks, got " +
                                    std::to_string(phi_blocks.size()));
    }
    for (const CMatrix& block : phi_blocks) {
        if (block.rows() != m_bar || block.cols() != m_bar) {
            throw std::invalid_argument(std::string(what) + ": scattering block is " +
                                        std::to_string(block.rows()) + "x" +
                                        std::to_string(block.cols()) + ", expected " +
                                        std::to_string(m_bar) + "x" + std::to_string(m_bar));
        }
    }
}

/// Infers M_bar from a cascaded channel of width G*M_bar^2 and a block list.
Index infer_m_bar(const CascadedChannel& q, const std::vector<CMatrix>& phi_blocks,
                  const char* what) {
    if (phi_blocks.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty scattering block list");
    }
    const Index m_bar = phi_blocks.front().rows();
    const Index n_groups = static_cast<Index>(phi_blocks.size());
    if (q.q.cols() != n_groups * m_bar * m_bar) {
        throw std::invalid_argument(std::string(what) + ": cascaded channel has " +
                                    std::to_string(q.q.cols()) + " columns, expected " +
                                    std::to_string(n_groups * m_bar * m_bar));
    }
    check_blocks(n_groups, m_bar, phi_blocks, what);
    return m_bar;
}

}  // namespace

double pathloss(const LinkBudget& lb, LinkId which) {
    const double d = which == LinkId::BsRis ? lb.d_bi_m : lb.d_iu_m;
    return db_to_gain(lb.zeta0_db) * std::pow(d / lb.d0_m, -lb.epsilon);
}

ChannelRealization draw_channels(const GroupTopology& top, const LinkBudget& lb, Rng& rng) {
    const double zeta_bi = pathloss(lb, LinkId::BsRis);
    const double zeta_iu = pathloss(lb, LinkId::RisUser);

    ChannelRealization ch;
    ch.g_mat.resize(top.n_bs, top.m);
    for (Index j = 0; j < ch.g_mat.cols(); ++j) {
        for (Index i = 0; i < ch.g_mat.rows(); ++i) {
            ch.g_mat(i, j) = rng.cnormal(zeta_bi);
        }
    }
    ch.h_vec.resize(top.m);
    for (Index i = 0; i < ch.h_vec.size(); ++i) {
        ch.h_vec(i) = rng.cnormal(zeta_iu);
    }
    return ch;
}

CascadedChannel cascade(const GroupTopology& top, const ChannelRealization& ch) {
    if (ch.g_mat.rows() != top.n_bs || ch.g_mat.cols() != top.m || ch.h_vec.size() != top.m) {
        throw std::invalid_argument("cascade: channel dimensions do not match the topology");
    }
    const Index mb = top.m_bar;
    CascadedChannel out;
    out.q.resize(top.n_bs, top.g * mb * mb);
    for (Index g = 0; g < top.g; ++g) {
        const CMatrix g_slice = ch.g_mat.middleCols(g * mb, mb);
        const CMatrix h_slice_t = ch.h_vec.segment(g * mb, mb).transpose();
        out.q.middleCols(g * mb * mb, mb * mb) = kron(h_slice_t, g_slice);
    }
    return out;
}

CVector effective_uplink(const CascadedChannel& q, const std::vector<CMatrix>& phi_blocks) {
    const Index mb = infer_m_bar(q, phi_blocks, "effective_uplink");
    CVector h_u = CVector::Zero(q.q.rows());
    for (Index g = 0; g < static_cast<Index>(phi_blocks.size()); ++g) {
        h_u.noalias() += q.q.middleCols(g * mb * mb, mb * mb) * vec(phi_blocks[g]);
    }
    return h_u;
}

double reciprocity_check(const CascadedChannel& q, const ChannelRealization& ch,
                         const std::vector<CMatrix>& phi_blocks) {
    const Index mb = infer_m_bar(q, phi_blocks, "reciprocity_check");
    const Index n_groups = static_cast<Index>(phi_blocks.size());
    if (ch.h_vec.size() != n_groups * mb || ch.g_mat.cols() != n_groups * mb) {
        throw std::invalid_argument("reciprocity_check: channel dimensions do not match blocks");
    }

    // Downlink computed directly: h' Phi' G' with h' = h^T and G' = G^T.
    Eigen::RowVectorXcd direct = Eigen::RowVectorXcd::Zero(ch.g_mat.rows());
    for (Index g = 0; g < n_groups; ++g) {
        direct += ch.h_vec.segment(g * mb, mb).transpose() * phi_blocks[g] *
                  ch.g_mat.middleCols(g * mb, mb).transpose();
    }

    // Same quantity from the uplink cascaded channel: sum_g vec^T(Phi_g'^T) Q_g^T.
    Eigen::RowVectorXcd via_cascade = Eigen::RowVectorXcd::Zero(q.q.rows());
    for (Index g = 0; g < n_groups; ++g) {
        via_cascade += vec(phi_blocks[g].transpose().eval()).transpose() *
                       q.q.middleCols(g * mb * mb, mb * mb).transpose();
    }

    return (direct - via_cascade).cwiseAbs().maxCoeff();
}

void write_channel_csv(const ChannelRealization& ch, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw std::runtime_error("write_channel_csv: cannot open '" + path + "'");
    }
    char buf[64];
    out << ch.g_mat.rows() << "," << ch.g_mat.cols() << "\n";
    auto put = [&](Complex z, bool last) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
        out << buf << (last ? "\n" : ",");
    };
    for (Index i = 0; i < ch.g_mat.rows(); ++i) {
        for (Index j = 0; j < ch.g_mat.cols(); ++j) {
            put(ch.g_mat(i, j), j + 1 == ch.g_mat.cols());
        }
    }
    for (Index i = 0; i < ch.h_vec.size(); ++i) {
        put(ch.h_vec(i), i + 1 == ch.h_vec.size());
    }
}

}  // namespace bdris
