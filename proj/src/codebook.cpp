#include "bdris/codebook.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bdris {

namespace {

constexpr double kRcondFloor = 1e-12;  // 1/threshold on Gram condition number

CMatrix base_matrix(int order, BaseKind kind, const char* what) {
    switch (kind) {
        case BaseKind::Dft:
            return dft_matrix(order);
        case BaseKind::Hadamard:
            return hadamard_matrix(order);
        case BaseKind::RandomUnitary:
            break;
    }
    throw std::invalid_argument(std::string(what) +
                                ": RandomUnitary has no deterministic base; use random_codebook");
}

}  // namespace

GroupTopology::GroupTopology(int n_bs_, int g_, int m_bar_)
    : n_bs(n_bs_), m(g_ * m_bar_), g(g_), m_bar(m_bar_) {
    if (n_bs < 1 || g < 1 || m_bar < 1) {
        throw std::invalid_argument("GroupTopology: n_bs, g, m_bar must all be >= 1");
    }
}

std::string to_string(BaseKind kind) {
    switch (kind) {
        case BaseKind::Dft: return "dft";
        case BaseKind::Hadamard: return "hadamard";
        case BaseKind::RandomUnitary: return "random";
    }
    return "unknown";
}

BaseKind base_kind_from_string(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "dft") return BaseKind::Dft;
    if (s == "hadamard") return BaseKind::Hadamard;
    if (s == "random" || s == "randomunitary") return BaseKind::RandomUnitary;
    throw std::invalid_argument("unknown codebook strategy '" + name +
                                "' (expected dft, hadamard, or random)");
}

std::string TrainingCodebook::describe() const {
    return to_string(kind) + ":G=" + std::to_string(topology.g) +
           ",Mbar=" + std::to_string(topology.m_bar) + ",T=" + std::to_string(t_slots);
}

CMatrix build_group_base(int g, BaseKind kind) {
    if (g < 1) {
        throw std::invalid_argument("build_group_base: group count must be >= 1");
    }
    return base_matrix(g, kind, "build_group_base");
}

CMatrix build_phibar(int m_bar, const CMatrix& z1, const CMatrix& z2) {
    if (m_bar < 1) {
        throw std::invalid_argument("build_phibar: m_bar must be >= 1");
    }
    if (z1.rows() != m_bar || z1.cols() != m_bar || z2.rows() != m_bar || z2.cols() != m_bar) {
        throw std::invalid_argument("build_phibar: z1 and z2 must both be m_bar x m_bar");
    }

    const double alpha1 = (z1.adjoint() * z1).diagonal().real().mean();
    const double alpha2 = (z2.adjoint() * z2).diagonal().real().mean();
    const double scale_tol = kDefaultTol * std::max(1.0, std::max(alpha1, alpha2));
    if (alpha1 <= 0.0 || !is_scaled_unitary(z1, alpha1, scale_tol)) {
        throw std::invalid_argument("build_phibar: z1 is not scaled-unitary (z1^H z1 != alpha1 I)");
    }
    if (alpha2 <= 0.0 || !is_scaled_unitary(z2, alpha2, scale_tol)) {
        throw std::invalid_argument("build_phibar: z2 is not scaled-unitary (z2^H z2 != alpha2 I)");
    }
    const double want_mod = std::sqrt(alpha2 / m_bar);
    if (((z2.cwiseAbs().array() - want_mod).abs() > scale_tol).any()) {
        throw std::invalid_argument(
            "build_phibar: z2 entries must share modulus sqrt(alpha2/m_bar)");
    }
    if (std::abs(alpha1 * alpha2 - m_bar) > scale_tol * m_bar) {
        throw std::invalid_argument("build_phibar: alpha1*alpha2 must equal m_bar");
    }

    const Index mb = m_bar;
    const CVector z1_vec = vec(z1);
    CMatrix phibar(mb * mb, mb * mb);
    for (Index m = 1; m <= mb; ++m) {
        const CVector repeated = kron(z2.col(m - 1), CMatrix::Ones(mb, 1));
        for (Index n = 1; n <= mb; ++n) {
            phibar.col((m - 1) * mb + (n - 1)) =
                circshift(z1_vec, (n - 1) * mb).cwiseProduct(repeated);
        }
    }
    return phibar;
}

TrainingCodebook build_codebook(const GroupTopology& top, BaseKind kind) {
    const CMatrix x = base_matrix(top.g, kind, "build_codebook");
    const CMatrix z1 = base_matrix(top.m_bar, kind, "build_codebook");
    const CMatrix z2 = z1 / std::sqrt(static_cast<double>(top.m_bar));
    const CMatrix phibar = build_phibar(top.m_bar, z1, z2);

    TrainingCodebook cb;
    cb.topology = top;
    cb.t_slots = top.training_length();
    cb.phi_hat = kron(x, phibar);
    cb.kind = kind;
    cb.alpha1 = static_cast<double>(top.m_bar);
    cb.alpha2 = 1.0;
    return cb;
}

CMatrix haar_unitary(int n, Rng& rng) {
    if (n < 1) {
        throw std::invalid_argument("haar_unitary: order must be >= 1");
    }
    for (;;) {
        CMatrix a(n, n);
        for (Index j = 0; j < n; ++j) {
            for (Index i = 0; i < n; ++i) {
                a(i, j) = rng.cnormal(1.0);
            }
        }
        Eigen::HouseholderQR<CMatrix> qr(a);
        const CVector diag = qr.matrixQR().diagonal();
        if ((diag.cwiseAbs().array() < 1e-300).any()) {
            continue;  // singular draw, probability zero in practice
        }
        CMatrix q = qr.householderQ();
        // Multiply columns by the phases of R's diagonal; plain QR alone is
        // not Haar-distributed.
        for (Index j = 0; j < n; ++j) {
            q.col(j) *= diag(j) / std::abs(diag(j));
        }
        return q;
    }
}

TrainingCodebook random_codebook(const GroupTopology& top, Rng& rng) {
    const Index mb = top.m_bar;
    const Index t_min = top.training_length();

    TrainingCodebook cb;
    cb.topology = top;
    cb.t_slots = static_cast<int>(t_min);
    cb.phi_hat.resize(t_min, t_min);
    cb.kind = BaseKind::RandomUnitary;
    cb.alpha1 = static_cast<double>(top.m_bar);
    cb.alpha2 = 1.0;
    for (Index t = 0; t < t_min; ++t) {
        for (Index g = 0; g < top.g; ++g) {
            cb.phi_hat.col(t).segment(g * mb * mb, mb * mb) = vec(haar_unitary(top.m_bar, rng));
        }
    }
    return cb;
}

std::vector<CMatrix> slot_matrices(const TrainingCodebook& cb, int slot) {
    if (slot < 1 || slot > cb.t_slots) {
        throw std::out_of_range("slot_matrices: slot " + std::to_string(slot) +
                                " outside [1, " + std::to_string(cb.t_slots) + "]");
    }
    const Index mb = cb.topology.m_bar;
    std::vector<CMatrix> blocks;
    blocks.reserve(cb.topology.g);
    for (Index g = 0; g < cb.topology.g; ++g) {
        blocks.push_back(unvec(cb.phi_hat.col(slot - 1).segment(g * mb * mb, mb * mb), mb, mb));
    }
    return blocks;
}

double codebook_mse_factor(const TrainingCodebook& cb) {
    const CMatrix gram = cb.phi_hat * cb.phi_hat.adjoint();
    Eigen::LDLT<CMatrix> ldlt(gram);
    if (ldlt.info() != Eigen::Success || ldlt.rcond() < kRcondFloor) {
        throw std::runtime_error("codebook_mse_factor: training matrix is rank deficient "
                                 "(Gram condition number exceeds 1e12)");
    }
    const CMatrix inv = ldlt.solve(CMatrix::Identity(gram.rows(), gram.cols()));
    return inv.trace().real();
}

double max_block_unitarity_violation(const TrainingCodebook& cb) {
    const Index mb = cb.topology.m_bar;
    const CMatrix eye = CMatrix::Identity(mb, mb);
    double worst = 0.0;
    for (int t = 1; t <= cb.t_slots; ++t) {
        for (const CMatrix& block : slot_matrices(cb, t)) {
            worst = std::max(worst, (block.adjoint() * block - eye).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double max_gram_identity_violation(const TrainingCodebook& cb, bool columns) {
    CMatrix gram = columns ? CMatrix(cb.phi_hat.adjoint() * cb.phi_hat)
                           : CMatrix(cb.phi_hat * cb.phi_hat.adjoint());
    gram.diagonal().array() -= static_cast<double>(cb.topology.m);
    return gram.cwiseAbs().maxCoeff();
}

}  // namespace bdris
