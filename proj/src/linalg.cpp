#include "bdris/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bdris {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index j = 0; j < a.cols(); ++j) {
        for (Index i = 0; i < a.rows(); ++i) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix hadamard_product(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(
            "hadamard_product: dimension mismatch (" + std::to_string(a.rows()) + "x" +
            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
            std::to_string(b.cols()) + ")");
    }
    return a.cwiseProduct(b);
}

CVector vec(const CMatrix& a) {
    return CVector(a.reshaped());  // Eigen reshape is column-major
}

CMatrix unvec(const CVector& v, Index rows, Index cols) {
    if (v.size() != rows * cols) {
        throw std::invalid_argument("unvec: vector of length " + std::to_string(v.size()) +
                                    " cannot fill a " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + " matrix");
    }
    return v.reshaped(rows, cols);
}

CVector circshift(const CVector& v, Index n) {
    const Index len = v.size();
    if (len == 0) {
        return v;
    }
    const Index shift = ((n % len) + len) % len;
    if (shift == 0) {
        return v;
    }
    CVector out(len);
    out.head(shift) = v.tail(shift);
    out.tail(len - shift) = v.head(len - shift);
    return out;
}

CMatrix dft_matrix(Index n) {
    if (n < 1) {
        throw std::invalid_argument("dft_matrix: order must be >= 1");
    }
    CMatrix f(n, n);
    const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (Index k = 0; k < n; ++k) {
        for (Index j = 0; j < n; ++j) {
            // reduce j*k mod n before evaluating the angle to keep precision
            const Index e = (j * k) % n;
            f(j, k) = std::polar(1.0, step * static_cast<double>(e));
        }
    }
    return f;
}

bool is_sylvester_order(Index n) {
    return n >= 1 && (n & (n - 1)) == 0;
}

CMatrix hadamard_matrix(Index n) {
    if (!is_sylvester_order(n)) {
        throw std::invalid_argument("hadamard_matrix: unsupported order " + std::to_string(n) +
                                    " (Sylvester construction needs a power of two)");
    }
    CMatrix d = CMatrix::Ones(1, 1);
    for (Index size = 1; size < n; size *= 2) {
        CMatrix next(2 * size, 2 * size);
        next.topLeftCorner(size, size) = d;
        next.topRightCorner(size, size) = d;
        next.bottomLeftCorner(size, size) = d;
        next.bottomRightCorner(size, size) = -d;
        d.swap(next);
    }
    return d;
}

bool is_scaled_unitary(const CMatrix& a, double alpha, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    if (a.size() == 0) {
        return true;
    }
    CMatrix gram = a.adjoint() * a;
    gram.diagonal().array() -= alpha;
    return gram.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace bdris
