#pragma once

#include <Eigen/Dense>
#include <complex>

namespace bdris {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Eigen::Index;

/// Default absolute tolerance for structural validation (max-abs entry).
inline constexpr double kDefaultTol = 1e-10;

/// Kronecker product: block (i,j) of the result equals a(i,j) * b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Elementwise product. Throws std::invalid_argument on dimension mismatch.
CMatrix hadamard_product(const CMatrix& a, const CMatrix& b);

/// Column-major stacking of a into a rows*cols column vector.
CVector vec(const CMatrix& a);

/// Inverse of vec: reshape a rows*cols vector into a rows x cols matrix,
/// column-major. Throws std::invalid_argument on length mismatch.
CMatrix unvec(const CVector& v, Index rows, Index cols);

/// Right rotation: moves the final n entries of v to the front. n may exceed
/// the length (reduced modulo length); negative n rotates left.
CVector circshift(const CVector& v, Index n);

/// Unnormalized DFT matrix, F(j,k) = exp(-2*pi*i*j*k/n), so that F^H F = n I.
CMatrix dft_matrix(Index n);

/// True for n = 2^k (including n = 1), the orders covered by the Sylvester
/// construction.
bool is_sylvester_order(Index n);

/// Sylvester-type Hadamard matrix with +-1 entries, D^T D = n I. Throws
/// std::invalid_argument unless n is a power of two.
CMatrix hadamard_matrix(Index n);

/// True iff max-abs entry of (a^H a - alpha I) <= tol. a must be square.
bool is_scaled_unitary(const CMatrix& a, double alpha, double tol = kDefaultTol);

}  // namespace bdris
