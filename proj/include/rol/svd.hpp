#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "rol/matrix.hpp"

namespace rol {

/// Seeded generator used for every random construction. Passed by reference
/// and owned by a single caller.
using Rng = std::mt19937_64;

/// Full singular value decomposition A = U * Sigma * V^*.
///
/// U is m x m and V is n x n, both unitary. Only the r positive singular
/// values are stored, sorted non-increasing; the generalized diagonal Sigma
/// is rebuilt on demand from (sigma, m, n).
struct SvdFactors {
    Matrix U;
    std::vector<double> sigma;
    Matrix V;

    std::size_t rows() const { return U.rows(); }
    std::size_t cols() const { return V.rows(); }
    std::size_t rank() const { return sigma.size(); }

    Matrix sigma_matrix() const;
    Matrix reconstruct() const;

    /// Columns 1..r of U and V (the left and right singular vectors).
    Matrix left_vectors() const { return U.columns(0, rank()); }
    Matrix right_vectors() const { return V.columns(0, rank()); }
    /// Columns r+1.. of U and V: orthonormal bases of null(A^*) and null(A).
    Matrix left_null() const { return U.columns(rank(), rows() - rank()); }
    Matrix right_null() const { return V.columns(rank(), cols() - rank()); }
};

/// Half-open range [begin, begin + size) of singular value indices (0-based).
struct IndexRange {
    std::size_t begin = 0;
    std::size_t size = 0;
};

/// Grouping of equal singular values, i.e. the eigenspaces of A^*A.
struct SpectralBlocks {
    std::vector<IndexRange> blocks;
    std::size_t null_dim_right = 0;
    std::size_t null_dim_left = 0;
};

/// SVD by one-sided Jacobi on the columns of A (or of A^* when A is wide).
///
/// rank_tol is relative to the largest singular value; the default is
/// max(m, n) * eps. Left singular vectors are formed as u_i = A v_i / sigma_i,
/// the null-space columns are completed deterministically, and every column
/// of V is phase-normalized so that its first entry of magnitude > 1e-12 is
/// real and positive. The zero matrix yields U = I, V = I and no sigma.
SvdFactors compute_svd(const Matrix& a, std::optional<double> rank_tol = std::nullopt);

/// All min(m, n) singular values, zeros included, sorted non-increasing.
std::vector<double> singular_values(const Matrix& a);

/// Numerical rank with the same convention as compute_svd.
std::size_t numerical_rank(const Matrix& a, std::optional<double> rank_tol = std::nullopt);

/// Relative tolerance for compute_svd/pinv that drops singular values of m
/// below rank_tol * scale. Products are ranked against the norms of their
/// factors this way, so a numerically zero product has rank 0.
double scaled_rank_tol(const Matrix& m, double scale, std::optional<double> rank_tol = std::nullopt);

/// Consecutive sigma_i, sigma_{i+1} share a block iff
/// sigma_i - sigma_{i+1} <= gap_tol * sigma_1.
SpectralBlocks group_spectrum(const SvdFactors& svd, double gap_tol = kGapTol);

/// Move along the family of SVDs of the same matrix:
/// V' = V * diag(Q_1, ..., Q_p, Q_null_right), U'_i = A v'_i / sigma_i for
/// i <= r and U'_{r+1..m} = U_{r+1..m} * Q_null_left. Sigma is unchanged.
/// Throws BlockShapeMismatch or NotUnitary (tolerance 1e-10).
SvdFactors reparametrize_svd(const SvdFactors& svd, const SpectralBlocks& blocks,
                             std::span<const Matrix> block_unitaries,
                             const Matrix& null_right_unitary, const Matrix& null_left_unitary);

/// Haar-distributed n x n unitary (orthogonal for Field::Real): Gram-Schmidt
/// of an i.i.d. Gaussian matrix, which leaves the triangular factor with a
/// positive diagonal.
Matrix random_unitary(std::size_t n, Rng& rng, Field field = Field::Real);

/// n x d matrix with i.i.d. standard normal entries (complex: N(0,1/2) parts).
Matrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng, Field field = Field::Real);

/// Orthonormal basis N of the orthogonal complement of range(M), so that
/// [M N] is unitary. M must have orthonormal columns within tol
/// (NotOrthonormal otherwise). Picks, greedily, the standard basis vector
/// with the largest residual, so an empty M yields the identity.
Matrix complete_orthonormal(const Matrix& m, double tol = 1e-10);

/// Orthonormalize the columns of a full-column-rank matrix (two-pass
/// Gram-Schmidt).
Matrix orthonormalize_columns(const Matrix& a);

bool is_unitary(const Matrix& q, double tol = 1e-10);

} // namespace rol
