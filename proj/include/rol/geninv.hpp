#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rol/matrix.hpp"

namespace rol {

/// Which Penrose conditions a candidate X satisfies for A:
///   1: AXA = A,  2: XAX = X,  3: (AX)^* = AX,  4: (XA)^* = XA.
/// Residuals are Frobenius norms scaled by 1 + ||target||; a condition is
/// satisfied iff its residual is at most tol.
struct InverseClass {
    std::array<double, 4> residuals{};
    double tol = kClassifyTol;

    bool has(int condition) const { return residuals.at(condition - 1) <= tol; }
    bool is_12() const { return has(1) && has(2); }
    bool is_123() const { return is_12() && has(3); }
    bool is_124() const { return is_12() && has(4); }
    bool is_1234() const { return is_12() && has(3) && has(4); }
    std::vector<int> satisfied() const;
    /// "{1,2,3}" style label; "{}" when nothing holds.
    std::string label() const;
};

/// Moore-Penrose pseudoinverse from the SVD: V diag(1/sigma) U^*.
Matrix pinv(const Matrix& a, std::optional<double> rank_tol = std::nullopt);

/// Pseudoinverse through a rank factorization A = S T obtained by
/// column-pivoted Gauss-Jordan elimination, pinv(A) = T^*(TT^*)^{-1}(S^*S)^{-1}S^*.
/// Shares no code with the SVD path; used as an independent check.
Matrix pinv_oracle(const Matrix& a);

/// Rank factorization used by pinv_oracle: S = A[:, pivots] (m x r, full column
/// rank), T (r x n, full row rank) with T[:, pivots] = I and A = S T.
struct RankFactorization {
    Matrix S;
    Matrix T;
    std::vector<std::size_t> pivots;
};
RankFactorization rank_factorization(const Matrix& a);

/// Throws DimensionMismatch unless X is a.cols() x a.rows().
InverseClass penrose_conditions(const Matrix& a, const Matrix& x, double tol = kClassifyTol);

/// Residual max(||P^2 - P||, ||P^* - P||) / (1 + ||P||).
double projection_residual(const Matrix& p);

/// P^2 = P and P^* = P within tol (scaled by 1 + ||P||). P must be square.
bool is_orthogonal_projection(const Matrix& p, double tol = kClassifyTol);

} // namespace rol
