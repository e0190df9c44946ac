#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rol/matrix.hpp"

namespace rol {

/// A linear subspace of K^n held as an orthonormal basis (n x d, d may be 0).
class Subspace {
public:
    Subspace() = default;
    /// Takes ownership of a basis that must have orthonormal columns within
    /// 1e-10 (NotOrthonormal otherwise).
    explicit Subspace(Matrix basis);

    static Subspace zero(std::size_t ambient, Field field = Field::Real);
    static Subspace whole(std::size_t ambient, Field field = Field::Real);
    /// Orthonormalizes arbitrary spanning columns; dependent columns are dropped.
    static Subspace span(const Matrix& columns);

    std::size_t ambient_dim() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    /// Orthogonal projection B B^* onto the subspace.
    Matrix projector() const;
    /// Orthonormal basis of the orthogonal complement.
    Subspace complement() const;

private:
    Matrix basis_;
};

/// Principal angles, non-decreasing, together with the subspace dimensions.
struct AngleSpectrum {
    std::vector<double> angles;
    std::size_t dim1 = 0;
    std::size_t dim2 = 0;
};

/// Column space of A; dimension equals the numerical rank.
Subspace range_basis(const Matrix& a, std::optional<double> rank_tol = std::nullopt);

/// Kernel of A; dimension n - rank.
Subspace null_basis(const Matrix& a, std::optional<double> rank_tol = std::nullopt);

/// S1 ∩ S2 as the null space of the stacked complement adjoints [N1^*; N2^*].
/// Directions with singular value below tol count as shared.
Subspace intersect(const Subspace& s1, const Subspace& s2, double tol = kAngleTol);

/// S2 ⊆ S1, measured by ||(I - B1 B1^*) B2|| <= tol * (1 + ||B2||).
bool contains(const Subspace& s1, const Subspace& s2, double tol = kClassifyTol);
bool subspace_eq(const Subspace& s1, const Subspace& s2, double tol = kClassifyTol);

/// Principal angles between S1 and S2, min(d1, d2) of them. Cosines are the
/// singular values of B1^* B2 and the sines those of (I - P_big) B_small.
/// Each angle is taken from whichever of arcsin/arccos is well conditioned:
/// sines below pi/4, cosines above.
/// Throws AmbientMismatch or EmptySubspace.
AngleSpectrum principal_angles(const Subspace& s1, const Subspace& s2);

/// Every angle within angle_tol of 0 or of pi/2. True for an empty spectrum.
bool angles_all_0_or_right(const AngleSpectrum& spectrum, double angle_tol = kAngleTol);

/// Number of angles within angle_tol of 0.
std::size_t count_zero_angles(const AngleSpectrum& spectrum, double angle_tol = kAngleTol);

} // namespace rol
