#include "rol/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rol/svd.hpp"

namespace rol {

namespace {

void require_same_ambient(const Subspace& s1, const Subspace& s2, const char* op)
{
    if (s1.ambient_dim() != s2.ambient_dim())
        throw AmbientMismatch(std::string(op) + ": subspaces live in K^" +
                              std::to_string(s1.ambient_dim()) + " and K^" +
                              std::to_string(s2.ambient_dim()));
}

} // namespace

Subspace::Subspace(Matrix basis) : basis_(std::move(basis))
{
    if (basis_.cols() > 0 && orthonormality_error(basis_) > 1e-10)
        throw NotOrthonormal("subspace basis columns are not orthonormal");
}

Subspace Subspace::zero(std::size_t ambient, Field field)
{
    return Subspace(Matrix(ambient, 0, field));
}

Subspace Subspace::whole(std::size_t ambient, Field field)
{
    return Subspace(Matrix::identity(ambient, field));
}

Subspace Subspace::span(const Matrix& columns)
{
    return range_basis(columns);
}

Matrix Subspace::projector() const
{
    return basis_ * adjoint(basis_);
}

Subspace Subspace::complement() const
{
    return Subspace(complete_orthonormal(basis_));
}

Subspace range_basis(const Matrix& a, std::optional<double> rank_tol)
{
    return Subspace(compute_svd(a, rank_tol).left_vectors());
}

Subspace null_basis(const Matrix& a, std::optional<double> rank_tol)
{
    return Subspace(compute_svd(a, rank_tol).right_null());
}

Subspace intersect(const Subspace& s1, const Subspace& s2, double tol)
{
    require_same_ambient(s1, s2, "intersect");
    const std::size_t n = s1.ambient_dim();
    const Field field = promote(s1.basis().field(), s2.basis().field());
    if (s1.dim() == 0 || s2.dim() == 0) return Subspace::zero(n, field);

    const Matrix stacked = vcat(adjoint(s1.complement().basis()), adjoint(s2.complement().basis()));
    if (stacked.rows() == 0) return Subspace::whole(n, field);
    // The rows are orthonormal blocks, so sigma_max lies in [1, sqrt 2] and an
    // absolute threshold is converted to the relative one compute_svd expects.
    const double smax = singular_values(stacked).front();
    return Subspace(compute_svd(stacked, tol / smax).right_null().as_field(field));
}

bool contains(const Subspace& s1, const Subspace& s2, double tol)
{
    require_same_ambient(s1, s2, "contains");
    const Matrix& b2 = s2.basis();
    if (s2.dim() == 0) return true;
    const Matrix outside = b2 - s1.basis() * (adjoint(s1.basis()) * b2);
    return fro_norm(outside) <= tol * (1.0 + fro_norm(b2));
}

bool subspace_eq(const Subspace& s1, const Subspace& s2, double tol)
{
    return contains(s1, s2, tol) && contains(s2, s1, tol);
}

AngleSpectrum principal_angles(const Subspace& s1, const Subspace& s2)
{
    require_same_ambient(s1, s2, "principal_angles");
    if (s1.dim() == 0 || s2.dim() == 0)
        throw EmptySubspace("principal angles need two subspaces of dimension >= 1");

    AngleSpectrum out;
    out.dim1 = s1.dim();
    out.dim2 = s2.dim();
    const std::size_t count = std::min(out.dim1, out.dim2);

    std::vector<double> cosines = singular_values(adjoint(s1.basis()) * s2.basis());
    cosines.resize(count, 0.0);

    const Subspace& big = s1.dim() >= s2.dim() ? s1 : s2;
    const Subspace& small = s1.dim() >= s2.dim() ? s2 : s1;
    const Matrix residual = small.basis() - big.basis() * (adjoint(big.basis()) * small.basis());
    std::vector<double> sines = singular_values(residual);
    sines.resize(count, 0.0);
    std::sort(sines.begin(), sines.end());

    out.angles.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double c = std::clamp(cosines[i], 0.0, 1.0);
        if (c > std::numbers::sqrt2 / 2.0)
            out.angles[i] = std::asin(std::clamp(sines[i], 0.0, 1.0));
        else
            out.angles[i] = std::acos(c);
    }
    std::sort(out.angles.begin(), out.angles.end());
    return out;
}

bool angles_all_0_or_right(const AngleSpectrum& spectrum, double angle_tol)
{
    const double right = std::numbers::pi / 2.0;
    return std::all_of(spectrum.angles.begin(), spectrum.angles.end(), [&](double t) {
        return t <= angle_tol || std::abs(t - right) <= angle_tol;
    });
}

std::size_t count_zero_angles(const AngleSpectrum& spectrum, double angle_tol)
{
    return static_cast<std::size_t>(std::count_if(spectrum.angles.begin(), spectrum.angles.end(),
                                                  [&](double t) { return t <= angle_tol; }));
}

} // namespace rol
