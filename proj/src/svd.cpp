#include "rol/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace rol {

namespace {

using Column = std::vector<Complex>;

constexpr int kMaxSweeps = 100;
constexpr double kPhaseThreshold = 1e-12;

double column_norm(const Column& x)
{
    double s = 0.0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

std::vector<Column> to_columns(const Matrix& a)
{
    std::vector<Column> cols(a.cols(), Column(a.rows()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) cols[j][i] = a(i, j);
    return cols;
}

Matrix from_columns(const std::vector<Column>& cols, std::size_t rows, Field field)
{
    Matrix out(rows, cols.size(), field);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) out.set(i, j, cols[j][i]);
    return out;
}

/// One-sided (Hestenes) Jacobi: rotates the columns of g until they are
/// mutually orthogonal, accumulating the rotations into v so that
/// g_final = g_initial * v.
void one_sided_jacobi(std::vector<Column>& g, std::vector<Column>& v)
{
    const std::size_t n = g.size();
    if (n < 2) return;
    const std::size_t m = g.front().size();
    const double threshold = std::max(1.0, std::sqrt(static_cast<double>(m))) * kMachineEps;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                Complex gamma(0.0, 0.0);
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += std::norm(g[p][i]);
                    beta += std::norm(g[q][i]);
                    gamma += std::conj(g[p][i]) * g[q][i];
                }
                const double abs_gamma = std::abs(gamma);
                if (alpha == 0.0 || beta == 0.0) continue;
                if (abs_gamma <= threshold * std::sqrt(alpha) * std::sqrt(beta)) continue;
                rotated = true;

                // Rotate (g_p, conj(phase) * g_q), whose inner product is real.
                const Complex phase = std::conj(gamma / abs_gamma);
                const double zeta = (beta - alpha) / (2.0 * abs_gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = c * t;

                for (std::size_t i = 0; i < m; ++i) {
                    const Complex gp = g[p][i];
                    const Complex gq = phase * g[q][i];
                    g[p][i] = c * gp - s * gq;
                    g[q][i] = s * gp + c * gq;
                }
                for (std::size_t i = 0; i < v[p].size(); ++i) {
                    const Complex vp = v[p][i];
                    const Complex vq = phase * v[q][i];
                    v[p][i] = c * vp - s * vq;
                    v[q][i] = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }
}

struct JacobiOutput {
    std::vector<Column> rotated;   // work * V, orthogonal columns
    std::vector<Column> right;     // V
    std::vector<double> norms;     // column norms of rotated
    std::vector<std::size_t> order; // indices sorted by norm, descending
};

JacobiOutput run_jacobi(const Matrix& work)
{
    JacobiOutput out;
    out.rotated = to_columns(work);
    const std::size_t n = work.cols();
    out.right.assign(n, Column(n, Complex(0.0, 0.0)));
    for (std::size_t j = 0; j < n; ++j) out.right[j][j] = 1.0;
    one_sided_jacobi(out.rotated, out.right);
    out.norms.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.norms[j] = column_norm(out.rotated[j]);
    out.order.resize(n);
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t x, std::size_t y) { return out.norms[x] > out.norms[y]; });
    return out;
}

void normalize_phase(Column& x)
{
    for (const auto& v : x) {
        const double mag = std::abs(v);
        if (mag > kPhaseThreshold) {
            const Complex phase = std::conj(v) / mag;
            for (auto& y : x) y *= phase;
            return;
        }
    }
}

void normalize_column_phases(Matrix& q)
{
    auto cols = to_columns(q);
    for (auto& c : cols) normalize_phase(c);
    q = from_columns(cols, q.rows(), q.field());
}

} // namespace

Matrix SvdFactors::sigma_matrix() const
{
    return Matrix::diagonal(rows(), cols(), sigma, promote(U.field(), V.field()));
}

Matrix SvdFactors::reconstruct() const
{
    const Field field = promote(U.field(), V.field());
    const Matrix d = Matrix::diagonal(rank(), rank(), sigma, field);
    if (rank() == 0) return Matrix(rows(), cols(), field);
    return left_vectors() * d * adjoint(right_vectors());
}

SvdFactors compute_svd(const Matrix& a, std::optional<double> rank_tol)
{
    const std::size_t m = a.rows(), n = a.cols();
    const Field field = a.field();
    SvdFactors out;
    if (m == 0 || n == 0) {
        out.U = Matrix::identity(m, field);
        out.V = Matrix::identity(n, field);
        return out;
    }

    const bool wide = m < n;
    const JacobiOutput jac = run_jacobi(wide ? adjoint(a) : a);
    const double smax = jac.norms[jac.order.front()];
    const double tol = rank_tol.value_or(default_rank_tol(m, n));

    std::size_t r = 0;
    while (r < jac.order.size() && smax > 0.0 && jac.norms[jac.order[r]] > tol * smax) ++r;

    std::vector<Column> right(r);
    out.sigma.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t j = jac.order[i];
        out.sigma[i] = jac.norms[j];
        if (wide) {
            // Rotated columns of A^* are A^* w_i = sigma_i v_i.
            right[i] = jac.rotated[j];
            for (auto& x : right[i]) x /= out.sigma[i];
        } else {
            right[i] = jac.right[j];
        }
        normalize_phase(right[i]);
    }

    const Matrix v_r = from_columns(right, n, field);
    Matrix u_r = a * v_r;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < r; ++j) u_r.set(i, j, u_r(i, j) / out.sigma[j]);

    Matrix v_null = complete_orthonormal(v_r, std::numeric_limits<double>::infinity());
    Matrix u_null = complete_orthonormal(u_r, std::numeric_limits<double>::infinity());
    normalize_column_phases(v_null);
    normalize_column_phases(u_null);
    out.V = hcat(v_r, v_null);
    out.U = hcat(u_r, u_null);
    return out;
}

std::vector<double> singular_values(const Matrix& a)
{
    if (a.rows() == 0 || a.cols() == 0) return {};
    const JacobiOutput jac = run_jacobi(a.rows() < a.cols() ? adjoint(a) : a);
    std::vector<double> out;
    out.reserve(jac.order.size());
    for (std::size_t j : jac.order) out.push_back(jac.norms[j]);
    return out;
}

double scaled_rank_tol(const Matrix& m, double scale, std::optional<double> rank_tol)
{
    const double tol = rank_tol.value_or(default_rank_tol(m.rows(), m.cols()));
    const auto sv = singular_values(m);
    if (sv.empty() || sv.front() == 0.0) return tol;
    return tol * std::max(scale, sv.front()) / sv.front();
}

std::size_t numerical_rank(const Matrix& a, std::optional<double> rank_tol)
{
    const auto sv = singular_values(a);
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double tol = rank_tol.value_or(default_rank_tol(a.rows(), a.cols())) * sv.front();
    return static_cast<std::size_t>(
        std::count_if(sv.begin(), sv.end(), [tol](double s) { return s > tol; }));
}

SpectralBlocks group_spectrum(const SvdFactors& svd, double gap_tol)
{
    SpectralBlocks out;
    const std::size_t r = svd.rank();
    out.null_dim_right = svd.cols() - r;
    out.null_dim_left = svd.rows() - r;
    if (r == 0) return out;
    const double reference = svd.sigma.front();
    IndexRange current{0, 1};
    for (std::size_t i = 1; i < r; ++i) {
        if (svd.sigma[i - 1] - svd.sigma[i] <= gap_tol * reference) {
            ++current.size;
        } else {
            out.blocks.push_back(current);
            current = IndexRange{i, 1};
        }
    }
    out.blocks.push_back(current);
    return out;
}

SvdFactors reparametrize_svd(const SvdFactors& svd, const SpectralBlocks& blocks,
                             std::span<const Matrix> block_unitaries,
                             const Matrix& null_right_unitary, const Matrix& null_left_unitary)
{
    const std::size_t m = svd.rows(), n = svd.cols(), r = svd.rank();
    if (block_unitaries.size() != blocks.blocks.size())
        throw BlockShapeMismatch("one unitary per singular value block is required");

    std::size_t next = 0;
    for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
        const auto& range = blocks.blocks[b];
        const auto& q = block_unitaries[b];
        if (range.begin != next || range.size == 0)
            throw BlockShapeMismatch("blocks must partition the singular value indices");
        if (q.rows() != range.size || q.cols() != range.size) {
            std::ostringstream msg;
            msg << "block " << b << " has size " << range.size << " but its unitary is " << q.rows()
                << "x" << q.cols();
            throw BlockShapeMismatch(msg.str());
        }
        if (!is_unitary(q)) throw NotUnitary("block unitary deviates from Q^*Q = I");
        next += range.size;
    }
    if (next != r) throw BlockShapeMismatch("blocks do not cover all singular values");
    if (null_right_unitary.rows() != n - r || null_right_unitary.cols() != n - r)
        throw BlockShapeMismatch("null-space unitary for V has the wrong size");
    if (null_left_unitary.rows() != m - r || null_left_unitary.cols() != m - r)
        throw BlockShapeMismatch("null-space unitary for U has the wrong size");
    if (!is_unitary(null_right_unitary) || !is_unitary(null_left_unitary))
        throw NotUnitary("null-space unitary deviates from Q^*Q = I");

    std::vector<Matrix> diag(block_unitaries.begin(), block_unitaries.end());
    diag.push_back(null_right_unitary);
    const Matrix a = svd.reconstruct();

    SvdFactors out;
    out.sigma = svd.sigma;
    out.V = svd.V * block_diag(diag);
    Matrix u_r = a * out.V.columns(0, r);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < r; ++j) u_r.set(i, j, u_r(i, j) / svd.sigma[j]);
    const Matrix u_null = svd.left_null() * null_left_unitary;
    out.U = hcat(u_r, u_null).as_field(promote(out.V.field(), u_null.field()));
    return out;
}

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng, Field field)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> data(rows * cols);
    for (auto& x : data) {
        if (field == Field::Real) {
            x = Complex(normal(rng), 0.0);
        } else {
            const double re = normal(rng);
            const double im = normal(rng);
            x = Complex(re, im) * std::sqrt(0.5);
        }
    }
    return Matrix(rows, cols, std::move(data), field);
}

Matrix orthonormalize_columns(const Matrix& a)
{
    auto cols = to_columns(a);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const double original = column_norm(cols[j]);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                Complex proj(0.0, 0.0);
                for (std::size_t k = 0; k < cols[j].size(); ++k) proj += std::conj(cols[i][k]) * cols[j][k];
                for (std::size_t k = 0; k < cols[j].size(); ++k) cols[j][k] -= proj * cols[i][k];
            }
        }
        const double norm = column_norm(cols[j]);
        if (norm <= 1e-12 * std::max(original, 1.0))
            throw NotOrthonormal("orthonormalize_columns: columns are linearly dependent");
        for (auto& x : cols[j]) x /= norm;
    }
    return from_columns(cols, a.rows(), a.field());
}

Matrix random_unitary(std::size_t n, Rng& rng, Field field)
{
    return orthonormalize_columns(gaussian_matrix(n, n, rng, field));
}

Matrix complete_orthonormal(const Matrix& m, double tol)
{
    const std::size_t n = m.rows(), k = m.cols();
    if (k > n) throw NotOrthonormal("more orthonormal columns than the ambient dimension");
    if (std::isfinite(tol) && orthonormality_error(m) > tol)
        throw NotOrthonormal("complete_orthonormal: input columns are not orthonormal");

    auto basis = to_columns(m);
    std::vector<Column> added;
    for (std::size_t step = 0; step < n - k; ++step) {
        // Residual of e_j after projecting out the current basis: 1 - sum |b_j|^2.
        std::size_t best = 0;
        double best_res = -1.0;
        for (std::size_t j = 0; j < n; ++j) {
            double res = 1.0;
            for (const auto& b : basis) res -= std::norm(b[j]);
            if (res > best_res + 1e-14) {
                best_res = res;
                best = j;
            }
        }
        Column x(n, Complex(0.0, 0.0));
        x[best] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                Complex proj(0.0, 0.0);
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(b[i]) * x[i];
                for (std::size_t i = 0; i < n; ++i) x[i] -= proj * b[i];
            }
        }
        const double norm = column_norm(x);
        for (auto& v : x) v /= norm;
        basis.push_back(x);
        added.push_back(std::move(x));
    }
    return from_columns(added, n, m.field());
}

bool is_unitary(const Matrix& q, double tol)
{
    return q.is_square() && orthonormality_error(q) <= tol;
}

} // namespace rol
