#include "rol/geninv.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rol/svd.hpp"

namespace rol {

namespace {

/// Cholesky factor L (lower) of a Hermitian positive definite matrix.
Matrix cholesky(const Matrix& g)
{
    const std::size_t n = g.rows();
    Matrix l(n, n, g.field());
    for (std::size_t j = 0; j < n; ++j) {
        double d = g(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
        if (!(d > 0.0)) throw Error("cholesky: matrix is not positive definite");
        const double ljj = std::sqrt(d);
        l.set(j, j, ljj);
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l.set(i, j, s / ljj);
        }
    }
    return l;
}

/// Solves G Y = R for Hermitian positive definite G.
Matrix hpd_solve(const Matrix& g, const Matrix& rhs)
{
    const Matrix l = cholesky(g);
    const std::size_t n = g.rows();
    const Field field = promote(g.field(), rhs.field());
    Matrix y(n, rhs.cols(), field);
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        std::vector<Complex> z(n);
        for (std::size_t i = 0; i < n; ++i) {
            Complex s = rhs(i, c);
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * z[k];
            z[i] = s / l(i, i);
        }
        for (std::size_t i = n; i-- > 0;) {
            Complex s = z[i];
            for (std::size_t k = i + 1; k < n; ++k) s -= std::conj(l(k, i)) * z[k];
            z[i] = s / l(i, i);
        }
        for (std::size_t i = 0; i < n; ++i) y.set(i, c, z[i]);
    }
    return y;
}

double scaled(const Matrix& residual, const Matrix& target)
{
    return fro_norm(residual) / (1.0 + fro_norm(target));
}

} // namespace

std::vector<int> InverseClass::satisfied() const
{
    std::vector<int> out;
    for (int i = 1; i <= 4; ++i)
        if (has(i)) out.push_back(i);
    return out;
}

std::string InverseClass::label() const
{
    std::string out = "{";
    bool first = true;
    for (int i : satisfied()) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

Matrix pinv(const Matrix& a, std::optional<double> rank_tol)
{
    const SvdFactors svd = compute_svd(a, rank_tol);
    const std::size_t r = svd.rank();
    Matrix vr = svd.right_vectors();
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < vr.rows(); ++i) vr.set(i, j, vr(i, j) / svd.sigma[j]);
    if (r == 0) return Matrix(a.cols(), a.rows(), a.field());
    return (vr * adjoint(svd.left_vectors())).as_field(a.field());
}

RankFactorization rank_factorization(const Matrix& a)
{
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<Complex>> r(m, std::vector<Complex>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = a(i, j);

    double largest = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::norm(r[i][j]);
        largest = std::max(largest, std::sqrt(s));
    }
    const double threshold = static_cast<double>(std::max(m, n)) * kMachineEps * largest;

    std::vector<std::size_t> pivots;
    std::vector<bool> used(n, false);
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        // Column pivot: largest norm over the rows not yet reduced.
        std::size_t best_col = n;
        double best_norm = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            double s = 0.0;
            for (std::size_t i = k; i < m; ++i) s += std::norm(r[i][j]);
            if (std::sqrt(s) > best_norm) {
                best_norm = std::sqrt(s);
                best_col = j;
            }
        }
        if (best_col == n || best_norm <= threshold) break;

        std::size_t best_row = k;
        for (std::size_t i = k + 1; i < m; ++i)
            if (std::abs(r[i][best_col]) > std::abs(r[best_row][best_col])) best_row = i;
        std::swap(r[k], r[best_row]);

        const Complex pivot = r[k][best_col];
        for (auto& x : r[k]) x /= pivot;
        r[k][best_col] = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == k) continue;
            const Complex f = r[i][best_col];
            if (f == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] -= f * r[k][j];
            r[i][best_col] = 0.0;
        }
        used[best_col] = true;
        pivots.push_back(best_col);
    }

    const std::size_t rank = pivots.size();
    Matrix t(rank, n, a.field());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < n; ++j) t.set(i, j, r[i][j]);
    return {a.select_columns(pivots), std::move(t), std::move(pivots)};
}

Matrix pinv_oracle(const Matrix& a)
{
    const RankFactorization f = rank_factorization(a);
    if (f.pivots.empty()) return Matrix(a.cols(), a.rows(), a.field());
    const Matrix ss = adjoint(f.S) * f.S;
    const Matrix tt = f.T * adjoint(f.T);
    const Matrix y = hpd_solve(ss, adjoint(f.S));
    return (adjoint(f.T) * hpd_solve(tt, y)).as_field(a.field());
}

InverseClass penrose_conditions(const Matrix& a, const Matrix& x, double tol)
{
    if (x.rows() != a.cols() || x.cols() != a.rows()) {
        std::ostringstream msg;
        msg << "penrose_conditions: X is " << x.rows() << "x" << x.cols() << ", expected "
            << a.cols() << "x" << a.rows();
        throw DimensionMismatch(msg.str());
    }
    const Matrix ax = a * x;
    const Matrix xa = x * a;
    InverseClass out;
    out.tol = tol;
    out.residuals[0] = scaled(ax * a - a, a);
    out.residuals[1] = scaled(xa * x - x, x);
    out.residuals[2] = scaled(adjoint(ax) - ax, ax);
    out.residuals[3] = scaled(adjoint(xa) - xa, xa);
    return out;
}

double projection_residual(const Matrix& p)
{
    if (!p.is_square()) throw DimensionMismatch("projection test needs a square matrix");
    const double idem = fro_norm(p * p - p);
    const double herm = fro_norm(adjoint(p) - p);
    return std::max(idem, herm) / (1.0 + fro_norm(p));
}

bool is_orthogonal_projection(const Matrix& p, double tol)
{
    return projection_residual(p) <= tol;
}

} // namespace rol
