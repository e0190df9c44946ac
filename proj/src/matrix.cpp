#include "rol/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rol {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << op << ": shapes " << a.rows() << "x" << a.cols() << " and " << b.rows() << "x"
            << b.cols() << " differ";
        throw DimensionMismatch(msg.str());
    }
}

} // namespace

std::string to_string(Field field)
{
    return field == Field::Real ? "real" : "complex";
}

Field field_from_string(const std::string& name)
{
    if (name == "real") return Field::Real;
    if (name == "complex") return Field::Complex;
    throw ParseError("unknown field '" + name + "' (expected real or complex)");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Complex(0.0, 0.0))
{
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(std::move(data))
{
    if (data_.size() != rows * cols) {
        std::ostringstream msg;
        msg << "matrix data has " << data_.size() << " entries, expected " << rows * cols;
        throw DimensionMismatch(msg.str());
    }
    if (field_ == Field::Real) {
        for (auto& x : data_) x = Complex(x.real(), 0.0);
    }
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols, Field field)
{
    return Matrix(rows, cols, field);
}

Matrix Matrix::identity(std::size_t n, Field field)
{
    Matrix out(n, n, field);
    for (std::size_t i = 0; i < n; ++i) out.data_[i * n + i] = 1.0;
    return out;
}

Matrix Matrix::real(std::initializer_list<std::initializer_list<double>> rows)
{
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.begin()->size();
    std::vector<Complex> data;
    data.reserve(m * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw DimensionMismatch("ragged initializer rows");
        for (double x : row) data.emplace_back(x, 0.0);
    }
    return Matrix(m, n, std::move(data), Field::Real);
}

Matrix Matrix::complex(std::initializer_list<std::initializer_list<Complex>> rows)
{
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.begin()->size();
    std::vector<Complex> data;
    data.reserve(m * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw DimensionMismatch("ragged initializer rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(m, n, std::move(data), Field::Complex);
}

Matrix Matrix::diagonal(std::size_t rows, std::size_t cols, std::span<const double> diag,
                        Field field)
{
    if (diag.size() > std::min(rows, cols)) throw DimensionMismatch("diagonal longer than shape");
    Matrix out(rows, cols, field);
    for (std::size_t i = 0; i < diag.size(); ++i) out.data_[i * cols + i] = diag[i];
    return out;
}

void Matrix::set(std::size_t i, std::size_t j, Complex value)
{
    data_[i * cols_ + j] = field_ == Field::Real ? Complex(value.real(), 0.0) : value;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const
{
    if (first + count > cols_) throw DimensionMismatch("column range out of bounds");
    Matrix out(rows_, count, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out.data_[i * count + j] = data_[i * cols_ + first + j];
    return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const
{
    Matrix out(rows_, indices.size(), field_);
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= cols_) throw DimensionMismatch("column index out of bounds");
        for (std::size_t i = 0; i < rows_; ++i)
            out.data_[i * indices.size() + j] = data_[i * cols_ + indices[j]];
    }
    return out;
}

Matrix Matrix::block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const
{
    if (row + nrows > rows_ || col + ncols > cols_) throw DimensionMismatch("block out of bounds");
    Matrix out(nrows, ncols, field_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            out.data_[i * ncols + j] = data_[(row + i) * cols_ + col + j];
    return out;
}

Matrix Matrix::as_field(Field field) const
{
    return Matrix(rows_, cols_, data_, field);
}

double Matrix::max_imag() const
{
    double worst = 0.0;
    for (const auto& x : data_) worst = std::max(worst, std::abs(x.imag()));
    return worst;
}

Matrix mul(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows()) {
        std::ostringstream msg;
        msg << "mul: inner dimensions " << a.rows() << "x" << a.cols() << " * " << b.rows() << "x"
            << b.cols() << " differ";
        throw DimensionMismatch(msg.str());
    }
    const std::size_t m = a.rows(), n = a.cols(), k = b.cols();
    std::vector<Complex> out(m * k, Complex(0.0, 0.0));
    const auto lhs = a.data();
    const auto rhs = b.data();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t p = 0; p < n; ++p) {
            const Complex x = lhs[i * n + p];
            if (x == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < k; ++j) out[i * k + j] += x * rhs[p * k + j];
        }
    }
    return Matrix(m, k, std::move(out), promote(a.field(), b.field()));
}

Matrix adjoint(const Matrix& a)
{
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<Complex> out(m * n);
    const auto src = a.data();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out[j * m + i] = std::conj(src[i * n + j]);
    return Matrix(n, m, std::move(out), a.field());
}

Matrix add(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b, "add");
    std::vector<Complex> out(a.data().begin(), a.data().end());
    const auto rhs = b.data();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs[i];
    return Matrix(a.rows(), a.cols(), std::move(out), promote(a.field(), b.field()));
}

Matrix sub(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b, "sub");
    std::vector<Complex> out(a.data().begin(), a.data().end());
    const auto rhs = b.data();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs[i];
    return Matrix(a.rows(), a.cols(), std::move(out), promote(a.field(), b.field()));
}

Matrix scale(const Matrix& a, Complex factor)
{
    std::vector<Complex> out(a.data().begin(), a.data().end());
    for (auto& x : out) x *= factor;
    const Field field = factor.imag() != 0.0 ? Field::Complex : a.field();
    return Matrix(a.rows(), a.cols(), std::move(out), field);
}

Matrix hcat(const Matrix& left, const Matrix& right)
{
    if (left.rows() != right.rows()) throw DimensionMismatch("hcat: row counts differ");
    const std::size_t m = left.rows(), n1 = left.cols(), n2 = right.cols();
    std::vector<Complex> out(m * (n1 + n2));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n1; ++j) out[i * (n1 + n2) + j] = left(i, j);
        for (std::size_t j = 0; j < n2; ++j) out[i * (n1 + n2) + n1 + j] = right(i, j);
    }
    return Matrix(m, n1 + n2, std::move(out), promote(left.field(), right.field()));
}

Matrix vcat(const Matrix& top, const Matrix& bottom)
{
    if (top.cols() != bottom.cols()) throw DimensionMismatch("vcat: column counts differ");
    std::vector<Complex> out(top.data().begin(), top.data().end());
    out.insert(out.end(), bottom.data().begin(), bottom.data().end());
    return Matrix(top.rows() + bottom.rows(), top.cols(), std::move(out),
                  promote(top.field(), bottom.field()));
}

Matrix block_diag(std::span<const Matrix> blocks)
{
    std::size_t n = 0;
    Field field = Field::Real;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw DimensionMismatch("block_diag: blocks must be square");
        n += b.rows();
        field = promote(field, b.field());
    }
    Matrix out(n, n, field);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out.set(offset + i, offset + j, b(i, j));
        offset += b.rows();
    }
    return out;
}

double fro_norm(const Matrix& a)
{
    // Scaled accumulation keeps tiny and huge entries from under/overflowing.
    double scale = 0.0, ssq = 1.0;
    for (const auto& x : a.data()) {
        for (double part : {x.real(), x.imag()}) {
            if (part == 0.0) continue;
            const double v = std::abs(part);
            if (scale < v) {
                ssq = 1.0 + ssq * (scale / v) * (scale / v);
                scale = v;
            } else {
                ssq += (v / scale) * (v / scale);
            }
        }
    }
    return scale * std::sqrt(ssq);
}

double max_abs(const Matrix& a)
{
    double worst = 0.0;
    for (const auto& x : a.data()) worst = std::max(worst, std::abs(x));
    return worst;
}

double rel_diff(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b, "rel_diff");
    return fro_norm(a - b) / (1.0 + std::max(fro_norm(a), fro_norm(b)));
}

double rel_norm(const Matrix& a, const Matrix& scale_ref)
{
    return fro_norm(a) / (1.0 + fro_norm(scale_ref));
}

bool approx_eq(const Matrix& a, const Matrix& b, double tol)
{
    require_same_shape(a, b, "approx_eq");
    return fro_norm(a - b) <= tol * (1.0 + std::max(fro_norm(a), fro_norm(b)));
}

double orthonormality_error(const Matrix& q)
{
    return fro_norm(adjoint(q) * q - Matrix::identity(q.cols(), q.field()));
}

} // namespace rol
