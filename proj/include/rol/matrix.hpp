#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rol/errors.hpp"
#include "rol/tolerances.hpp"

namespace rol {

using Complex = std::complex<double>;

/// The scalar field a matrix lives over. Real matrices carry exactly zero
/// imaginary parts; mixing the two promotes to Complex.
enum class Field { Real, Complex };

inline Field promote(Field a, Field b)
{
    return (a == Field::Complex || b == Field::Complex) ? Field::Complex : Field::Real;
}

/// Conjugation hook: the identity on real data.
inline Complex conj(Complex x, Field field)
{
    return field == Field::Real ? Complex(x.real(), 0.0) : std::conj(x);
}

std::string to_string(Field field);
Field field_from_string(const std::string& name);

/// Dense row-major matrix over R or C.
///
/// Entries are stored as complex doubles regardless of the field; a Real
/// matrix has its imaginary parts forced to zero on every write, so no
/// algorithm needs a separate real code path.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field = Field::Real);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data, Field field);

    static Matrix zeros(std::size_t rows, std::size_t cols, Field field = Field::Real);
    static Matrix identity(std::size_t n, Field field = Field::Real);
    static Matrix real(std::initializer_list<std::initializer_list<double>> rows);
    static Matrix complex(std::initializer_list<std::initializer_list<Complex>> rows);
    static Matrix diagonal(std::size_t rows, std::size_t cols, std::span<const double> diag,
                           Field field = Field::Real);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }
    Field field() const noexcept { return field_; }
    bool is_real() const noexcept { return field_ == Field::Real; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Complex value);
    std::span<const Complex> data() const noexcept { return data_; }

    Matrix column(std::size_t j) const { return columns(j, 1); }
    Matrix columns(std::size_t first, std::size_t count) const;
    Matrix select_columns(std::span<const std::size_t> indices) const;
    Matrix block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const;

    /// Same entries over another field. Demoting to Real drops imaginary parts.
    Matrix as_field(Field field) const;

    /// Largest |imag| over all entries.
    double max_imag() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_ = Field::Real;
    std::vector<Complex> data_;
};

Matrix mul(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Complex factor);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return sub(a, b); }
inline Matrix operator*(Complex factor, const Matrix& a) { return scale(a, factor); }
inline Matrix operator*(double factor, const Matrix& a) { return scale(a, Complex(factor, 0.0)); }

Matrix hcat(const Matrix& left, const Matrix& right);
Matrix vcat(const Matrix& top, const Matrix& bottom);

/// Block-diagonal matrix with the given square blocks on the diagonal.
Matrix block_diag(std::span<const Matrix> blocks);

double fro_norm(const Matrix& a);
double max_abs(const Matrix& a);

/// ||a - b||_F / (1 + max(||a||_F, ||b||_F)); the scaled residual used for
/// every identity check in the library.
double rel_diff(const Matrix& a, const Matrix& b);

/// ||a||_F / (1 + ||scale_ref||_F).
double rel_norm(const Matrix& a, const Matrix& scale_ref);

/// True iff ||a - b||_F <= tol * (1 + max(||a||_F, ||b||_F)).
bool approx_eq(const Matrix& a, const Matrix& b, double tol = kCompareTol);

/// ||q^* q - I||_F for a matrix with orthonormal columns.
double orthonormality_error(const Matrix& q);

} // namespace rol
