#include <gtest/gtest.h>

#include "rol/geninv.hpp"
#include "rol/svd.hpp"
#include "support.hpp"

using namespace rol;

namespace {

void expect_entries_near(const Matrix& got, const Matrix& want, double tol)
{
    ASSERT_EQ(got.rows(), want.rows());
    ASSERT_EQ(got.cols(), want.cols());
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j)
            EXPECT_LE(std::abs(got(i, j) - want(i, j)), tol) << "entry (" << i << "," << j << ")";
}

} // namespace

TEST(Pinv, ZeroMatrix)
{
    const Matrix x = pinv(Matrix::zeros(3, 2));
    EXPECT_EQ(x.rows(), 2u);
    EXPECT_EQ(x.cols(), 3u);
    EXPECT_EQ(fro_norm(x), 0.0);
    EXPECT_TRUE(penrose_conditions(Matrix::zeros(3, 2), x).is_1234());
}

TEST(Pinv, RankOneRow)
{
    const Matrix a = Matrix::real({{1, 1}});
    const Matrix want = pinv_oracle(a);
    expect_entries_near(want, Matrix::real({{0.5}, {0.5}}), 1e-15);
    expect_entries_near(pinv(a), want, 1e-15);
}

TEST(Pinv, RankOneProduct)
{
    const Matrix ab = Matrix::real({{1, 1, 0}, {0, 0, 0}});
    expect_entries_near(pinv(ab), 0.5 * Matrix::real({{1, 0}, {1, 0}, {0, 0}}), 1e-15);
}

TEST(Pinv, SatisfiesAllFourConditions)
{
    Rng rng(21);
    for (int trial = 0; trial < 80; ++trial) {
        const Field f = gen::random_field(rng);
        const std::size_t m = gen::uniform_index(rng, 1, 12);
        const std::size_t n = gen::uniform_index(rng, 1, 9);
        const std::size_t r = gen::uniform_index(rng, 0, std::min(m, n));
        const Matrix a = gen::random_rank(m, n, r, rng, f);
        const InverseClass cls = penrose_conditions(a, pinv(a), 1e-9);
        EXPECT_TRUE(cls.is_1234()) << cls.label();
        EXPECT_EQ(pinv(a).field(), f);
    }
}

TEST(RankFactorization, ReproducesInput)
{
    Rng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = gen::uniform_index(rng, 1, 10);
        const std::size_t n = gen::uniform_index(rng, 1, 10);
        const std::size_t r = gen::uniform_index(rng, 0, std::min(m, n));
        const Matrix a = gen::random_rank(m, n, r, rng, gen::random_field(rng));
        const RankFactorization f = rank_factorization(a);
        ASSERT_EQ(f.pivots.size(), r);
        if (r == 0) continue;
        EXPECT_LE(rel_diff(f.S * f.T, a), 1e-12);
        EXPECT_TRUE(approx_eq(f.T.select_columns(f.pivots), Matrix::identity(r), 1e-14));
    }
}

TEST(PinvOracle, Identity)
{
    EXPECT_TRUE(approx_eq(pinv_oracle(Matrix::identity(4)), Matrix::identity(4), 1e-15));
}

TEST(PinvOracle, CounterexampleProduct)
{
    const Matrix a = Matrix::real({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}});
    const Matrix b = Matrix::real({{2, 4, 3, 2}, {2, 4, 1, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    const Matrix want =
        (1.0 / 48.0) * Matrix::real({{-2, 3, 0}, {-4, 6, 0}, {24, -12, 0}, {-2, 3, 0}});
    expect_entries_near(pinv_oracle(a * b), want, 1e-12);
    expect_entries_near(pinv(a * b), want, 1e-12);
}

TEST(PinvOracle, AgreesWithSvdPath)
{
    Rng rng(23);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = gen::random_rank(7, 5, 3, rng, gen::random_field(rng));
        worst = std::max(worst, rel_diff(pinv_oracle(a), pinv(a)));
    }
    EXPECT_LE(worst, 1e-9);
}

TEST(PinvOracle, SatisfiesPenroseOnRandomShapes)
{
    Rng rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = gen::uniform_index(rng, 1, 12);
        const std::size_t n = gen::uniform_index(rng, 1, 9);
        const std::size_t r = gen::uniform_index(rng, 0, std::min<std::size_t>({m, n, 6}));
        const Matrix a = gen::random_rank(m, n, r, rng, gen::random_field(rng));
        EXPECT_TRUE(penrose_conditions(a, pinv_oracle(a), 1e-9).is_1234());
    }
}

TEST(Penrose, DimensionCheck)
{
    EXPECT_THROW(penrose_conditions(Matrix(2, 3), Matrix(2, 3)), DimensionMismatch);
}

TEST(Penrose, ZeroInverseOfZero)
{
    const InverseClass cls = penrose_conditions(Matrix(2, 3), Matrix(3, 2));
    EXPECT_EQ(cls.label(), "{1,2,3,4}");
}

TEST(Penrose, GeometricPairIsOnlyTwelve)
{
    const Matrix a = Matrix::real({{1, 0, 1}, {0, 1, -1}});
    const Matrix b = Matrix::real({{1, 0}, {0, 1}, {2, 3}});
    const InverseClass cls = penrose_conditions(a * b, pinv(b) * pinv(a));
    EXPECT_TRUE(cls.has(1));
    EXPECT_TRUE(cls.has(2));
    EXPECT_FALSE(cls.has(3));
    EXPECT_FALSE(cls.has(4));
    EXPECT_EQ(cls.label(), "{1,2}");
}

TEST(Penrose, PrintedXGivesOneTwoThree)
{
    const Matrix ab = Matrix::real({{1, 1, 0}, {0, 0, 0}});
    const Matrix x = (1.0 / 3.0) * Matrix::real({{2, 0}, {1, 0}, {-1, 0}});
    const InverseClass cls = penrose_conditions(ab, x);
    // Frozen from direct evaluation: AX = diag(1, 0) exactly, while XA has
    // the non-symmetric pattern (1/3)[[2,2,0],[1,1,0],[-1,-1,0]].
    EXPECT_LE(cls.residuals[0], 1e-15);
    EXPECT_LE(cls.residuals[1], 1e-15);
    EXPECT_LE(cls.residuals[2], 1e-15);
    EXPECT_NEAR(cls.residuals[3], 0.37893738196301197, 1e-12);
    EXPECT_EQ(cls.label(), "{1,2,3}");
}

TEST(Projection, Examples)
{
    EXPECT_TRUE(is_orthogonal_projection(Matrix::identity(3)));
    EXPECT_FALSE(is_orthogonal_projection(Matrix::real({{1, 1}, {0, 0}})));
    EXPECT_THROW(is_orthogonal_projection(Matrix(2, 3)), DimensionMismatch);
    Rng rng(25);
    const Matrix v = random_unitary(6, rng, Field::Complex).columns(0, 2);
    EXPECT_TRUE(is_orthogonal_projection(v * adjoint(v)));
}

TEST(GeninvProperty, AdjointAndInvolution)
{
    Rng rng(26);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = gen::uniform_index(rng, 1, 9);
        const std::size_t n = gen::uniform_index(rng, 1, 9);
        const std::size_t r = gen::uniform_index(rng, 0, std::min(m, n));
        const Matrix a = gen::random_rank(m, n, r, rng, gen::random_field(rng));
        EXPECT_LE(rel_diff(pinv(adjoint(a)), adjoint(pinv(a))), 1e-10);
        EXPECT_LE(rel_diff(pinv(pinv(a)), a), 1e-10);
    }
}

TEST(GeninvProperty, IdempotentUnitSpectrumIffHermitian)
{
    Rng rng(27);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = gen::uniform_index(rng, 2, 7);
        const std::size_t d = gen::uniform_index(rng, 1, n - 1);
        const Field f = gen::random_field(rng);
        // Orthogonal: V V^*. Oblique: X (Y^* X)^{-1} Y^* with X != Y.
        const Matrix v = random_unitary(n, rng, f).columns(0, d);
        const Matrix orth = v * adjoint(v);
        const Matrix y = v + 0.5 * gaussian_matrix(n, d, rng, f);
        const Matrix oblique = v * pinv(adjoint(y) * v) * adjoint(y);
        for (const Matrix* p : {&orth, &oblique}) {
            ASSERT_LE(fro_norm(*p * *p - *p), 1e-9 * (1.0 + fro_norm(*p)));
            const auto sv = singular_values(*p);
            bool unit = true;
            for (std::size_t i = 0; i < d; ++i) unit = unit && std::abs(sv[i] - 1.0) <= 1e-8;
            EXPECT_EQ(unit, is_orthogonal_projection(*p, 1e-8));
        }
        EXPECT_TRUE(is_orthogonal_projection(orth));
        EXPECT_FALSE(is_orthogonal_projection(oblique));
    }
}
