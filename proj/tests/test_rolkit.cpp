#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rol/fixtures.hpp"
#include "rol/rolkit.hpp"
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

bool full_rol(const Matrix& a, const Matrix& b)
{
    return classify_pair(a, b).rol_holds;
}

} // namespace

TEST(Greville, IntroPairFailsAll)
{
    const auto [a, b] = fixtures::intro();
    const GrevilleResult g = greville_check(a, b);
    EXPECT_FALSE(g.range_in_b.holds);
    EXPECT_FALSE(g.range_in_astar.holds);
    EXPECT_FALSE(g.identity.holds);
}

TEST(Greville, CounterexampleHoldsAll)
{
    const auto [a, b] = fixtures::counterexample();
    EXPECT_TRUE(greville_check(a, b).all());
}

TEST(Greville, AdjointPartner)
{
    Rng rng(3);
    const Matrix a = gen::random_rank(5, 4, 3, rng, Field::Complex);
    EXPECT_TRUE(greville_check(a, adjoint(a)).all());
}

TEST(Greville, DimensionMismatch)
{
    EXPECT_THROW(greville_check(Matrix::zeros(2, 3), Matrix::zeros(2, 2)), DimensionMismatch);
    EXPECT_THROW(classify_pair(Matrix::zeros(2, 3), Matrix::zeros(2, 2)), DimensionMismatch);
    EXPECT_THROW(twelve_way_suite(Matrix::zeros(2, 3), Matrix::zeros(2, 2)), DimensionMismatch);
}

TEST(ClassifyPair, IntroPair)
{
    const auto [a, b] = fixtures::intro();
    const RolReport r = classify_pair(a, b);
    EXPECT_NEAR(r.rol_residual, 0.5, 1e-12);
    EXPECT_FALSE(r.rol_holds);
    EXPECT_FALSE(r.penrose_class.has(1));
    EXPECT_EQ(r.penrose_class.label(), "{3,4}");
    EXPECT_TRUE(r.consistent());
    EXPECT_EQ(r.rank_ab, 1u);
    EXPECT_EQ(r.dim_intersection, 0u);
}

TEST(ClassifyPair, Counterexample)
{
    const auto [a, b] = fixtures::counterexample();
    const RolReport r = classify_pair(a, b);
    EXPECT_TRUE(r.penrose_class.is_1234());
    EXPECT_LE(r.rol_residual, 1e-10);
    EXPECT_TRUE(r.consistent());
    EXPECT_EQ(r.rank_a, 3u);
    EXPECT_EQ(r.rank_b, 2u);
    EXPECT_EQ(r.rank_ab, r.dim_intersection);

    const Matrix aa = adjoint(a) * a, bb = b * adjoint(b);
    const Matrix commutator = aa * bb - bb * aa;
    EXPECT_LE(fro_norm(commutator - 81.0 * fixtures::counterexample_commutator_pattern()), 1e-10);
    expect_entries_near(pinv(a * b), fixtures::counterexample_pinv(), 1e-10);
    expect_entries_near(pinv(b) * pinv(a), fixtures::counterexample_pinv(), 1e-10);
}

TEST(ClassifyPair, GeometricPair)
{
    const auto [a, b] = fixtures::geometric();
    const RolReport r = classify_pair(a, b);
    EXPECT_EQ(r.penrose_class.label(), "{1,2}");
    ASSERT_EQ(r.angles.angles.size(), 2u);
    EXPECT_NEAR(r.angles.angles[0], 0.0, 1e-10);
    EXPECT_NEAR(r.angles.angles[1], std::numbers::pi / 2, 1e-10);
    EXPECT_TRUE(r.angles_0_or_right);
    EXPECT_FALSE(r.proj_test.holds);
    EXPECT_FALSE(r.block_form.holds);
    EXPECT_TRUE(r.consistent());
}

TEST(ClassifyPair, ZeroProduct)
{
    const auto [a, b] = fixtures::zero_product();
    const RolReport r = classify_pair(a, b);
    EXPECT_TRUE(r.rol_holds);
    EXPECT_EQ(r.rank_ab, 0u);
    EXPECT_TRUE(r.consistent());
}

TEST(BlockForm, Examples)
{
    const auto [a, b] = fixtures::intro();
    const Check intro = block_form_check(a, b);
    EXPECT_FALSE(intro.holds);
    // The single singular value of V_A^* U_B is cos(pi/4).
    EXPECT_NEAR(intro.residual, 1.0 - std::sqrt(0.5), 1e-15);
    const auto [c, d] = fixtures::counterexample();
    EXPECT_TRUE(block_form_check(c, d).holds);
}

TEST(TwelveWay, IntroAllFalse)
{
    const auto [a, b] = fixtures::intro();
    const TwelveWay t = twelve_way_suite(a, b);
    for (std::size_t i = 0; i < 12; ++i) EXPECT_FALSE(t.items[i].holds) << TwelveWay::names()[i];
}

TEST(TwelveWay, GeometricAllTrue)
{
    const auto [a, b] = fixtures::geometric();
    const TwelveWay t = twelve_way_suite(a, b);
    for (std::size_t i = 0; i < 12; ++i) EXPECT_TRUE(t.items[i].holds) << TwelveWay::names()[i];
}

TEST(TwelveWay, GenericPairsAgree)
{
    Rng rng(8);
    // An 8x6 Gaussian A has full column rank, so pinv(A)A = I and every item holds.
    const Matrix a = gaussian_matrix(8, 6, rng), b = gaussian_matrix(6, 7, rng);
    const TwelveWay full = twelve_way_suite(a, b);
    EXPECT_TRUE(full.all_agree());
    EXPECT_TRUE(full.verdict());

    const Matrix c = gen::random_rank(8, 6, 4, rng), d = gen::random_rank(6, 7, 3, rng);
    const TwelveWay deficient = twelve_way_suite(c, d);
    EXPECT_TRUE(deficient.all_agree());
    EXPECT_FALSE(deficient.verdict());
}

TEST(WeakClass, Fixture123)
{
    const auto [a, b] = fixtures::class123();
    expect_entries_near(pinv(a * b), fixtures::class123_pinv_ab(), 1e-12);
    expect_entries_near(pinv(b) * pinv(a), fixtures::class123_reverse(), 1e-12);
    const WeakClass w = classify_123_124(a, b);
    EXPECT_EQ(w.penrose.label(), "{1,2,3}");
    EXPECT_TRUE(w.is12);
    EXPECT_TRUE(w.is123);
    EXPECT_FALSE(w.is124);
    EXPECT_FALSE(w.is1234);
    EXPECT_TRUE(w.consistent());
    for (const Check& c : w.criteria123) EXPECT_TRUE(c.holds);
}

TEST(WeakClass, GeometricIsOnly12)
{
    const auto [a, b] = fixtures::geometric();
    const WeakClass w = classify_123_124(a, b);
    EXPECT_TRUE(w.is12);
    EXPECT_FALSE(w.is123);
    EXPECT_FALSE(w.is124);
    EXPECT_TRUE(w.consistent());
}

TEST(WeakClass, PartnersAreFull)
{
    Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        const auto [a, b] = gen::partner_pair(rng);
        const WeakClass w = classify_123_124(a, b);
        EXPECT_TRUE(w.is1234);
        EXPECT_TRUE(w.consistent());
    }
}

TEST(ConstructPartner, EmptyJGivesZeroProduct)
{
    Rng rng(4);
    const Matrix a = gen::random_rank(5, 6, 3, rng);
    ConstructionPlan plan{.s = 0, .t = 2, .k = 4, .sigma_b = {2.0, 1.0}, .seed = 9};
    const Matrix b = construct_partner(a, plan);
    EXPECT_LE(fro_norm(a * b), 1e-12);
    EXPECT_LE(fro_norm(pinv(b) * pinv(a)), 1e-12);
    EXPECT_EQ(numerical_rank(b), 2u);
}

TEST(ConstructPartner, CounterexampleShape)
{
    const Matrix a = fixtures::counterexample().first;
    ConstructionPlan plan{.s = 1, .t = 1, .k = 4, .sigma_b = {3.0, 1.0}, .seed = 2};
    const Matrix b = construct_partner(a, plan);
    EXPECT_EQ(b.rows(), 4u);
    EXPECT_EQ(b.cols(), 4u);
    const RolReport r = classify_pair(a, b);
    EXPECT_TRUE(r.rol_holds);
    EXPECT_EQ(r.rank_b, 2u);
    EXPECT_EQ(r.rank_ab, 1u);
}

TEST(ConstructPartner, RandomPlans)
{
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const auto [a, b] = gen::partner_pair(rng);
        const RolReport r = classify_pair(a, b);
        EXPECT_LE(r.rol_relative, 1e-8);
        EXPECT_TRUE(r.consistent());
    }
}

TEST(ConstructPartner, ExplicitJAndInfeasiblePlans)
{
    Rng rng(6);
    const Matrix a = gen::random_rank(4, 5, 3, rng, Field::Complex);
    ConstructionPlan plan{.s = 2, .t = 1, .k = 3, .sigma_b = {1, 2, 3}, .seed = 1};
    plan.j_indices = std::vector<std::size_t>{2, 0};
    const Matrix b = construct_partner(a, plan);
    EXPECT_TRUE(full_rol(a, b));
    EXPECT_EQ(numerical_rank(a * b), 2u);

    ConstructionPlan bad = plan;
    bad.j_indices = std::vector<std::size_t>{0, 0};
    EXPECT_THROW(construct_partner(a, bad), PlanInfeasible);
    bad = plan;
    bad.s = 4;
    bad.j_indices.reset();
    EXPECT_THROW(construct_partner(a, bad), PlanInfeasible);
    bad = plan;
    bad.t = 3;
    EXPECT_THROW(construct_partner(a, bad), PlanInfeasible);
    bad = plan;
    bad.sigma_b = {1, -2, 3};
    EXPECT_THROW(construct_partner(a, bad), PlanInfeasible);
}

TEST(ConstructPartner, Deterministic)
{
    const Matrix a = fixtures::counterexample().first;
    ConstructionPlan plan{.s = 2, .t = 1, .k = 5, .sigma_b = {1, 1, 2}, .seed = 77};
    EXPECT_EQ(fro_norm(construct_partner(a, plan) - construct_partner(a, plan)), 0.0);
}

TEST(ConstructPartnerLeft, Examples)
{
    Rng rng(10);
    const Matrix b = gen::random_rank(6, 4, 3, rng);
    ConstructionPlan plan{.s = 2, .t = 1, .k = 5, .sigma_b = {1, 2, 4}, .seed = 3};
    const Matrix a = construct_partner_left(b, plan);
    EXPECT_EQ(a.rows(), 5u);
    EXPECT_EQ(a.cols(), 6u);
    EXPECT_TRUE(full_rol(a, b));

    plan.s = 0;
    plan.t = 2;
    plan.sigma_b = {1, 2};
    EXPECT_LE(fro_norm(construct_partner_left(b, plan) * b), 1e-12);

    const Matrix eye = Matrix::identity(4);
    plan = {.s = 2, .t = 0, .k = 3, .sigma_b = {5, 1}, .seed = 8};
    EXPECT_TRUE(full_rol(construct_partner_left(eye, plan), eye));
}

TEST(AlignedSvds, ZeroProductPair)
{
    const auto [a, b] = fixtures::zero_product();
    const auto [sa, sb] = aligned_svds(a, b);
    EXPECT_LE(rel_diff(sa.reconstruct(), a), 1e-12);
    EXPECT_LE(rel_diff(sb.reconstruct(), b), 1e-12);
    const SpanCondition c = span_condition(a, b, sa, sb);
    EXPECT_TRUE(c.equal);
    EXPECT_EQ(c.lhs.dim(), 0u);
    EXPECT_EQ(c.rhs.dim(), 0u);
}

TEST(AlignedSvds, RankFactorizationPairSpansEverything)
{
    Rng rng(12);
    const Matrix s = gen::random_rank(6, 3, 3, rng), t = gen::random_rank(3, 5, 3, rng);
    const auto [sa, sb] = aligned_svds(s, t);
    const SpanCondition c = span_condition(s, t, sa, sb);
    EXPECT_TRUE(c.equal);
    EXPECT_EQ(c.lhs.dim(), 3u);
}

TEST(AlignedSvds, IntroPairRejected)
{
    const auto [a, b] = fixtures::intro();
    EXPECT_THROW(aligned_svds(a, b), RolNotSatisfied);
}

TEST(AlignedSvds, VectorsSplitAndSpansMatch)
{
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto [a, b] = gen::partner_pair(rng);
        const auto [sa, sb] = aligned_svds(a, b);
        EXPECT_TRUE(is_unitary(sa.U, 1e-9));
        EXPECT_TRUE(is_unitary(sa.V, 1e-9));
        EXPECT_TRUE(is_unitary(sb.U, 1e-9));
        EXPECT_TRUE(is_unitary(sb.V, 1e-9));
        EXPECT_LE(rel_diff(sa.reconstruct(), a), 1e-10);
        EXPECT_LE(rel_diff(sb.reconstruct(), b), 1e-10);

        const Matrix pb = b * pinv(b), pa = pinv(a) * a;
        for (std::size_t j = 0; j < sa.V.cols(); ++j) {
            const Matrix v = sa.V.column(j);
            const double inside = fro_norm(pb * v - v), outside = fro_norm(pb * v);
            EXPECT_LE(std::min(inside, outside), 1e-8);
        }
        for (std::size_t j = 0; j < sb.U.cols(); ++j) {
            const Matrix u = sb.U.column(j);
            EXPECT_LE(std::min(fro_norm(pa * u - u), fro_norm(pa * u)), 1e-8);
        }

        const SpanCondition c = span_condition(a, b, sa, sb);
        EXPECT_TRUE(c.equal);
        const Subspace cap = intersect(range_basis(adjoint(a)), range_basis(b));
        EXPECT_TRUE(subspace_eq(c.lhs, cap, 1e-8));
        const Matrix aab = adjoint(a) * a * b;
        const double scale = std::pow(fro_norm(a), 2) * fro_norm(b);
        EXPECT_TRUE(subspace_eq(range_basis(aab, scaled_rank_tol(aab, scale)), cap, 1e-8));
    }
}

TEST(AlignedSvds, ScalingFreedomKeepsRol)
{
    Rng rng(90);
    for (int trial = 0; trial < 20; ++trial) {
        const auto [a, b] = gen::partner_pair(rng);
        const auto [sa, sb] = aligned_svds(a, b);
        std::uniform_real_distribution<double> d(0.2, 5.0);
        std::vector<double> s1(sa.rank()), s2(sb.rank());
        for (auto& x : s1) x = d(rng);
        for (auto& x : s2) x = d(rng);
        const Matrix a2 = sa.left_vectors() * Matrix::diagonal(s1.size(), s1.size(), s1) *
                          adjoint(sa.right_vectors());
        const Matrix b2 = sb.left_vectors() * Matrix::diagonal(s2.size(), s2.size(), s2) *
                          adjoint(sb.right_vectors());
        EXPECT_TRUE(full_rol(a2, b2));
    }
}

TEST(AlignedSvds, SomeNotAnySvd)
{
    Rng rng(404);
    const Matrix a = gen::random_rank(3, 4, 2, rng);
    const Matrix ub = random_unitary(4, rng);
    const Matrix b = ub;
    SvdFactors naive{ub, std::vector<double>(4, 1.0), adjoint(b) * ub};
    EXPECT_LE(rel_diff(naive.reconstruct(), b), 1e-12);
    const SvdFactors svd_a = compute_svd(a);
    EXPECT_FALSE(span_condition(a, b, svd_a, naive).equal);

    const auto [sa, sb] = aligned_svds(a, b);
    EXPECT_TRUE(span_condition(a, b, sa, sb).equal);
}

TEST(DerivedRols, Counterexample)
{
    const auto [a, b] = fixtures::counterexample();
    const DerivedRols d = derived_rols_check(a, b);
    EXPECT_EQ(d.residuals.size(), 13u);
    EXPECT_LE(d.max_residual(), 1e-9);
}

TEST(DerivedRols, ZeroProduct)
{
    const auto [a, b] = fixtures::zero_product();
    EXPECT_LE(derived_rols_check(a, b).max_residual(), 1e-12);
}

TEST(DerivedRols, RejectsFailingPair)
{
    const auto [a, b] = fixtures::intro();
    EXPECT_THROW(derived_rols_check(a, b), RolNotSatisfied);
}

TEST(DerivedRols, Partners)
{
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const auto [a, b] = gen::partner_pair(rng);
        EXPECT_LE(derived_rols_check(a, b).max_residual(), 1e-8);
    }
}

TEST(Listings, Pair12ListingParameters)
{
    PairSpec spec{.m = 40, .n = 21, .k = 30, .rank_a = 6, .rank_b = 8, .shared = 3, .seed = 1};
    const auto [a, b] = construct_pair_12(spec);
    const RolReport r = classify_pair(a, b);
    EXPECT_EQ(r.penrose_class.label(), "{1,2}");
    EXPECT_FALSE(r.rol_holds);
    EXPECT_EQ(r.rank_ab, 3u);
    EXPECT_EQ(count_zero_angles(r.angles), 3u);
    EXPECT_TRUE(r.angles_0_or_right);
}

TEST(Listings, Pair12ZeroOverlap)
{
    PairSpec spec{.m = 5, .n = 6, .k = 4, .rank_a = 3, .rank_b = 2, .shared = 0, .seed = 3};
    const auto [a, b] = construct_pair_12(spec);
    EXPECT_LE(fro_norm(a * b), 1e-12);
    EXPECT_TRUE(full_rol(a, b));
}

TEST(Listings, Pair12Seeds)
{
    Rng rng(12);
    int degenerate = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        PairSpec spec;
        spec.n = gen::uniform_index(rng, 5, 12);
        spec.rank_a = gen::uniform_index(rng, 3, spec.n - 2);
        spec.rank_b = gen::uniform_index(rng, 2, spec.n - spec.rank_a + 1);
        // N = r_A = r_B makes range(A^*) = range(B), where the full ROL is automatic.
        const std::size_t excess = spec.rank_a + spec.rank_b > spec.n ? spec.rank_a + spec.rank_b - spec.n : 0;
        std::size_t top = std::min(spec.rank_a, spec.rank_b);
        if (spec.rank_a == spec.rank_b) --top;
        spec.shared = gen::uniform_index(rng, std::max<std::size_t>(1, excess), top);
        spec.m = gen::uniform_index(rng, spec.rank_a, 12);
        spec.k = gen::uniform_index(rng, spec.rank_b, 12);
        spec.seed = seed;
        spec.field = gen::random_field(rng);
        auto [a, b] = construct_pair_12(spec);
        WeakClass w = classify_123_124(a, b);
        EXPECT_TRUE(w.is12);
        if (w.is1234) {
            ++degenerate;
            spec.seed += 1000;
            std::tie(a, b) = construct_pair_12(spec);
            w = classify_123_124(a, b);
            EXPECT_TRUE(w.is12);
            EXPECT_FALSE(w.is1234) << "seed " << seed << " degenerate twice: n=" << spec.n
                                   << " rA=" << spec.rank_a << " rB=" << spec.rank_b
                                   << " N=" << spec.shared;
        }
        EXPECT_EQ(numerical_rank(a * b), spec.shared);
    }
    RecordProperty("degenerate_draws", degenerate);
}

TEST(Listings, Pair123ListingParameters)
{
    PairSpec spec{.m = 40, .n = 21, .k = 30, .rank_a = 6, .rank_b = 8, .shared = 3, .seed = 5};
    const auto [a, b] = construct_pair_123(spec);
    const WeakClass w = classify_123_124(a, b);
    EXPECT_TRUE(w.is123);
    EXPECT_FALSE(w.is124);
    EXPECT_TRUE(w.consistent());
    const Matrix xab = pinv(b) * pinv(a) * a * b;
    EXPECT_GT(fro_norm(xab - adjoint(xab)), 1e-6);
}

TEST(Listings, Pair123FullCase)
{
    PairSpec spec{.m = 5, .n = 7, .k = 4, .rank_a = 4, .rank_b = 2, .shared = 2, .seed = 2};
    // N = r_B keeps range(B) inside range(A^*), but a mix across distinct sigma
    // is not spanned by singular vectors; equal sigma inside the overlap is.
    spec.sigma_a = std::vector<double>{4, 3, 1, 1};
    const auto [a, b] = construct_pair_123(spec);
    EXPECT_TRUE(full_rol(a, b));
}

TEST(Listings, Pair124Mirror)
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        PairSpec spec{.m = 7, .n = 8, .k = 6, .rank_a = 4, .rank_b = 3, .shared = 2, .seed = seed};
        spec.field = seed % 2 ? Field::Complex : Field::Real;
        const auto [a, b] = construct_pair_124(spec);
        EXPECT_EQ(a.rows(), 7u);
        EXPECT_EQ(b.cols(), 6u);
        const WeakClass w = classify_123_124(a, b);
        EXPECT_TRUE(w.is124);
        EXPECT_FALSE(w.is123);
        EXPECT_TRUE(w.consistent());
    }
}

TEST(Listings, Infeasible)
{
    PairSpec spec{.m = 4, .n = 5, .k = 4, .rank_a = 3, .rank_b = 3, .shared = 0, .seed = 0};
    EXPECT_THROW(construct_pair_12(spec), PlanInfeasible);
    spec.shared = 4;
    EXPECT_THROW(construct_pair_12(spec), PlanInfeasible);
    spec = {.m = 2, .n = 5, .k = 4, .rank_a = 3, .rank_b = 1, .shared = 1};
    EXPECT_THROW(construct_pair_123(spec), PlanInfeasible);
    spec = {.m = 4, .n = 5, .k = 4, .rank_a = 2, .rank_b = 2, .shared = 1};
    spec.sigma_b = std::vector<double>{1};
    EXPECT_THROW(construct_pair_12(spec), PlanInfeasible);
}

TEST(Properties, EquivalenceClosure)
{
    Rng rng(1234);
    for (std::size_t i = 0; i < 150; ++i) {
        const auto [a, b] = gen::mixed_pair(rng, i);
        const RolReport r = classify_pair(a, b);
        EXPECT_TRUE(r.consistent()) << "pair " << i;
        EXPECT_TRUE(twelve_way_suite(a, b).all_agree()) << "pair " << i;
        EXPECT_TRUE(classify_123_124(a, b).consistent()) << "pair " << i;
    }
}

TEST(Properties, ZeroAnglesCountRankUnder12)
{
    Rng rng(99);
    for (std::size_t i = 0; i < 60; ++i) {
        const auto [a, b] = gen::mixed_pair(rng, i);
        const RolReport r = classify_pair(a, b);
        if (r.rank_a == 0 || r.rank_b == 0 || !r.penrose_class.is_12()) continue;
        EXPECT_EQ(r.rank_ab, count_zero_angles(r.angles)) << "pair " << i;
    }
}

TEST(Properties, TwelveWayTransfer)
{
    Rng rng(17);
    for (std::size_t i = 0; i < 40; ++i) {
        const auto [a, b] = gen::mixed_pair(rng, i);
        const bool base = twelve_way_suite(a, b).verdict();
        EXPECT_EQ(base, twelve_way_suite(adjoint(a) * a, b * adjoint(b)).verdict()) << i;
        EXPECT_EQ(base, twelve_way_suite(pinv(a) * a, b * pinv(b)).verdict()) << i;
    }
}

TEST(Properties, Unconditional12Family)
{
    Rng rng(18);
    for (int trial = 0; trial < 30; ++trial) {
        const Field f = gen::random_field(rng);
        const std::size_t m = gen::uniform_index(rng, 1, 7), n = gen::uniform_index(rng, 1, 7),
                          k = gen::uniform_index(rng, 1, 7);
        const Matrix a = gen::random_rank(m, n, gen::uniform_index(rng, 0, std::min(m, n)), rng, f);
        const Matrix b = gen::random_rank(n, k, gen::uniform_index(rng, 0, std::min(n, k)), rng, f);
        const Matrix ab = a * b, pab = pinv(ab);
        EXPECT_TRUE(penrose_conditions(ab * adjoint(b), pinv(adjoint(b)) * pab, 1e-8).is_12());
        EXPECT_TRUE(penrose_conditions(ab * pinv(b), b * pab, 1e-8).is_12());
        EXPECT_TRUE(penrose_conditions(adjoint(a) * ab, pab * pinv(adjoint(a)), 1e-8).is_12());
        EXPECT_TRUE(penrose_conditions(pinv(a) * ab, pab * a, 1e-8).is_12());
    }
}
