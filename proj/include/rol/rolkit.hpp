#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rol/geninv.hpp"
#include "rol/matrix.hpp"
#include "rol/subspace.hpp"
#include "rol/svd.hpp"

namespace rol {

/// Thresholds shared by every classifier. rank_tol, when set, overrides the
/// relative rank cut-off of every pseudoinverse taken during classification.
struct Tolerances {
    double tol = kClassifyTol;
    double angle_tol = kAngleTol;
    std::optional<double> rank_tol;
};

/// A predicate verdict with the scaled residual it was decided on.
struct Check {
    double residual = 0.0;
    bool holds = false;
};

struct GrevilleResult {
    Check range_in_b;      // range(A^*AB) ⊆ range(B)
    Check range_in_astar;  // range(BB^*A^*) ⊆ range(A^*)
    Check identity;        // pinv(A) A B B^* A^* A B pinv(B) = B B^* A^* A

    bool all() const { return range_in_b.holds && range_in_astar.holds && identity.holds; }
};

struct RolReport {
    InverseClass penrose_class;   // of pinv(B) pinv(A) with respect to AB
    double rol_residual = 0.0;    // ||pinv(AB) - pinv(B) pinv(A)||_F
    double rol_relative = 0.0;    // the same over 1 + max of the two norms
    bool rol_holds = false;       // rol_relative <= tol
    GrevilleResult greville;
    Check commute_pAA_BB;         // pinv(A)A BB^* = BB^* pinv(A)A
    Check commute_BpB_AA;         // B pinv(B) A^*A = A^*A B pinv(B)
    Check proj_test;              // B pinv(AB) A is an orthogonal projection
    Check squared_rol;            // pinv(A^*A BB^*) = pinv(BB^*) pinv(A^*A)
    Check block_form;             // V_A^* U_B has the [[Q,0],[0,0]] shape
    AngleSpectrum angles;         // between range(A^*) and range(B)
    bool angles_0_or_right = false;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
    std::size_t rank_ab = 0;
    std::size_t dim_intersection = 0;
    Tolerances tolerances;

    /// Verdicts of the seven predicates that are each equivalent to the ROL.
    std::array<bool, 7> full_rol_verdicts() const;
    bool consistent() const;
};

/// Greville's conditions ii) a, ii) b and iii).
GrevilleResult greville_check(const Matrix& a, const Matrix& b, const Tolerances& tols = {});

RolReport classify_pair(const Matrix& a, const Matrix& b, const Tolerances& tols = {});

/// Singular values of V_{A,r}^* U_{B,r} all near 0 or 1, as many ones as
/// dim(range(A^*) ∩ range(B)), and Greville's conditions hold.
Check block_form_check(const Matrix& a, const Matrix& b, const Tolerances& tols = {});

/// The twelve conditions equivalent to pinv(B)pinv(A) being a {1,2}-inverse
/// of AB, in order i) .. xii).
struct TwelveWay {
    std::array<Check, 12> items;
    static const std::array<const char*, 12>& names();
    bool all_agree() const;
    bool verdict() const { return items[0].holds; }
};
TwelveWay twelve_way_suite(const Matrix& a, const Matrix& b, const Tolerances& tols = {});

/// {1,2,3} and {1,2,4} membership of pinv(B)pinv(A), each decided three ways.
struct WeakClass {
    bool is12 = false;
    bool is123 = false;
    bool is124 = false;
    bool is1234 = false;
    std::array<Check, 3> criteria123;  // range equality, projection, AB pinv(AB)
    std::array<Check, 3> criteria124;
    InverseClass penrose;
    /// Each trio agrees internally and with the Penrose residuals.
    bool consistent() const;
};
WeakClass classify_123_124(const Matrix& a, const Matrix& b, const Tolerances& tols = {});

/// Residuals of the ten reverse-order identities implied by the ROL and of the
/// three equal projections onto range(AB). Throws RolNotSatisfied when the ROL
/// fails for (A, B).
struct DerivedRols {
    std::vector<std::pair<std::string, double>> residuals;
    double max_residual() const;
};
DerivedRols derived_rols_check(const Matrix& a, const Matrix& b, const Tolerances& tols = {});

/// Partner construction plan: s right singular vectors of A (the set J) and
/// t null-space directions of A become the left singular vectors of B.
struct ConstructionPlan {
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t k = 1;                       // columns of B
    std::vector<double> sigma_b;             // r_B = s + t positive values
    std::uint64_t seed = 0;
    std::optional<std::vector<std::size_t>> j_indices;  // default: first s
    bool mix_within_j = true;

    std::size_t rank_b() const { return s + t; }
};

/// B (n x k, rank s + t) with pinv(AB) = pinv(B) pinv(A) and rank(AB) = s.
/// Throws PlanInfeasible when the plan does not fit A.
Matrix construct_partner(const Matrix& a, const ConstructionPlan& plan);

/// A (plan.k x n) with pinv(AB) = pinv(B) pinv(A), via the partner of B^*.
Matrix construct_partner_left(const Matrix& b, const ConstructionPlan& plan);

/// SVDs of A and B in which every right singular vector of A lies in range(B)
/// or null(B^*), and every left singular vector of B in range(A^*) or null(A).
/// Within a block of equal singular values the vectors from range(B)
/// (respectively range(A^*)) come first, so sigma is non-increasing only up to
/// the grouping tolerance inside such a block.
/// Throws RolNotSatisfied unless the ROL holds.
std::pair<SvdFactors, SvdFactors> aligned_svds(const Matrix& a, const Matrix& b,
                                              const Tolerances& tols = {});

/// The two spans compared by the necessary condition for given SVDs:
/// lhs = span{u_{B,i} : u_{B,i} ∉ null(A)}, rhs = span{v_{A,i} : v_{A,i} ∉ null(B^*)}.
struct SpanCondition {
    Subspace lhs;
    Subspace rhs;
    bool equal = false;
};
SpanCondition span_condition(const Matrix& a, const Matrix& b, const SvdFactors& svd_a,
                             const SvdFactors& svd_b, double tol = kClassifyTol);

/// Singular values for the listing constructors: user-supplied positive
/// values, or integers drawn uniformly from 1..r.
struct PairSpec {
    std::size_t m = 0, n = 0, k = 0;
    std::size_t rank_a = 0, rank_b = 0;
    std::size_t shared = 0;  // N
    std::uint64_t seed = 0;
    Field field = Field::Real;
    std::optional<std::vector<double>> sigma_a;
    std::optional<std::vector<double>> sigma_b;
};

/// Angles between range(A^*) and range(B) are exactly 0 (N times) and pi/2;
/// the shared directions are remixed away from the singular vectors, so the
/// class is {1,2} and generically nothing stronger.
std::pair<Matrix, Matrix> construct_pair_12(const PairSpec& spec);

/// range(B) spanned by a unitary mix of r_B consecutive right singular vectors
/// of A, N of them inside range(A^*): class {1,2,3}.
std::pair<Matrix, Matrix> construct_pair_123(const PairSpec& spec);

/// Adjoint mirror of construct_pair_123: class {1,2,4}.
std::pair<Matrix, Matrix> construct_pair_124(const PairSpec& spec);

/// Integer singular values 1..r drawn from rng, as in the reference listings.
std::vector<double> random_integer_sigma(std::size_t r, Rng& rng);

} // namespace rol
