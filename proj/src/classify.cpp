#include <algorithm>
#include <cmath>
#include <numbers>

#include "rol/rolkit.hpp"

namespace rol {

namespace {

Check decide(double residual, double tol)
{
    return Check{residual, residual <= tol};
}

void require_conformable(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("A has " + std::to_string(a.cols()) + " columns but B has " +
                                std::to_string(b.rows()) + " rows");
}

/// ||(I - B1 B1^*) B2|| / (1 + ||B2||): how far S2 sticks out of S1.
double containment_residual(const Subspace& s1, const Subspace& s2)
{
    if (s2.dim() == 0) return 0.0;
    const Matrix& b2 = s2.basis();
    return fro_norm(b2 - s1.basis() * (adjoint(s1.basis()) * b2)) / (1.0 + fro_norm(b2));
}

double equality_residual(const Subspace& s1, const Subspace& s2)
{
    if (s1.dim() != s2.dim()) return 1.0;
    return std::max(containment_residual(s1, s2), containment_residual(s2, s1));
}

/// Largest distance of a value to the set {0, 1}.
double distance_to_0_or_1(const std::vector<double>& values)
{
    double worst = 0.0;
    for (double v : values) worst = std::max(worst, std::min(std::abs(v), std::abs(v - 1.0)));
    return worst;
}

double off_diagonal_norm(const Matrix& m)
{
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

/// All pseudoinverses and projections a classification needs, computed once.
/// Products are rank-thresholded against the norms of their factors.
struct PairContext {
    Matrix a, b, ab;
    Matrix pa, pb, pab;
    Matrix x;    // pinv(B) pinv(A)
    Matrix p_a;  // pinv(A) A, projection onto range(A^*)
    Matrix p_b;  // B pinv(B), projection onto range(B)
    double na = 0.0, nb = 0.0;  // spectral norms
    double base_tol = 0.0;

    PairContext(const Matrix& a_, const Matrix& b_, const Tolerances& tols)
        : a(a_), b(b_), ab(a_ * b_)
    {
        const std::size_t dim = std::max({a.rows(), a.cols(), b.cols()});
        base_tol = tols.rank_tol.value_or(default_rank_tol(dim, dim));
        na = spectral_norm(a);
        nb = spectral_norm(b);
        pa = pinv(a, tols.rank_tol);
        pb = pinv(b, tols.rank_tol);
        pab = pinv_scaled(ab, na * nb);
        x = pb * pa;
        p_a = pa * a;
        p_b = b * pb;
    }

    double tol_for(const Matrix& m, double scale) const
    {
        return scaled_rank_tol(m, scale, base_tol);
    }
    Matrix pinv_scaled(const Matrix& m, double scale) const { return pinv(m, tol_for(m, scale)); }
    Subspace range_scaled(const Matrix& m, double scale) const
    {
        return range_basis(m, tol_for(m, scale));
    }
    std::size_t rank_scaled(const Matrix& m, double scale) const
    {
        return numerical_rank(m, tol_for(m, scale));
    }

    static double spectral_norm(const Matrix& m)
    {
        const auto sv = singular_values(m);
        return sv.empty() ? 0.0 : sv.front();
    }
};

GrevilleResult greville_from(const PairContext& c, const Tolerances& tols)
{
    const Matrix as = adjoint(c.a);
    const Matrix bs = adjoint(c.b);
    const Matrix aab = as * c.ab;
    const Matrix bba = c.b * (bs * as);
    GrevilleResult out;
    out.range_in_b = decide(rel_norm(aab - c.p_b * aab, aab), tols.tol);
    out.range_in_astar = decide(rel_norm(bba - c.p_a * bba, bba), tols.tol);
    const Matrix lhs = c.p_a * c.b * bs * aab * c.pb;
    const Matrix rhs = c.b * bs * as * c.a;
    out.identity = decide(rel_diff(lhs, rhs), tols.tol);
    return out;
}

AngleSpectrum angles_between(const Subspace& s1, const Subspace& s2)
{
    if (s1.dim() == 0 || s2.dim() == 0) return AngleSpectrum{{}, s1.dim(), s2.dim()};
    return principal_angles(s1, s2);
}

Check block_form_from(const Subspace& ra, const Subspace& rb, std::size_t dim_cap,
                      const GrevilleResult& greville, const Tolerances& tols)
{
    std::vector<double> sv;
    if (ra.dim() > 0 && rb.dim() > 0) sv = singular_values(adjoint(ra.basis()) * rb.basis());
    const double residual = distance_to_0_or_1(sv);
    const auto ones = static_cast<std::size_t>(
        std::count_if(sv.begin(), sv.end(), [](double s) { return s > 0.5; }));
    return Check{residual, residual <= tols.tol && ones == dim_cap && greville.all()};
}

} // namespace

std::array<bool, 7> RolReport::full_rol_verdicts() const
{
    return {rol_holds,
            greville.range_in_b.holds && greville.range_in_astar.holds,
            greville.identity.holds,
            commute_pAA_BB.holds && commute_BpB_AA.holds,
            squared_rol.holds,
            proj_test.holds,
            block_form.holds};
}

bool RolReport::consistent() const
{
    const auto v = full_rol_verdicts();
    const bool all_same = std::all_of(v.begin(), v.end(), [&](bool x) { return x == v[0]; });
    // When the ROL holds, X = pinv(AB) and rank(AB) = dim of the intersection.
    const bool class_ok = penrose_class.is_1234() == v[0];
    const bool rank_ok = !v[0] || rank_ab == dim_intersection;
    return all_same && class_ok && rank_ok;
}

GrevilleResult greville_check(const Matrix& a, const Matrix& b, const Tolerances& tols)
{
    require_conformable(a, b);
    return greville_from(PairContext(a, b, tols), tols);
}

RolReport classify_pair(const Matrix& a, const Matrix& b, const Tolerances& tols)
{
    require_conformable(a, b);
    const PairContext c(a, b, tols);
    RolReport r;
    r.tolerances = tols;
    r.penrose_class = penrose_conditions(c.ab, c.x, tols.tol);
    r.rol_residual = fro_norm(c.pab - c.x);
    r.rol_relative = rel_diff(c.pab, c.x);
    r.rol_holds = r.rol_relative <= tols.tol;
    r.greville = greville_from(c, tols);

    const Matrix as = adjoint(a);
    const Matrix aa = as * a;
    const Matrix bb = b * adjoint(b);
    r.commute_pAA_BB = decide(rel_diff(c.p_a * bb, bb * c.p_a), tols.tol);
    r.commute_BpB_AA = decide(rel_diff(c.p_b * aa, aa * c.p_b), tols.tol);
    r.proj_test = decide(projection_residual(b * c.pab * a), tols.tol);
    const double na2 = c.na * c.na, nb2 = c.nb * c.nb;
    r.squared_rol = decide(rel_diff(c.pinv_scaled(aa * bb, na2 * nb2),
                                    c.pinv_scaled(bb, nb2) * c.pinv_scaled(aa, na2)),
                           tols.tol);

    const Subspace ra = range_basis(as, tols.rank_tol);
    const Subspace rb = range_basis(b, tols.rank_tol);
    r.rank_a = ra.dim();
    r.rank_b = rb.dim();
    r.rank_ab = c.rank_scaled(c.ab, c.na * c.nb);
    r.dim_intersection = intersect(ra, rb, tols.angle_tol).dim();
    r.angles = angles_between(ra, rb);
    r.angles_0_or_right = angles_all_0_or_right(r.angles, tols.angle_tol);
    r.block_form = block_form_from(ra, rb, r.dim_intersection, r.greville, tols);
    return r;
}

Check block_form_check(const Matrix& a, const Matrix& b, const Tolerances& tols)
{
    require_conformable(a, b);
    const PairContext c(a, b, tols);
    const Subspace ra = range_basis(adjoint(a), tols.rank_tol);
    const Subspace rb = range_basis(b, tols.rank_tol);
    const std::size_t cap = intersect(ra, rb, tols.angle_tol).dim();
    return block_form_from(ra, rb, cap, greville_from(c, tols), tols);
}

const std::array<const char*, 12>& TwelveWay::names()
{
    static const std::array<const char*, 12> kNames{
        "i: pinv(B)pinv(A) is a {1,2}-inverse of AB",
        "ii: AB is a {1,2}-inverse of pinv(B)pinv(A)",
        "iii: range(pinv(A)AB) in range(B)",
        "iv: range(B pinv(B) pinv(A)) in range(pinv(A))",
        "v: principal angles in {0, pi/2}",
        "vi: pinv(A)A B pinv(B) is an orthogonal projection",
        "vii: B pinv(B) pinv(A)A is an orthogonal projection",
        "viii: pinv(A)A and B pinv(B) commute",
        "ix: pinv(A)A and B pinv(B) simultaneously diagonalizable",
        "x: parallel-sum identity",
        "xi: (pinv(A)A B pinv(B))^2 = B pinv(B) pinv(A)A",
        "xii: eigenvalues of pinv(A)A B pinv(B) pinv(A)A in {0,1}",
    };
    return kNames;
}

bool TwelveWay::all_agree() const
{
    return std::all_of(items.begin(), items.end(),
                       [&](const Check& c) { return c.holds == items[0].holds; });
}

TwelveWay twelve_way_suite(const Matrix& a, const Matrix& b, const Tolerances& tols)
{
    require_conformable(a, b);
    const PairContext c(a, b, tols);
    const Matrix& p = c.p_a;
    const Matrix& q = c.p_b;
    const Matrix pq = p * q;
    const Matrix qp = q * p;
    TwelveWay out;
    auto& it = out.items;

    const InverseClass forward = penrose_conditions(c.ab, c.x, tols.tol);
    it[0] = decide(std::max(forward.residuals[0], forward.residuals[1]), tols.tol);
    const InverseClass backward = penrose_conditions(c.x, c.ab, tols.tol);
    it[1] = decide(std::max(backward.residuals[0], backward.residuals[1]), tols.tol);

    const Matrix pab = p * b;
    it[2] = decide(rel_norm(pab - q * pab, pab), tols.tol);
    const Matrix qpa = q * c.pa;
    it[3] = decide(rel_norm(qpa - p * qpa, qpa), tols.tol);

    const AngleSpectrum spec = angles_between(range_basis(adjoint(a), tols.rank_tol),
                                              range_basis(b, tols.rank_tol));
    double angle_res = 0.0;
    for (double t : spec.angles)
        angle_res = std::max(angle_res, std::min(t, std::abs(t - std::numbers::pi / 2.0)));
    it[4] = decide(angle_res, tols.angle_tol);

    it[5] = decide(projection_residual(pq), tols.tol);
    it[6] = decide(projection_residual(qp), tols.tol);
    it[7] = decide(rel_diff(pq, qp), tols.tol);

    // Eigenvectors of P + sqrt(2) Q: when P and Q commute its eigenvalues
    // 0, 1, sqrt 2, 1 + sqrt 2 separate the joint eigenspaces, so the basis
    // diagonalizes both.
    const Matrix h = p + std::numbers::sqrt2 * q;
    const Matrix v = compute_svd(h).V;
    const Matrix vs = adjoint(v);
    const double off = std::max(off_diagonal_norm(vs * p * v), off_diagonal_norm(vs * q * v));
    it[8] = decide(off / (1.0 + std::max(fro_norm(p), fro_norm(q))), tols.tol);

    const Matrix parallel = 2.0 * p * pinv(p + q, tols.rank_tol) * q;
    it[9] = decide(rel_diff(pq, parallel), tols.tol);
    it[10] = decide(rel_diff(pq * pq, qp), tols.tol);
    it[11] = decide(distance_to_0_or_1(singular_values(p * q * p)), tols.tol);
    return out;
}

bool WeakClass::consistent() const
{
    const auto agree = [](const std::array<Check, 3>& trio, bool expected) {
        return std::all_of(trio.begin(), trio.end(),
                           [&](const Check& c) { return c.holds == expected; });
    };
    return agree(criteria123, penrose.is_123()) && agree(criteria124, penrose.is_124()) &&
           is12 == penrose.is_12();
}

WeakClass classify_123_124(const Matrix& a, const Matrix& b, const Tolerances& tols)
{
    require_conformable(a, b);
    const PairContext c(a, b, tols);
    const Matrix as = adjoint(a);
    const Matrix bs = adjoint(b);
    const Subspace cap = intersect(range_basis(as, tols.rank_tol), range_basis(b, tols.rank_tol),
                                   tols.angle_tol);

    WeakClass out;
    out.penrose = penrose_conditions(c.ab, c.x, tols.tol);
    const Matrix abx = c.ab * c.x;
    const Matrix xab = c.x * c.ab;
    out.criteria123 = {
        decide(equality_residual(c.range_scaled(as * c.ab, c.na * c.na * c.nb), cap), tols.tol),
        decide(projection_residual(abx), tols.tol),
        decide(rel_diff(abx, c.ab * c.pab), tols.tol),
    };
    out.criteria124 = {
        decide(equality_residual(c.range_scaled(b * (bs * as), c.nb * c.nb * c.na), cap), tols.tol),
        decide(projection_residual(xab), tols.tol),
        decide(rel_diff(xab, c.pab * c.ab), tols.tol),
    };
    out.is12 = out.penrose.is_12();
    out.is123 = out.penrose.is_123();
    out.is124 = out.penrose.is_124();
    out.is1234 = out.is123 && out.is124;
    return out;
}

double DerivedRols::max_residual() const
{
    double worst = 0.0;
    for (const auto& [name, r] : residuals) worst = std::max(worst, r);
    return worst;
}

DerivedRols derived_rols_check(const Matrix& a, const Matrix& b, const Tolerances& tols)
{
    require_conformable(a, b);
    const PairContext c(a, b, tols);
    if (rel_diff(c.pab, c.x) > tols.tol)
        throw RolNotSatisfied("derived identities need pinv(AB) = pinv(B) pinv(A)");

    const Matrix as = adjoint(a);
    const Matrix bs = adjoint(b);
    const Matrix aa = as * a;
    const Matrix bb = b * bs;
    const double na = c.na, nb = c.nb;
    const double npa = PairContext::spectral_norm(c.pa), npb = PairContext::spectral_norm(c.pb);
    const auto pi = [&](const Matrix& m, double scale) { return c.pinv_scaled(m, scale); };

    DerivedRols out;
    const auto add = [&](const char* name, const Matrix& lhs, const Matrix& rhs) {
        out.residuals.emplace_back(name, rel_diff(lhs, rhs));
    };
    add("pinv((AB)B^*) = pinv(B^*)pinv(AB)", pi(c.ab * bs, na * nb * nb), pi(bs, nb) * c.pab);
    add("pinv((AB)pinv(B)) = B pinv(AB)", pi(c.ab * c.pb, na * nb * npb), b * c.pab);
    add("pinv(A^*(AB)) = pinv(AB)pinv(A^*)", pi(as * c.ab, na * na * nb), c.pab * pi(as, na));
    add("pinv(pinv(A)(AB)) = pinv(AB)A", pi(c.pa * c.ab, npa * na * nb), c.pab * a);
    add("pinv((A^*A)B) = pinv(B)pinv(A^*A)", pi(aa * b, na * na * nb), c.pb * pi(aa, na * na));
    add("pinv(A(BB^*)) = pinv(BB^*)pinv(A)", pi(a * bb, na * nb * nb), pi(bb, nb * nb) * c.pa);
    add("pinv((pinv(A)A)B) = pinv(B)(pinv(A)A)", pi(c.p_a * b, nb), c.pb * c.p_a);
    add("pinv(A(B pinv(B))) = (B pinv(B))pinv(A)", pi(a * c.p_b, na), c.p_b * c.pa);
    add("pinv(pinv(B)A^*) = pinv(A^*)B", pi(c.pb * as, npb * na), pi(as, na) * b);
    add("pinv(B^*pinv(A)) = A pinv(B^*)", pi(bs * c.pa, nb * npa), a * pi(bs, nb));

    const Matrix p1 = c.ab * c.pab;
    const Matrix m2 = a * as * c.ab;
    const Matrix p2 = m2 * pi(m2, na * na * na * nb);
    const Matrix m3 = c.ab * bs * as;
    const Matrix p3 = m3 * pi(m3, na * na * nb * nb);
    add("AB pinv(AB) = (AA^*AB) pinv(AA^*AB)", p1, p2);
    add("AB pinv(AB) = (ABB^*A^*) pinv(ABB^*A^*)", p1, p3);
    add("(AA^*AB) pinv(AA^*AB) = (ABB^*A^*) pinv(ABB^*A^*)", p2, p3);
    return out;
}

} // namespace rol
