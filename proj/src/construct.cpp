#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "rol/rolkit.hpp"

namespace rol {

namespace {

/// U diag(sigma) V^* from thin factors.
Matrix compose(const Matrix& u, const std::vector<double>& sigma, const Matrix& v)
{
    Matrix us = u;
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < sigma.size(); ++j) us.set(i, j, u(i, j) * sigma[j]);
    return us * adjoint(v);
}

[[noreturn]] void infeasible(const std::string& what)
{
    throw PlanInfeasible(what);
}

std::vector<double> checked_sigma(const std::optional<std::vector<double>>& given, std::size_t r,
                                  Rng& rng, const char* which)
{
    if (!given) return random_integer_sigma(r, rng);
    if (given->size() != r) {
        std::ostringstream msg;
        msg << which << " has " << given->size() << " values but the rank is " << r;
        infeasible(msg.str());
    }
    for (double s : *given)
        if (!(s > 0.0)) infeasible(std::string(which) + " values must be positive");
    return *given;
}

/// SVD of M whose right singular vectors each lie in `first` or in `second`
/// (complementary subspaces that both reduce M^*M).
SvdFactors aligned_factor(const Matrix& m, const Subspace& first, const Subspace& second,
                          double rank_tol)
{
    struct Piece {
        double sigma;
        Matrix v;
        int origin;
    };
    std::vector<Piece> pieces;
    std::vector<Matrix> nulls;
    const auto s = singular_values(m);
    const double threshold = s.empty() ? 0.0 : rank_tol * s.front();

    int origin = 0;
    for (const Subspace* part : {&first, &second}) {
        if (part->dim() > 0) {
            const Matrix mx = m * part->basis();
            const auto sx = singular_values(mx);
            const double rel = sx.empty() || sx.front() == 0.0 ? 1.0 : threshold / sx.front();
            const SvdFactors svd = compute_svd(mx, rel);
            for (std::size_t i = 0; i < svd.rank(); ++i)
                pieces.push_back({svd.sigma[i], part->basis() * svd.V.column(i), origin});
            const Matrix null_part = part->basis() * svd.right_null();
            for (std::size_t j = 0; j < null_part.cols(); ++j) nulls.push_back(null_part.column(j));
        }
        ++origin;
    }
    const std::size_t r = numerical_rank(m, rank_tol);
    if (pieces.size() != r)
        throw RolNotSatisfied("the subspace split does not reduce the Gram matrix");

    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& x, const Piece& y) { return x.sigma > y.sigma; });
    const double gap = r == 0 ? 0.0 : kGapTol * pieces.front().sigma;
    for (std::size_t begin = 0; begin < r;) {
        std::size_t end = begin + 1;
        while (end < r && pieces[end - 1].sigma - pieces[end].sigma <= gap) ++end;
        std::stable_partition(pieces.begin() + static_cast<std::ptrdiff_t>(begin),
                              pieces.begin() + static_cast<std::ptrdiff_t>(end),
                              [](const Piece& p) { return p.origin == 0; });
        begin = end;
    }

    const std::size_t rows = m.rows(), cols = m.cols();
    const Field field = promote(m.field(), first.basis().field());
    Matrix v(cols, cols, field);
    Matrix u(rows, r, field);
    SvdFactors out;
    for (std::size_t j = 0; j < r; ++j) {
        out.sigma.push_back(pieces[j].sigma);
        const Matrix uj = m * pieces[j].v;
        for (std::size_t i = 0; i < cols; ++i) v.set(i, j, pieces[j].v(i, 0));
        for (std::size_t i = 0; i < rows; ++i) u.set(i, j, uj(i, 0) / pieces[j].sigma);
    }
    for (std::size_t j = 0; j < nulls.size(); ++j)
        for (std::size_t i = 0; i < cols; ++i) v.set(i, r + j, nulls[j](i, 0));
    out.V = v;
    out.U = hcat(u, complete_orthonormal(u, std::numeric_limits<double>::infinity()));
    return out;
}

Subspace span_of_columns(const Matrix& m, const std::vector<std::size_t>& keep)
{
    if (keep.empty()) return Subspace::zero(m.rows(), m.field());
    return Subspace::span(m.select_columns(keep));
}

} // namespace

std::vector<double> random_integer_sigma(std::size_t r, Rng& rng)
{
    std::vector<double> out(r);
    if (r == 0) return out;
    std::uniform_int_distribution<std::size_t> dist(1, r);
    for (auto& s : out) s = static_cast<double>(dist(rng));
    return out;
}

Matrix construct_partner(const Matrix& a, const ConstructionPlan& plan)
{
    const SvdFactors svd = compute_svd(a);
    const std::size_t n = a.cols(), ra = svd.rank(), rb = plan.rank_b();
    std::ostringstream msg;
    if (plan.s > ra) msg << "J has " << plan.s << " indices but rank(A) = " << ra;
    else if (plan.t > n - ra) msg << "t = " << plan.t << " exceeds dim null(A) = " << n - ra;
    else if (rb > std::min(n, plan.k)) msg << "rank(B) = " << rb << " exceeds min(n, k)";
    else if (rb == 0) msg << "rank(B) must be positive";
    else if (plan.sigma_b.size() != rb) msg << "sigma_B needs " << rb << " values";
    if (!msg.str().empty()) infeasible(msg.str());
    for (double s : plan.sigma_b)
        if (!(s > 0.0)) infeasible("sigma_B values must be positive");

    std::vector<std::size_t> j(plan.s);
    std::iota(j.begin(), j.end(), std::size_t{0});
    if (plan.j_indices) {
        j = *plan.j_indices;
        auto sorted = j;
        std::sort(sorted.begin(), sorted.end());
        if (j.size() != plan.s || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
            (!sorted.empty() && sorted.back() >= ra))
            infeasible("J must hold s distinct indices below rank(A)");
    }

    Rng rng(plan.seed);
    const Field field = a.field();
    Matrix recycled = svd.V.select_columns(j);
    if (plan.mix_within_j && plan.s > 0) recycled = recycled * random_unitary(plan.s, rng, field);
    const Matrix ub = hcat(recycled, svd.V.columns(ra, plan.t));
    const Matrix vb = random_unitary(plan.k, rng, field).columns(0, rb);
    return compose(ub, plan.sigma_b, vb).as_field(field);
}

Matrix construct_partner_left(const Matrix& b, const ConstructionPlan& plan)
{
    return adjoint(construct_partner(adjoint(b), plan));
}

std::pair<SvdFactors, SvdFactors> aligned_svds(const Matrix& a, const Matrix& b,
                                              const Tolerances& tols)
{
    if (a.cols() != b.rows()) throw DimensionMismatch("A and B are not conformable");
    const RolReport report = classify_pair(a, b, tols);
    if (!report.rol_holds || !report.greville.all())
        throw RolNotSatisfied("pinv(AB) != pinv(B) pinv(A); no aligned SVDs exist");

    const Subspace rb = range_basis(b, tols.rank_tol);
    const Subspace ras = range_basis(adjoint(a), tols.rank_tol);
    const double rank_a_tol = tols.rank_tol.value_or(default_rank_tol(a.rows(), a.cols()));
    const double rank_b_tol = tols.rank_tol.value_or(default_rank_tol(b.rows(), b.cols()));

    SvdFactors svd_a = aligned_factor(a, rb, rb.complement(), rank_a_tol);
    const SvdFactors bs = aligned_factor(adjoint(b), ras, ras.complement(), rank_b_tol);
    SvdFactors svd_b{bs.V, bs.sigma, bs.U};
    return {std::move(svd_a), std::move(svd_b)};
}

SpanCondition span_condition(const Matrix& a, const Matrix& b, const SvdFactors& svd_a,
                             const SvdFactors& svd_b, double tol)
{
    if (a.cols() != b.rows()) throw DimensionMismatch("A and B are not conformable");
    const double na = fro_norm(a), nb = fro_norm(b);
    std::vector<std::size_t> keep_b, keep_a;
    for (std::size_t i = 0; i < svd_b.rank(); ++i)
        if (fro_norm(a * svd_b.U.column(i)) > tol * na) keep_b.push_back(i);
    const Matrix bs = adjoint(b);
    for (std::size_t i = 0; i < svd_a.rank(); ++i)
        if (fro_norm(bs * svd_a.V.column(i)) > tol * nb) keep_a.push_back(i);

    SpanCondition out;
    out.lhs = span_of_columns(svd_b.U, keep_b);
    out.rhs = span_of_columns(svd_a.V, keep_a);
    out.equal = subspace_eq(out.lhs, out.rhs, tol);
    return out;
}

std::pair<Matrix, Matrix> construct_pair_12(const PairSpec& spec)
{
    const auto [m, n, k, ra, rb, shared] =
        std::tuple{spec.m, spec.n, spec.k, spec.rank_a, spec.rank_b, spec.shared};
    if (ra == 0 || rb == 0) infeasible("ranks must be positive");
    if (ra > std::min(m, n) || rb > std::min(n, k)) infeasible("rank exceeds matrix dimensions");
    if (shared > std::min(ra, rb)) infeasible("N exceeds min(r_A, r_B)");
    if (ra + rb - shared > n) infeasible("r_A + r_B - N exceeds n");

    Rng rng(spec.seed);
    const Field f = spec.field;
    const Matrix w = random_unitary(n, rng, f);
    const Matrix va = w.columns(0, ra) * random_unitary(ra, rng, f);
    const Matrix ub = hcat(w.columns(0, shared), w.columns(ra, rb - shared)) * random_unitary(rb, rng, f);
    const auto sa = checked_sigma(spec.sigma_a, ra, rng, "sigma_A");
    const auto sb = checked_sigma(spec.sigma_b, rb, rng, "sigma_B");
    const Matrix ua = random_unitary(m, rng, f).columns(0, ra);
    const Matrix vb = random_unitary(k, rng, f).columns(0, rb);
    return {compose(ua, sa, va).as_field(f), compose(ub, sb, vb).as_field(f)};
}

std::pair<Matrix, Matrix> construct_pair_123(const PairSpec& spec)
{
    const auto [m, n, k, ra, rb, shared] =
        std::tuple{spec.m, spec.n, spec.k, spec.rank_a, spec.rank_b, spec.shared};
    if (ra == 0 || rb == 0) infeasible("ranks must be positive");
    if (ra > std::min(m, n) || rb > std::min(n, k)) infeasible("rank exceeds matrix dimensions");
    if (shared > std::min(ra, rb)) infeasible("N exceeds min(r_A, r_B)");
    if (ra - shared + rb > n) infeasible("r_A - N + r_B exceeds n");

    Rng rng(spec.seed);
    const Field f = spec.field;
    const Matrix va = random_unitary(n, rng, f);
    const Matrix cb = va.columns(ra - shared, rb) * random_unitary(rb, rng, f);
    const Matrix ua = random_unitary(m, rng, f).columns(0, ra);
    const Matrix vb = random_unitary(k, rng, f).columns(0, rb);
    const auto sa = checked_sigma(spec.sigma_a, ra, rng, "sigma_A");
    const auto sb = checked_sigma(spec.sigma_b, rb, rng, "sigma_B");
    return {compose(ua, sa, va.columns(0, ra)).as_field(f), compose(cb, sb, vb).as_field(f)};
}

std::pair<Matrix, Matrix> construct_pair_124(const PairSpec& spec)
{
    PairSpec mirrored = spec;
    mirrored.m = spec.k;
    mirrored.k = spec.m;
    mirrored.rank_a = spec.rank_b;
    mirrored.rank_b = spec.rank_a;
    mirrored.sigma_a = spec.sigma_b;
    mirrored.sigma_b = spec.sigma_a;
    const auto [a, b] = construct_pair_123(mirrored);
    return {adjoint(b), adjoint(a)};
}

} // namespace rol
