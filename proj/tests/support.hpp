#pragma once

#include <cstddef>
#include <cstdint>

#include <utility>

#include "rol/matrix.hpp"
#include "rol/rolkit.hpp"
#include "rol/svd.hpp"

namespace rol::gen {

/// Random m x n matrix of exact rank r: U_r diag(sigma) V_r^* with sigma in [1, 4].
inline Matrix random_rank(std::size_t m, std::size_t n, std::size_t r, Rng& rng,
                          Field field = Field::Real)
{
    if (r == 0) return Matrix(m, n, field);
    const Matrix u = random_unitary(m, rng, field).columns(0, r);
    const Matrix v = random_unitary(n, rng, field).columns(0, r);
    std::uniform_real_distribution<double> dist(1.0, 4.0);
    Matrix su = u;
    for (std::size_t j = 0; j < r; ++j) {
        const double s = dist(rng);
        for (std::size_t i = 0; i < m; ++i) su.set(i, j, u(i, j) * s);
    }
    return su * adjoint(v);
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Field random_field(Rng& rng)
{
    return uniform_index(rng, 0, 1) == 0 ? Field::Real : Field::Complex;
}

/// A full-ROL pair from construct_partner with a random feasible plan.
inline std::pair<Matrix, Matrix> partner_pair(Rng& rng, std::size_t max_dim = 12)
{
    const Field f = random_field(rng);
    const std::size_t m = uniform_index(rng, 1, max_dim);
    const std::size_t n = uniform_index(rng, 1, max_dim);
    const std::size_t k = uniform_index(rng, 1, max_dim);
    const std::size_t ra = uniform_index(rng, 1, std::min(m, n));
    const Matrix a = random_rank(m, n, ra, rng, f);
    ConstructionPlan plan;
    plan.k = k;
    const std::size_t budget = std::min(n, k);
    plan.s = uniform_index(rng, 0, std::min(ra, budget));
    const std::size_t t_max = std::min(n - ra, budget - plan.s);
    plan.t = uniform_index(rng, plan.s == 0 ? std::min<std::size_t>(1, t_max) : 0, t_max);
    if (plan.rank_b() == 0) plan.s = 1;
    std::uniform_real_distribution<double> sig(0.5, 3.0);
    for (std::size_t i = 0; i < plan.rank_b(); ++i) plan.sigma_b.push_back(sig(rng));
    plan.seed = rng();
    return {a, construct_partner(a, plan)};
}

/// Pairs of every flavour: full-ROL partners, the three listing classes,
/// generic random pairs and rank-deficient random pairs.
inline std::pair<Matrix, Matrix> mixed_pair(Rng& rng, std::size_t index)
{
    const Field f = random_field(rng);
    switch (index % 6) {
    case 0:
        return partner_pair(rng);
    case 1:
    case 2:
    case 3: {
        PairSpec spec;
        spec.field = f;
        spec.n = uniform_index(rng, 3, 9);
        spec.rank_a = uniform_index(rng, 1, spec.n - 1);
        spec.rank_b = uniform_index(rng, 1, spec.n - 1);
        spec.m = uniform_index(rng, spec.rank_a, 10);
        spec.k = uniform_index(rng, spec.rank_b, 10);
        const std::size_t low = spec.rank_a + spec.rank_b > spec.n ? spec.rank_a + spec.rank_b - spec.n : 0;
        spec.shared = uniform_index(rng, low, std::min(spec.rank_a, spec.rank_b));
        spec.seed = rng();
        if (index % 6 == 1) return construct_pair_12(spec);
        if (index % 6 == 2) return construct_pair_123(spec);
        std::swap(spec.m, spec.k);
        std::swap(spec.rank_a, spec.rank_b);
        return construct_pair_124(spec);
    }
    case 4: {
        // n above m and k keeps pinv(A)A and B pinv(B) away from the identity.
        const std::size_t m = uniform_index(rng, 1, 7), k = uniform_index(rng, 1, 7);
        const std::size_t n = uniform_index(rng, std::max(m, k) + 1, 8);
        return {gaussian_matrix(m, n, rng, f), gaussian_matrix(n, k, rng, f)};
    }
    default: {
        const std::size_t m = uniform_index(rng, 1, 8), n = uniform_index(rng, 2, 8),
                          k = uniform_index(rng, 1, 8);
        const Matrix a = random_rank(m, n, uniform_index(rng, 0, std::min(m, n - 1)), rng, f);
        return {a, random_rank(n, k, uniform_index(rng, 0, std::min(n, k)), rng, f)};
    }
    }
}

} // namespace rol::gen
