#pragma once

#include "drinfeld/tensor.hpp"

#include <map>
#include <utility>

namespace drinfeld {

/// R(e_k) = Σ_{i,j} r(i, j) ω(e_i, e_k) e_j, i.e. R = rᵀ·gram.
inline LinearOperator from_r(const Tensor2& r, const BilinearForm& form)
{
    require_same_algebra(r.algebra, form.algebra, "from_r");
    return {r.algebra, r.coeff.transposed() * form.gram};
}

/// R(x)R(y) − R(R(x)y + xR(y) + λxy)
inline Vector rb_defect(const LinearOperator& R, const Scalar& lambda, std::span<const Scalar> x,
                        std::span<const Scalar> y)
{
    const auto& alg = *R.algebra;
    Vector rx = R.apply(x), ry = R.apply(y);
    Vector inner = alg.product(rx, y) + alg.product(x, ry) + lambda * alg.product(x, y);
    return alg.product(rx, ry) - R.apply(inner);
}

inline AlgebraElement rb_defect(const LinearOperator& R, const Scalar& lambda, const AlgebraElement& x,
                                const AlgebraElement& y)
{
    require_same_algebra(R.algebra, x.algebra, "rb_defect");
    require_same_algebra(R.algebra, y.algebra, "rb_defect");
    return {R.algebra, rb_defect(R, lambda, std::span<const Scalar>(x.coords), std::span<const Scalar>(y.coords))};
}

/// Rota-Baxter identity of weight λ on every basis pair.
inline IdentityReport check_rota_baxter(const LinearOperator& R, const Scalar& lambda)
{
    IdentityReport rep{"rota-baxter weight " + to_string(lambda)};
    const auto& alg = *R.algebra;
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rep.record(label_tuple(alg, {i, j}), rb_defect(R, lambda, unit_vector(n, i), unit_vector(n, j)));
    return rep;
}

enum class WeightKind {
    determined, // a unique λ works
    any,        // R annihilates every product and the λ-free part vanishes
    none        // no λ works
};

struct RBReport {
    explicit RBReport(LinearOperator R) : op(std::move(R)) {}

    LinearOperator op;
    WeightKind kind = WeightKind::none;
    Scalar weight = 0; // meaningful only when kind == determined
    std::vector<Violation> defects;

    bool has_weight() const { return kind != WeightKind::none; }
    bool has_weight(const Scalar& lambda) const
    {
        return kind == WeightKind::any || (kind == WeightKind::determined && weight == lambda);
    }
};

/// "p/q", "any" or "none"
inline std::string weight_string(const RBReport& rep)
{
    switch (rep.kind) {
    case WeightKind::determined: return to_string(rep.weight);
    case WeightKind::any: return "any";
    case WeightKind::none: return "none";
    }
    return "none";
}

/// The identity is affine in λ: base(x, y) = λ·R(xy). Each basis pair with
/// R(e_i e_j) ≠ 0 pins λ; the verdict is the unique consistent value.
inline RBReport infer_weight(const LinearOperator& R)
{
    const auto& alg = *R.algebra;
    const std::size_t n = alg.dim();
    const bool anti = check_anticommutative(alg).pass();
    RBReport rep{R};

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = anti ? i + 1 : 0; j < n; ++j)
            pairs.emplace_back(i, j);

    std::map<Scalar, std::size_t> votes;
    std::vector<Violation> inconsistent;
    for (auto [i, j] : pairs) {
        auto ei = unit_vector(n, i), ej = unit_vector(n, j);
        Vector base = rb_defect(R, 0, ei, ej);
        Vector coef = R.apply(alg.basis_product(i, j));
        auto where = label_tuple(alg, {i, j});
        if (is_zero(coef)) {
            if (!is_zero(base))
                inconsistent.push_back({where, base});
            continue;
        }
        std::size_t k = 0;
        while (coef[k] == 0)
            ++k;
        Scalar lambda = base[k] / coef[k];
        if (base == lambda * coef)
            ++votes[lambda];
        else
            inconsistent.push_back({where, base - lambda * coef});
    }

    if (inconsistent.empty() && votes.size() <= 1) {
        if (votes.empty()) {
            rep.kind = WeightKind::any;
        } else {
            rep.kind = WeightKind::determined;
            rep.weight = votes.begin()->first;
        }
        return rep;
    }
    // Report defects at the most popular candidate (or λ = 0 if none).
    Scalar best = 0;
    std::size_t best_votes = 0;
    for (const auto& [lambda, count] : votes)
        if (count > best_votes) {
            best = lambda;
            best_votes = count;
        }
    rep.kind = WeightKind::none;
    for (auto [i, j] : pairs) {
        auto d = rb_defect(R, best, unit_vector(n, i), unit_vector(n, j));
        if (!is_zero(d))
            rep.defects.push_back({label_tuple(alg, {i, j}) + " at weight " + to_string(best), std::move(d)});
    }
    return rep;
}

/// −λ·id − R; again Rota-Baxter of weight λ when R is.
inline LinearOperator companion(const LinearOperator& R, const Scalar& lambda)
{
    const std::size_t n = R.algebra->dim();
    return {R.algebra, Scalar(-lambda) * Matrix::identity(n) - R.matrix};
}

/// (c·R, c·λ)
inline std::pair<LinearOperator, Scalar> weight_scaling(const LinearOperator& R, const Scalar& lambda, const Scalar& c)
{
    return {LinearOperator(R.algebra, c * R.matrix), Scalar(c * lambda)};
}

/// Weight-0 operator from a skew-symmetric CYBE solution.
inline RBReport weight0_from_skew(const Tensor2& r, const BilinearForm& form)
{
    if (!is_skew(r))
        throw Refusal("skew", "r is not skew-symmetric");
    auto residual = cybe_residual(r);
    if (!residual.is_zero()) {
        Refusal err("cybe", "r does not solve the classical Yang-Baxter equation");
        err.residual = std::move(residual);
        throw err;
    }
    return infer_weight(from_r(r, form));
}

} // namespace drinfeld
