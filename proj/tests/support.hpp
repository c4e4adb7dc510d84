#pragma once

// Seeded generators for property tests. Every generator draws from a
// std::mt19937 so failures replay exactly.

#include "drinfeld/catalog.hpp"

#include <random>

namespace drinfeld::testing {

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// p/q with |p| <= 9 and 1 <= q <= 7; zero about one time in five.
    Scalar scalar()
    {
        if (integer(0, 4) == 0)
            return 0;
        return rational(integer(-9, 9), integer(1, 7));
    }

    Scalar nonzero_scalar()
    {
        Scalar s;
        do
            s = rational(integer(-40, 40), integer(1, 13));
        while (s == 0);
        return s;
    }

    Vector vector(std::size_t n)
    {
        Vector v(n);
        for (auto& x : v)
            x = scalar();
        return v;
    }

    Matrix matrix(std::size_t rows, std::size_t cols)
    {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = scalar();
        return m;
    }

    /// Low-rank product so that kernels and inconsistent systems are common.
    Matrix low_rank_matrix(std::size_t rows, std::size_t cols)
    {
        std::size_t k = static_cast<std::size_t>(integer(0, static_cast<int>(std::min(rows, cols))));
        return matrix(rows, k) * matrix(k, cols);
    }

    Tensor2 tensor(const AlgebraPtr& alg) { return {alg, matrix(alg->dim(), alg->dim())}; }

    AlgebraElement element(const AlgebraPtr& alg) { return {alg, vector(alg->dim())}; }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

inline Tensor2 tensor_of(const AlgebraPtr& alg, std::initializer_list<std::tuple<Scalar, const char*, const char*>> terms)
{
    Tensor2 t(alg);
    for (const auto& [c, l, r] : terms)
        t.add(c, l, r);
    return t;
}

inline Tensor2 example1(const Scalar& alpha)
{
    return catalog::catalog_sl2().family("example1")->tmpl.instantiate({{"alpha", alpha}});
}

inline Tensor2 example3(const catalog::Params& p)
{
    return catalog::catalog_malcev7().family("example3")->tmpl.instantiate(p);
}

/// The sampled parameter tuples of the Malcev family.
inline const std::vector<catalog::Params>& malcev_schedule()
{
    static const auto schedule = catalog::sample_schedule(catalog::catalog_malcev7().family("example3")->tmpl.params);
    return schedule;
}

inline catalog::Params malcev_params(Scalar a, Scalar b, Scalar g, Scalar d, Scalar m)
{
    return {{"alpha", a}, {"beta", b}, {"gamma", g}, {"delta", d}, {"mu", m}};
}

} // namespace drinfeld::testing
