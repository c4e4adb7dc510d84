#pragma once

#include "drinfeld/algebra.hpp"

#include <array>
#include <map>

namespace drinfeld {

/// Σ coeff(i, j) e_i ⊗ e_j
struct Tensor2 {
    AlgebraPtr algebra;
    Matrix coeff;

    explicit Tensor2(AlgebraPtr alg) : algebra(std::move(alg)), coeff(algebra->dim(), algebra->dim()) {}
    Tensor2(AlgebraPtr alg, Matrix c) : algebra(std::move(alg)), coeff(std::move(c))
    {
        if (coeff.rows() != algebra->dim() || coeff.cols() != algebra->dim())
            throw InputError("tensor grid does not match algebra dimension");
    }

    bool is_zero() const { return coeff.is_zero(); }

    /// Adds c·(left ⊗ right) for basis labels.
    Tensor2& add(const Scalar& c, std::string_view left, std::string_view right)
    {
        coeff(algebra->require_index(left), algebra->require_index(right)) += c;
        return *this;
    }

    friend bool operator==(const Tensor2& a, const Tensor2& b)
    {
        return same_algebra(a.algebra, b.algebra) && a.coeff == b.coeff;
    }
    friend Tensor2 operator+(const Tensor2& a, const Tensor2& b)
    {
        require_same_algebra(a.algebra, b.algebra, "tensor sum");
        return {a.algebra, a.coeff + b.coeff};
    }
    friend Tensor2 operator-(const Tensor2& a, const Tensor2& b)
    {
        require_same_algebra(a.algebra, b.algebra, "tensor difference");
        return {a.algebra, a.coeff - b.coeff};
    }
    friend Tensor2 operator*(const Scalar& c, const Tensor2& a) { return {a.algebra, c * a.coeff}; }
};

/// Σ coeff[i][j][k] e_i ⊗ e_j ⊗ e_k, row-major.
struct Tensor3 {
    AlgebraPtr algebra;
    std::vector<Scalar> coeff;

    explicit Tensor3(AlgebraPtr alg)
        : algebra(std::move(alg)), coeff(algebra->dim() * algebra->dim() * algebra->dim())
    {
    }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k)
    {
        const std::size_t n = algebra->dim();
        return coeff[(i * n + j) * n + k];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const
    {
        const std::size_t n = algebra->dim();
        return coeff[(i * n + j) * n + k];
    }

    bool is_zero() const { return drinfeld::is_zero(coeff); }
    Scalar max_abs() const { return drinfeld::max_abs(coeff); }

    friend bool operator==(const Tensor3& a, const Tensor3& b)
    {
        return same_algebra(a.algebra, b.algebra) && a.coeff == b.coeff;
    }
};

inline Tensor2 tau(const Tensor2& r)
{
    return {r.algebra, r.coeff.transposed()};
}

/// r + τ(r)
inline Tensor2 symmetric_part(const Tensor2& r)
{
    return r + tau(r);
}

inline bool is_skew(const Tensor2& r)
{
    return symmetric_part(r).is_zero();
}

namespace detail {

struct Entry {
    std::size_t i, j;
    Scalar c;
};

inline std::vector<Entry> nonzeros(const Tensor2& r)
{
    std::vector<Entry> out;
    for (std::size_t i = 0; i < r.coeff.rows(); ++i)
        for (std::size_t j = 0; j < r.coeff.cols(); ++j)
            if (r.coeff(i, j) != 0)
                out.push_back({i, j, r.coeff(i, j)});
    return out;
}

} // namespace detail

/// Bracket expansion
///   Σ [a_i,a_j]⊗b_i⊗b_j − a_i⊗[a_j,b_i]⊗b_j + a_i⊗a_j⊗[b_i,b_j]
/// for r = Σ a_i ⊗ b_i. Zero iff r solves the classical Yang-Baxter equation.
inline Tensor3 cybe_residual(const Tensor2& r)
{
    const auto& alg = *r.algebra;
    Tensor3 out(r.algebra);
    const auto nz = detail::nonzeros(r);
    for (const auto& u : nz)     // a_i = e_u.i, b_i = e_u.j
        for (const auto& v : nz) { // a_j = e_v.i, b_j = e_v.j
            Scalar w = u.c * v.c;
            auto ai_aj = alg.basis_product(u.i, v.i);
            auto aj_bi = alg.basis_product(v.i, u.j);
            auto bi_bj = alg.basis_product(u.j, v.j);
            for (std::size_t k = 0; k < alg.dim(); ++k) {
                if (ai_aj[k] != 0)
                    out.at(k, u.j, v.j) += w * ai_aj[k];
                if (aj_bi[k] != 0)
                    out.at(u.i, k, v.j) -= w * aj_bi[k];
                if (bi_bj[k] != 0)
                    out.at(u.i, v.i, k) += w * bi_bj[k];
            }
        }
    return out;
}

/// C(r) = r12 r13 + r13 r23 − r23 r12 with slotwise products of the
/// embedded copies (a formal unit fills the empty slot). Agrees with
/// cybe_residual on anticommutative algebras.
inline Tensor3 cybe_residual_slotwise(const Tensor2& r)
{
    constexpr int kUnit = -1;
    struct Embedded {
        Scalar c;
        std::array<int, 3> legs;
    };
    const auto nz = detail::nonzeros(r);
    auto embed = [&](std::size_t first, std::size_t second) {
        std::vector<Embedded> out;
        for (const auto& e : nz) {
            std::array<int, 3> legs{kUnit, kUnit, kUnit};
            legs[first] = static_cast<int>(e.i);
            legs[second] = static_cast<int>(e.j);
            out.push_back({e.c, legs});
        }
        return out;
    };
    const auto r12 = embed(0, 1), r13 = embed(0, 2), r23 = embed(1, 2);
    const auto& alg = *r.algebra;
    const std::size_t n = alg.dim();
    Tensor3 out(r.algebra);

    auto accumulate = [&](const std::vector<Embedded>& lhs, const std::vector<Embedded>& rhs, int sign) {
        for (const auto& a : lhs)
            for (const auto& b : rhs) {
                std::array<Vector, 3> slot;
                for (int s = 0; s < 3; ++s) {
                    int u = a.legs[s], v = b.legs[s];
                    if (u == kUnit && v == kUnit)
                        throw std::logic_error("cybe_residual_slotwise: unit in both factors of a slot");
                    if (u == kUnit)
                        slot[s] = unit_vector(n, static_cast<std::size_t>(v));
                    else if (v == kUnit)
                        slot[s] = unit_vector(n, static_cast<std::size_t>(u));
                    else
                        slot[s] = alg.basis_product(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
                }
                Scalar w = sign * a.c * b.c;
                for (std::size_t i = 0; i < n; ++i) {
                    if (slot[0][i] == 0)
                        continue;
                    for (std::size_t j = 0; j < n; ++j) {
                        if (slot[1][j] == 0)
                            continue;
                        for (std::size_t k = 0; k < n; ++k)
                            if (slot[2][k] != 0)
                                out.at(i, j, k) += w * slot[0][i] * slot[1][j] * slot[2][k];
                    }
                }
            }
    };
    accumulate(r12, r13, +1);
    accumulate(r13, r23, +1);
    accumulate(r23, r12, -1);
    return out;
}

/// Δ_r(a) = Σ a_i a ⊗ b_i − a_i ⊗ a b_i
inline Tensor2 comultiplication(const Tensor2& r, std::span<const Scalar> a)
{
    const auto& alg = *r.algebra;
    const std::size_t n = alg.dim();
    Tensor2 out(r.algebra);
    std::vector<Vector> e_a(n), a_e(n);
    for (std::size_t k = 0; k < n; ++k) {
        e_a[k] = alg.product(unit_vector(n, k), a);
        a_e[k] = alg.product(a, unit_vector(n, k));
    }
    for (const auto& t : detail::nonzeros(r))
        for (std::size_t k = 0; k < n; ++k) {
            if (e_a[t.i][k] != 0)
                out.coeff(k, t.j) += t.c * e_a[t.i][k];
            if (a_e[t.j][k] != 0)
                out.coeff(t.i, k) -= t.c * a_e[t.j][k];
        }
    return out;
}

inline Tensor2 comultiplication(const Tensor2& r, const AlgebraElement& a)
{
    require_same_algebra(r.algebra, a.algebra, "comultiplication");
    return comultiplication(r, std::span<const Scalar>(a.coords));
}

/// Δ_t(e_k) for every basis element; t is invariant iff all vanish.
inline std::vector<Tensor2> invariance_defect(const Tensor2& t)
{
    std::vector<Tensor2> out;
    for (std::size_t k = 0; k < t.algebra->dim(); ++k)
        out.push_back(comultiplication(t, unit_vector(t.algebra->dim(), k)));
    return out;
}

inline bool is_invariant(const Tensor2& t)
{
    for (const auto& d : invariance_defect(t))
        if (!d.is_zero())
            return false;
    return true;
}

/// A construction whose mathematical precondition failed. `check` names the
/// failing check; `residual` carries the offending CYBE residual if any.
class Refusal : public std::runtime_error {
public:
    Refusal(std::string check_name, const std::string& message)
        : std::runtime_error(message), check(std::move(check_name))
    {
    }

    std::string check;
    std::optional<Tensor3> residual;
    std::vector<Tensor2> defects;
};

// ---------------------------------------------------------------------------
// Parametrized tensors

/// factor, or factor·param when a parameter is attached.
struct Coefficient {
    Scalar factor = 1;
    std::optional<std::size_t> param;
};

/// Parses "3/4", "alpha", "-alpha", "-2*beta" against a parameter list.
inline Coefficient parse_coefficient(std::string_view text, const std::vector<std::string>& params)
{
    auto find_param = [&](std::string_view name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < params.size(); ++i)
            if (params[i] == name)
                return i;
        return std::nullopt;
    };
    if (is_rational_literal(text))
        return {parse_scalar(text), std::nullopt};
    if (auto star = text.find('*'); star != std::string_view::npos) {
        auto p = find_param(text.substr(star + 1));
        if (!p)
            throw InputError("coefficient \"" + std::string(text) + "\" names an undeclared parameter");
        return {parse_scalar(text.substr(0, star)), p};
    }
    Scalar sign = 1;
    std::string_view name = text;
    if (!name.empty() && name.front() == '-') {
        sign = -1;
        name.remove_prefix(1);
    }
    if (auto p = find_param(name))
        return {sign, p};
    throw InputError("coefficient \"" + std::string(text) + "\" is neither a rational nor a declared parameter");
}

struct TemplateTerm {
    std::size_t left;
    std::size_t right;
    Coefficient coeff;
};

/// Tensor whose coefficients may be linear in named parameters; resolved
/// to an exact Tensor2 by substituting rational values.
struct TensorTemplate {
    AlgebraPtr algebra;
    std::vector<std::string> params;
    std::vector<TemplateTerm> terms;

    TensorTemplate& add(std::string_view coeff, std::string_view left, std::string_view right)
    {
        terms.push_back({algebra->require_index(left), algebra->require_index(right), parse_coefficient(coeff, params)});
        return *this;
    }

    Tensor2 instantiate(const std::map<std::string, Scalar>& bindings) const
    {
        for (const auto& [name, value] : bindings)
            if (std::find(params.begin(), params.end(), name) == params.end())
                throw InputError("unknown parameter \"" + name + "\"");
        std::vector<Scalar> values(params.size());
        for (std::size_t i = 0; i < params.size(); ++i) {
            auto it = bindings.find(params[i]);
            if (it == bindings.end())
                throw InputError("parameter \"" + params[i] + "\" is not bound (use --param " + params[i] + "=p/q)");
            values[i] = it->second;
        }
        Tensor2 out(algebra);
        for (const auto& t : terms)
            out.coeff(t.left, t.right) += t.coeff.param ? t.coeff.factor * values[*t.coeff.param] : t.coeff.factor;
        return out;
    }
};

} // namespace drinfeld
