#pragma once

#include "drinfeld/tensor.hpp"

#include <utility>

namespace drinfeld {

/// Element of A* in coordinates of the dual basis.
struct Covector {
    AlgebraPtr algebra;
    Vector coords;

    Covector(AlgebraPtr alg, Vector c) : algebra(std::move(alg)), coords(std::move(c))
    {
        if (coords.size() != algebra->dim())
            throw InputError("covector length does not match algebra dimension");
    }

    Scalar operator()(std::span<const Scalar> a) const
    {
        Scalar s = 0;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] != 0 && a[i] != 0)
                s += coords[i] * a[i];
        return s;
    }

    friend bool operator==(const Covector& a, const Covector& b)
    {
        return same_algebra(a.algebra, b.algebra) && a.coords == b.coords;
    }
};

inline Covector dual_basis_vector(const AlgebraPtr& alg, std::size_t i)
{
    return {alg, unit_vector(alg->dim(), i)};
}

namespace detail {

inline std::vector<Tensor2> coproducts_of_basis(const Tensor2& r)
{
    return invariance_defect(r); // Δ_r(e_k) for every k
}

} // namespace detail

/// fg(e_k) = Σ f(a_(1)) g(a_(2)) with Δ_r(e_k) = Σ a_(1) ⊗ a_(2).
inline Covector dual_multiply(const Tensor2& r, const Covector& f, const Covector& g)
{
    require_same_algebra(r.algebra, f.algebra, "dual_multiply");
    require_same_algebra(r.algebra, g.algebra, "dual_multiply");
    const std::size_t n = r.algebra->dim();
    Vector out(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto delta = comultiplication(r, unit_vector(n, k));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (delta.coeff(u, v) != 0)
                    out[k] += delta.coeff(u, v) * f.coords[u] * g.coords[v];
    }
    return {r.algebra, std::move(out)};
}

/// (f⇀a, a↼f) with f⇀a = Σ a_(1) f(a_(2)) and a↼f = Σ f(a_(1)) a_(2).
inline std::pair<AlgebraElement, AlgebraElement> act_module(const Tensor2& r, const Covector& f,
                                                            const AlgebraElement& a)
{
    require_same_algebra(r.algebra, f.algebra, "act_module");
    require_same_algebra(r.algebra, a.algebra, "act_module");
    const std::size_t n = r.algebra->dim();
    auto delta = comultiplication(r, a);
    Vector left(n), right(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            const auto& d = delta.coeff(u, v);
            if (d == 0)
                continue;
            left[u] += d * f.coords[v];
            right[v] += d * f.coords[u];
        }
    return {AlgebraElement(r.algebra, std::move(left)), AlgebraElement(r.algebra, std::move(right))};
}

/// (f↽a, a⇁f) with (f↽a)(b) = f(ab) and (a⇁f)(b) = f(ba).
inline std::pair<Covector, Covector> act_dual(const Covector& f, const AlgebraElement& a)
{
    require_same_algebra(f.algebra, a.algebra, "act_dual");
    const auto& alg = *a.algebra;
    const std::size_t n = alg.dim();
    Vector left(n), right(n);
    for (std::size_t b = 0; b < n; ++b) {
        auto e = unit_vector(n, b);
        left[b] = f(alg.product(a.coords, e));
        right[b] = f(alg.product(e, a.coords));
    }
    return {Covector(a.algebra, std::move(left)), Covector(a.algebra, std::move(right))};
}

/// D(A) = A ⊕ A*: basis e_1..e_n followed by the dual basis (labels with '*'),
/// together with the canonical pairing Q(a+f, b+g) = g(a) + f(b).
///
/// The comultiplication used for A* is Δ = −Δ_r, i.e. Δ_cobracket with
/// cobracket = −r. With this sign the graph {f − Σ f(a_i) b_i} is an ideal
/// and R(a) = Σ ω(a_i, a) b_i holds for r itself. The double of Δ_r is
/// isomorphic through a + f ↦ a − f.
struct DoubleAlgebra {
    AlgebraPtr base;
    Tensor2 r;
    Tensor2 cobracket;
    AlgebraPtr spec;
    BilinearForm qform;

    std::size_t base_dim() const { return base->dim(); }

    /// Embeds a + f as a 2n-vector.
    Vector embed(std::span<const Scalar> a, std::span<const Scalar> f) const
    {
        Vector v(a.begin(), a.end());
        v.insert(v.end(), f.begin(), f.end());
        return v;
    }
};

/// Materializes the double's structure constants with no precondition checks.
inline DoubleAlgebra assemble_double(const AlgebraPtr& base, const Tensor2& r)
{
    require_same_algebra(base, r.algebra, "build_double");
    const std::size_t n = base->dim(), m = 2 * n;
    Tensor2 cobracket = Scalar(-1) * r;
    const auto delta = detail::coproducts_of_basis(cobracket);
    std::vector<Scalar> table(m * m * m);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return table[(i * m + j) * m + k]; };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                // e_i e_j = base product
                at(i, j, k) = base->constant(i, j, k);
                // f_i f_j = Σ_k Δ(e_k)(i, j) f_k
                at(n + i, n + j, n + k) = delta[k].coeff(i, j);
                // f_i e_j = f_i⇀e_j + f_i↽e_j
                at(n + i, j, k) = delta[j].coeff(k, i);
                at(n + i, j, n + k) = base->constant(j, k, i);
                // e_i f_j = e_i↼f_j + e_i⇁f_j
                at(i, n + j, k) = delta[i].coeff(j, k);
                at(i, n + j, n + k) = base->constant(k, i, j);
            }
        }
    std::vector<std::string> labels = base->basis();
    for (const auto& l : base->basis())
        labels.push_back(l + "*");
    auto spec = std::make_shared<const AlgebraSpec>("D(" + base->name() + ")", std::move(labels), std::move(table));
    Matrix q(m, m);
    for (std::size_t i = 0; i < n; ++i) {
        q(i, n + i) = 1;
        q(n + i, i) = 1;
    }
    return DoubleAlgebra{base, r, std::move(cobracket), spec, BilinearForm(spec, std::move(q))};
}

/// Drinfeld double of (A, Δ_r). Refuses unless r solves the classical
/// Yang-Baxter equation and r + τ(r) is invariant.
inline DoubleAlgebra build_double(const AlgebraPtr& base, const Tensor2& r)
{
    require_same_algebra(base, r.algebra, "build_double");
    auto residual = cybe_residual(r);
    if (!residual.is_zero()) {
        Refusal err("cybe", "r does not solve the classical Yang-Baxter equation (max |residual| = "
                                + to_string(residual.max_abs()) + ")");
        err.residual = std::move(residual);
        throw err;
    }
    auto defects = invariance_defect(symmetric_part(r));
    for (const auto& d : defects)
        if (!d.is_zero()) {
            Refusal err("invariance", "r + tau(r) is not invariant");
            err.defects = std::move(defects);
            throw err;
        }
    return assemble_double(base, r);
}

inline Scalar form_q(const DoubleAlgebra& d, std::span<const Scalar> u, std::span<const Scalar> v)
{
    return d.qform(u, v);
}

/// D = ideal1 ⊕ ideal2 with ideal_k = { f − phi_k(f) }.
/// phi1, phi2: columns are images of the dual basis (A* → A).
/// psi: columns are ψ(e_k) in dual coordinates (A → A*), ψ = (phi2 − phi1)⁻¹.
struct DoubleDecomposition {
    DoubleAlgebra dbl;
    std::vector<Vector> ideal1;
    std::vector<Vector> ideal2;
    Matrix phi1;
    Matrix phi2;
    Matrix psi;
};

/// Splits the double into the graph ideal of φ̂₁(f) = Σ f(a_i) b_i and its
/// Q-orthogonal complement. Both ideal properties are verified by closure,
/// and φ̂₂ is read off the complement rather than taken from a formula.
inline DoubleDecomposition decompose(const DoubleAlgebra& d)
{
    const std::size_t n = d.base_dim(), m = 2 * n;
    const auto& D = *d.spec;

    Matrix phi1 = d.r.coeff.transposed(); // φ̂₁(f_p) = Σ_q r(p, q) e_q
    std::vector<Vector> ideal1;
    for (std::size_t p = 0; p < n; ++p)
        ideal1.push_back(d.embed(-phi1.column(p), unit_vector(n, p)));

    if (ideal_closure(D, ideal1).size() != n)
        throw Refusal("ideal1", "the graph {f - phi1(f)} is not an ideal of the double; r is not a valid input");

    std::vector<Vector> q_rows;
    for (const auto& v : ideal1)
        q_rows.push_back(d.qform.gram.transposed() * v);
    auto ideal2 = span_basis(kernel_basis(Matrix::from_rows(q_rows, m)), m);

    auto both = ideal1;
    both.insert(both.end(), ideal2.begin(), ideal2.end());
    if (ideal2.size() != n || rank(Matrix::from_rows(both, m)) != m)
        throw Refusal("orthogonal",
                      "ideal1 meets its Q-orthogonal complement (r + tau(r) = 0 or degenerate); no decomposition");
    if (ideal_closure(D, ideal2).size() != n)
        throw Refusal("ideal2", "the Q-orthogonal complement of ideal1 is not an ideal");

    // φ̂₂(f): f − φ̂₂(f) ∈ ideal2, i.e. Σ x_k w_k + [φ̂₂(f); 0] = [0; f]
    std::vector<Vector> cols = ideal2;
    for (std::size_t i = 0; i < n; ++i)
        cols.push_back(d.embed(unit_vector(n, i), zero_vector(n)));
    Matrix system = Matrix::from_columns(cols, m);
    Matrix phi2(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        auto sol = solve_linear(system, d.embed(zero_vector(n), unit_vector(n, p)));
        if (!sol)
            throw Refusal("ideal2", "ideal2 is not a graph over the dual space");
        for (std::size_t q = 0; q < n; ++q)
            phi2(q, p) = (*sol)[n + q];
    }

    auto psi = inverse(phi2 - phi1);
    if (!psi)
        throw Refusal("psi", "phi2 - phi1 is singular; psi is not defined");
    return {d, std::move(ideal1), std::move(ideal2), std::move(phi1), std::move(phi2), std::move(*psi)};
}

/// (R1, Q1) = (φ̂₁∘ψ, φ̂₂∘ψ): Rota-Baxter operators of weight 1 and −1.
inline std::pair<LinearOperator, LinearOperator> derived_rb(const DoubleDecomposition& dec)
{
    return {LinearOperator(dec.dbl.base, dec.phi1 * dec.psi), LinearOperator(dec.dbl.base, dec.phi2 * dec.psi)};
}

/// ω(a, b) = Q(ψ(a), b)
inline BilinearForm omega_form(const DoubleDecomposition& dec)
{
    return {dec.dbl.base, dec.psi.transposed()};
}

/// The ideal (1 or 2) as an algebra in its own right.
inline AlgebraPtr ideal_algebra(const DoubleDecomposition& dec, int which)
{
    const auto& basis = which == 1 ? dec.ideal1 : dec.ideal2;
    return restrict_to(*dec.dbl.spec, basis, dec.dbl.spec->name() + "/ideal" + std::to_string(which));
}

// ---------------------------------------------------------------------------
// Structural identities of a decomposition

inline IdentityReport check_orthogonality(const DoubleDecomposition& dec)
{
    IdentityReport rep{"Q(ideal1, ideal2) = 0"};
    for (std::size_t i = 0; i < dec.ideal1.size(); ++i)
        for (std::size_t j = 0; j < dec.ideal2.size(); ++j)
            rep.record("(" + std::to_string(i) + "," + std::to_string(j) + ")",
                       Vector{dec.dbl.qform(dec.ideal1[i], dec.ideal2[j])});
    return rep;
}

/// φ̂(fg) = φ̂(f)φ̂(g) on dual-basis pairs, for both maps.
inline IdentityReport check_phi_homomorphism(const DoubleDecomposition& dec)
{
    IdentityReport rep{"phi(fg) = phi(f)phi(g)"};
    const auto& base = dec.dbl.base;
    const std::size_t n = base->dim();
    for (int which = 1; which <= 2; ++which) {
        const Matrix& phi = which == 1 ? dec.phi1 : dec.phi2;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto fg = dual_multiply(dec.dbl.cobracket, dual_basis_vector(base, i), dual_basis_vector(base, j));
                auto lhs = phi * fg.coords;
                auto rhs = base->product(phi.column(i), phi.column(j));
                rep.record("phi" + std::to_string(which) + label_tuple(*base, {i, j}), lhs - rhs);
            }
    }
    return rep;
}

/// ψ(ab) = ψ(a)↽b = a⇁ψ(b) on basis pairs.
inline IdentityReport check_psi_intertwining(const DoubleDecomposition& dec)
{
    IdentityReport rep{"psi(ab) = psi(a)<-b = a->psi(b)"};
    const auto& base = dec.dbl.base;
    const std::size_t n = base->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector psi_ab = dec.psi * base->basis_product(i, j);
            Covector psi_a(base, dec.psi.column(i)), psi_b(base, dec.psi.column(j));
            auto left = act_dual(psi_a, basis_element(base, j)).first;   // ψ(a)↽b
            auto right = act_dual(psi_b, basis_element(base, i)).second; // a⇁ψ(b)
            auto where = label_tuple(*base, {i, j});
            rep.record(where + " left", psi_ab - left.coords);
            rep.record(where + " right", psi_ab - right.coords);
        }
    return rep;
}

/// ψ(ab) = ψ(a)ψ(b) − φ̂₁(ψ(a))⇁ψ(b) − ψ(a)↽φ̂₁(ψ(b)), products in A* taken
/// with the double's cobracket.
inline IdentityReport check_psi_product(const DoubleDecomposition& dec)
{
    IdentityReport rep{"psi(ab) product formula"};
    const auto& base = dec.dbl.base;
    const std::size_t n = base->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Covector psi_a(base, dec.psi.column(i)), psi_b(base, dec.psi.column(j));
            auto prod = dual_multiply(dec.dbl.cobracket, psi_a, psi_b);
            AlgebraElement phi_psi_a(base, dec.phi1 * psi_a.coords), phi_psi_b(base, dec.phi1 * psi_b.coords);
            auto t1 = act_dual(psi_b, phi_psi_a).second;
            auto t2 = act_dual(psi_a, phi_psi_b).first;
            Vector rhs = prod.coords - t1.coords - t2.coords;
            rep.record(label_tuple(*base, {i, j}), dec.psi * base->basis_product(i, j) - rhs);
        }
    return rep;
}

} // namespace drinfeld
