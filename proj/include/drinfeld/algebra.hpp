#pragma once

#include "drinfeld/matrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace drinfeld {

/// Finite-dimensional algebra given by structure constants:
/// e_i e_j = sum_k constant(i, j, k) e_k. Immutable once built.
class AlgebraSpec {
public:
    AlgebraSpec(std::string name, std::vector<std::string> basis, std::vector<Scalar> table)
        : name_(std::move(name)), basis_(std::move(basis)), table_(std::move(table))
    {
        const std::size_t n = basis_.size();
        if (table_.size() != n * n * n)
            throw InputError("algebra \"" + name_ + "\": expected " + std::to_string(n * n * n)
                             + " structure constants, got " + std::to_string(table_.size()));
        for (std::size_t i = 0; i < n; ++i) {
            if (!index_.emplace(basis_[i], i).second)
                throw InputError("algebra \"" + name_ + "\": duplicate basis label \"" + basis_[i] + "\"");
        }
        sparse_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (const auto& c = table_[(i * n + j) * n + k]; c != 0)
                        sparse_[i * n + j].push_back({static_cast<std::uint32_t>(k), c});
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<Scalar>& table() const { return table_; }

    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return table_[(i * dim() + j) * dim() + k];
    }

    std::optional<std::size_t> index_of(std::string_view label) const
    {
        auto it = index_.find(std::string(label));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t require_index(std::string_view label) const
    {
        if (auto i = index_of(label))
            return *i;
        throw InputError("algebra \"" + name_ + "\" has no basis element \"" + std::string(label) + "\"");
    }

    Vector basis_product(std::size_t i, std::size_t j) const
    {
        Vector out(dim());
        for (const auto& t : sparse_[i * dim() + j])
            out[t.k] = t.c;
        return out;
    }

    /// Bilinear expansion of u·v through the table (coordinates in the basis).
    Vector product(std::span<const Scalar> u, std::span<const Scalar> v) const
    {
        const std::size_t n = dim();
        Vector out(n);
        std::vector<std::size_t> nz_v;
        for (std::size_t j = 0; j < n; ++j)
            if (v[j] != 0)
                nz_v.push_back(j);
        Scalar uv;
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] == 0)
                continue;
            for (auto j : nz_v) {
                const auto& terms = sparse_[i * n + j];
                if (terms.empty())
                    continue;
                uv = u[i] * v[j];
                for (const auto& t : terms)
                    out[t.k] += uv * t.c;
            }
        }
        return out;
    }

    bool has_zero_multiplication() const
    {
        for (const auto& terms : sparse_)
            if (!terms.empty())
                return false;
        return true;
    }

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b)
    {
        return a.name_ == b.name_ && a.basis_ == b.basis_ && a.table_ == b.table_;
    }

private:
    struct Term {
        std::uint32_t k;
        Scalar c;
    };

    std::string name_;
    std::vector<std::string> basis_;
    std::vector<Scalar> table_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<Term>> sparse_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return a == b || (a && b && *a == *b);
}

inline void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, std::string_view what)
{
    if (!same_algebra(a, b))
        throw InputError(std::string(what) + ": operands belong to different algebras");
}

/// One entry of a product list: left·right = sum of (label, coefficient).
struct ProductRule {
    std::string left;
    std::string right;
    std::vector<std::pair<std::string, Scalar>> result;
};

/// Assembles a dense table from a product list. Unlisted products are zero.
/// With `anticommutative`, each unordered pair may be listed once, in either
/// order, and the table is completed by skew-symmetry. Squares are rejected.
inline AlgebraPtr make_algebra(std::string name, std::vector<std::string> basis,
                               const std::vector<ProductRule>& products, bool anticommutative)
{
    const std::size_t n = basis.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(basis[i], i).second)
            throw InputError("duplicate basis label \"" + basis[i] + "\"");
    auto lookup = [&](const std::string& label, std::size_t rule) {
        auto it = index.find(label);
        if (it == index.end())
            throw InputError("products[" + std::to_string(rule) + "]: unknown basis label \"" + label + "\"");
        return it->second;
    };
    std::vector<Scalar> table(n * n * n);
    std::vector<bool> seen(n * n, false);
    for (std::size_t r = 0; r < products.size(); ++r) {
        const auto& p = products[r];
        std::size_t i = lookup(p.left, r);
        std::size_t j = lookup(p.right, r);
        if (anticommutative && i == j)
            throw InputError("products[" + std::to_string(r) + "]: square " + p.left + "·" + p.right
                             + " listed in an anticommutative algebra");
        // a reversed pair e_j·e_i stands for −(e_i·e_j)
        Scalar sign = 1;
        if (anticommutative && i > j) {
            std::swap(i, j);
            sign = -1;
        }
        if (seen[i * n + j])
            throw InputError("products[" + std::to_string(r) + "]: product " + p.left + "·" + p.right
                             + " listed twice" + (anticommutative ? " (counting both orders)" : ""));
        seen[i * n + j] = true;
        for (const auto& [label, c] : p.result) {
            std::size_t k = lookup(label, r);
            table[(i * n + j) * n + k] += sign * c;
            if (anticommutative)
                table[(j * n + i) * n + k] -= sign * c;
        }
    }
    return std::make_shared<const AlgebraSpec>(std::move(name), std::move(basis), std::move(table));
}

/// Element of an algebra in coordinates of its basis.
struct AlgebraElement {
    AlgebraPtr algebra;
    Vector coords;

    AlgebraElement(AlgebraPtr alg, Vector c) : algebra(std::move(alg)), coords(std::move(c))
    {
        if (coords.size() != algebra->dim())
            throw InputError("element has " + std::to_string(coords.size()) + " coordinates, algebra \""
                             + algebra->name() + "\" has dimension " + std::to_string(algebra->dim()));
    }

    bool is_zero() const { return drinfeld::is_zero(coords); }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b)
    {
        return same_algebra(a.algebra, b.algebra) && a.coords == b.coords;
    }
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b)
    {
        require_same_algebra(a.algebra, b.algebra, "sum");
        return {a.algebra, a.coords + b.coords};
    }
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b)
    {
        require_same_algebra(a.algebra, b.algebra, "difference");
        return {a.algebra, a.coords - b.coords};
    }
    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) { return {a.algebra, c * a.coords}; }
};

inline AlgebraElement zero_element(const AlgebraPtr& alg)
{
    return {alg, zero_vector(alg->dim())};
}

inline AlgebraElement basis_element(const AlgebraPtr& alg, std::size_t i)
{
    return {alg, unit_vector(alg->dim(), i)};
}

inline AlgebraElement basis_element(const AlgebraPtr& alg, std::string_view label)
{
    return basis_element(alg, alg->require_index(label));
}

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b)
{
    require_same_algebra(a.algebra, b.algebra, "multiply");
    return {a.algebra, a.algebra->product(a.coords, b.coords)};
}

/// Linear map A -> A; column j of `matrix` is the image of e_j.
struct LinearOperator {
    AlgebraPtr algebra;
    Matrix matrix;

    LinearOperator(AlgebraPtr alg, Matrix m) : algebra(std::move(alg)), matrix(std::move(m))
    {
        if (matrix.rows() != algebra->dim() || matrix.cols() != algebra->dim())
            throw InputError("operator matrix does not match algebra dimension");
    }

    Vector apply(std::span<const Scalar> v) const { return matrix * v; }
    AlgebraElement operator()(const AlgebraElement& a) const
    {
        require_same_algebra(algebra, a.algebra, "operator application");
        return {algebra, matrix * a.coords};
    }

    friend bool operator==(const LinearOperator& a, const LinearOperator& b)
    {
        return same_algebra(a.algebra, b.algebra) && a.matrix == b.matrix;
    }
};

/// Bilinear form ω(u, v) = uᵀ·gram·v on an algebra.
struct BilinearForm {
    AlgebraPtr algebra;
    Matrix gram;

    BilinearForm(AlgebraPtr alg, Matrix g) : algebra(std::move(alg)), gram(std::move(g))
    {
        if (gram.rows() != algebra->dim() || gram.cols() != algebra->dim())
            throw InputError("form gram matrix does not match algebra dimension");
    }

    Scalar operator()(std::span<const Scalar> u, std::span<const Scalar> v) const
    {
        Scalar s = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0)
                continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] != 0 && gram(i, j) != 0)
                    s += u[i] * gram(i, j) * v[j];
        }
        return s;
    }
    Scalar operator()(const AlgebraElement& a, const AlgebraElement& b) const { return (*this)(a.coords, b.coords); }
};

/// Matrix of left multiplication b ↦ a·b.
inline LinearOperator ad_matrix(const AlgebraElement& a)
{
    const auto& alg = *a.algebra;
    const std::size_t n = alg.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = alg.product(a.coords, unit_vector(n, j));
        for (std::size_t k = 0; k < n; ++k)
            m(k, j) = col[k];
    }
    return {a.algebra, std::move(m)};
}

/// Matrix of right multiplication b ↦ b·a.
inline Matrix right_multiplication(const AlgebraSpec& alg, std::span<const Scalar> a)
{
    const std::size_t n = alg.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = alg.product(unit_vector(n, j), a);
        for (std::size_t k = 0; k < n; ++k)
            m(k, j) = col[k];
    }
    return m;
}

/// (xy)z + (yz)x + (zx)y
inline Vector jacobian(const AlgebraSpec& alg, std::span<const Scalar> x, std::span<const Scalar> y,
                       std::span<const Scalar> z)
{
    return alg.product(alg.product(x, y), z) + alg.product(alg.product(y, z), x)
         + alg.product(alg.product(z, x), y);
}

inline AlgebraElement jacobian(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z)
{
    require_same_algebra(x.algebra, y.algebra, "jacobian");
    require_same_algebra(x.algebra, z.algebra, "jacobian");
    return {x.algebra, jacobian(*x.algebra, x.coords, y.coords, z.coords)};
}

// ---------------------------------------------------------------------------
// Identity checkers

struct Violation {
    std::string where;
    Vector residual;
};

struct IdentityReport {
    explicit IdentityReport(std::string name) : identity(std::move(name)) {}

    std::string identity;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::vector<Violation> violations; // first kMaxStored only

    static constexpr std::size_t kMaxStored = 32;

    bool pass() const { return failures == 0; }

    void record(std::string where, Vector residual)
    {
        ++checked;
        if (is_zero(residual))
            return;
        ++failures;
        if (violations.size() < kMaxStored)
            violations.push_back({std::move(where), std::move(residual)});
    }
};

inline std::string label_tuple(const AlgebraSpec& alg, std::initializer_list<std::size_t> idx)
{
    std::string s = "(";
    bool first = true;
    for (auto i : idx) {
        if (!first)
            s += ",";
        s += alg.basis()[i];
        first = false;
    }
    return s + ")";
}

inline IdentityReport check_anticommutative(const AlgebraSpec& alg)
{
    IdentityReport rep{"anticommutative"};
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            rep.record(label_tuple(alg, {i, j}), alg.basis_product(i, j) + alg.basis_product(j, i));
    return rep;
}

inline IdentityReport check_jacobi(const AlgebraSpec& alg)
{
    IdentityReport rep{"jacobi"};
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                rep.record(label_tuple(alg, {i, j, k}),
                           jacobian(alg, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k)));
    return rep;
}

/// J(x,y,xz) = J(x,y,z)x on x ∈ {e_i} ∪ {e_i + e_j : i < j} and basis y, z.
/// x occurs quadratically, so the pair sums are needed to cover the
/// polarized identity.
inline IdentityReport check_malcev(const AlgebraSpec& alg)
{
    IdentityReport rep{"malcev"};
    const std::size_t n = alg.dim();
    std::vector<std::pair<std::string, Vector>> xs;
    for (std::size_t i = 0; i < n; ++i)
        xs.emplace_back(alg.basis()[i], unit_vector(n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            xs.emplace_back(alg.basis()[i] + "+" + alg.basis()[j], unit_vector(n, i) + unit_vector(n, j));

    std::vector<Vector> e(n);
    for (std::size_t i = 0; i < n; ++i)
        e[i] = unit_vector(n, i);
    std::vector<Vector> yz(n * n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
            yz[y * n + z] = alg.basis_product(y, z);

    for (const auto& [xlabel, x] : xs) {
        std::vector<Vector> xe(n), ex(n);
        for (std::size_t k = 0; k < n; ++k) {
            xe[k] = alg.product(x, e[k]);
            ex[k] = alg.product(e[k], x);
        }
        for (std::size_t y = 0; y < n; ++y) {
            const Vector& xy = xe[y];
            for (std::size_t z = 0; z < n; ++z) {
                const Vector& xz = xe[z];
                // J(x, y, xz)
                Vector lhs = alg.product(xy, xz) + alg.product(alg.product(e[y], xz), x)
                           + alg.product(alg.product(xz, x), e[y]);
                // J(x, y, z)·x
                Vector j = alg.product(xy, e[z]) + alg.product(yz[y * n + z], x) + alg.product(ex[z], e[y]);
                Vector rhs = alg.product(j, x);
                rep.record("(" + xlabel + "," + alg.basis()[y] + "," + alg.basis()[z] + ")", lhs - rhs);
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Forms

/// gram(i, j) = trace(L_{e_i} ∘ L_{e_j}); the Killing form for Lie algebras.
inline BilinearForm trace_form(const AlgebraPtr& alg)
{
    const std::size_t n = alg->dim();
    std::vector<Matrix> ad(n);
    for (std::size_t i = 0; i < n; ++i)
        ad[i] = ad_matrix(basis_element(alg, i)).matrix;
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar t = 0;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (ad[i](k, l) != 0 && ad[j](l, k) != 0)
                        t += ad[i](k, l) * ad[j](l, k);
            gram(i, j) = t;
            gram(j, i) = t;
        }
    return {alg, std::move(gram)};
}

struct FormReport {
    bool symmetric = false;
    bool associative = false;
    bool nondegenerate = false;
    bool all() const { return symmetric && associative && nondegenerate; }
};

inline FormReport check_form(const BilinearForm& form)
{
    const auto& alg = *form.algebra;
    const std::size_t n = alg.dim();
    FormReport rep;
    rep.symmetric = form.gram == form.gram.transposed();
    rep.associative = true;
    for (std::size_t i = 0; i < n && rep.associative; ++i)
        for (std::size_t j = 0; j < n && rep.associative; ++j)
            for (std::size_t k = 0; k < n && rep.associative; ++k)
                if (form(alg.basis_product(i, j), unit_vector(n, k)) != form(unit_vector(n, i), alg.basis_product(j, k)))
                    rep.associative = false;
    rep.nondegenerate = rank(form.gram) == n;
    return rep;
}

// ---------------------------------------------------------------------------
// Ideals and simplicity

/// Smallest two-sided ideal containing `seed`, as a canonical (RREF) basis.
inline std::vector<Vector> ideal_closure(const AlgebraSpec& alg, const std::vector<Vector>& seed)
{
    const std::size_t n = alg.dim();
    auto basis = span_basis(seed, n);
    while (!basis.empty()) {
        std::vector<Vector> candidates = basis;
        for (const auto& v : basis)
            for (std::size_t i = 0; i < n; ++i) {
                auto e = unit_vector(n, i);
                candidates.push_back(alg.product(e, v));
                candidates.push_back(alg.product(v, e));
            }
        auto next = span_basis(candidates, n);
        if (next.size() == basis.size())
            break;
        basis = std::move(next);
    }
    return basis;
}

inline std::vector<Vector> ideal_closure(const AlgebraPtr& alg, const std::vector<AlgebraElement>& seed)
{
    std::vector<Vector> coords;
    for (const auto& s : seed) {
        require_same_algebra(alg, s.algebra, "ideal_closure");
        coords.push_back(s.coords);
    }
    return ideal_closure(*alg, coords);
}

/// Linear maps T with T(ab) = T(a)b = aT(b); returned as a basis of matrices.
inline std::vector<Matrix> centroid(const AlgebraSpec& alg)
{
    const std::size_t n = alg.dim();
    // unknown T(k, l) sits at column k*n + l
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector left(n * n), right(n * n);
                for (std::size_t l = 0; l < n; ++l) {
                    const auto& c = alg.constant(i, j, l);
                    if (c != 0) {
                        left[k * n + l] += c;
                        right[k * n + l] += c;
                    }
                }
                for (std::size_t m = 0; m < n; ++m) {
                    if (const auto& c = alg.constant(m, j, k); c != 0)
                        left[m * n + i] -= c;
                    if (const auto& c = alg.constant(i, m, k); c != 0)
                        right[m * n + j] -= c;
                }
                if (!is_zero(left))
                    rows.push_back(std::move(left));
                if (!is_zero(right))
                    rows.push_back(std::move(right));
            }
    Matrix system = rows.empty() ? Matrix(1, n * n) : Matrix::from_rows(rows, n * n);
    std::vector<Matrix> out;
    for (const auto& v : kernel_basis(system)) {
        Matrix t(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                t(k, l) = v[k * n + l];
        out.push_back(std::move(t));
    }
    return out;
}

enum class Simplicity { simple, not_simple, unverified };

inline std::string to_string(Simplicity s)
{
    switch (s) {
    case Simplicity::simple: return "simple";
    case Simplicity::not_simple: return "not simple";
    case Simplicity::unverified: return "simple: unverified";
    }
    return "?";
}

struct SimplicityReport {
    Simplicity verdict = Simplicity::unverified;
    std::vector<Vector> proper_ideal; // witness when not simple
    std::string reason;
};

/// Searches for a proper ideal generated by a basis vector or by a vector of
/// some multiplication-operator kernel. When none exists the verdict is
/// "simple" only if the trace form is non-degenerate and the centroid is
/// one-dimensional: a non-degenerate trace form makes the (Lie or Malcev)
/// algebra a direct sum of simple ideals, and each summand would contribute
/// its own projection to the centroid.
inline SimplicityReport simplicity(const AlgebraPtr& algp)
{
    const auto& alg = *algp;
    const std::size_t n = alg.dim();
    if (n == 0)
        return {Simplicity::not_simple, {}, "zero algebra"};
    if (alg.has_zero_multiplication())
        return {Simplicity::not_simple, {}, "multiplication is identically zero"};

    std::vector<Vector> candidates;
    for (std::size_t i = 0; i < n; ++i)
        candidates.push_back(unit_vector(n, i));
    for (std::size_t i = 0; i < n; ++i) {
        auto e = unit_vector(n, i);
        for (auto& v : kernel_basis(ad_matrix(basis_element(algp, i)).matrix))
            candidates.push_back(std::move(v));
        for (auto& v : kernel_basis(right_multiplication(alg, e)))
            candidates.push_back(std::move(v));
    }
    for (const auto& c : candidates) {
        auto ideal = ideal_closure(alg, {c});
        if (!ideal.empty() && ideal.size() < n)
            return {Simplicity::not_simple, ideal,
                    "proper ideal of dimension " + std::to_string(ideal.size())};
    }
    if (rank(trace_form(algp).gram) != n)
        return {Simplicity::unverified, {}, "no proper ideal found but the trace form is degenerate"};
    auto cent = centroid(alg);
    for (const auto& t : cent) {
        // image and kernel of a centroid element are ideals
        std::vector<Vector> image;
        for (std::size_t j = 0; j < n; ++j)
            image.push_back(t.column(j));
        auto img = span_basis(image, n);
        if (!img.empty() && img.size() < n)
            return {Simplicity::not_simple, img, "image of a centroid element is a proper ideal"};
    }
    if (cent.size() != 1)
        return {Simplicity::unverified, {},
                "no proper ideal found but the centroid has dimension " + std::to_string(cent.size())};
    return {Simplicity::simple, {}, "no proper ideal; non-degenerate trace form; centroid = scalars"};
}

inline bool is_simple(const AlgebraPtr& alg)
{
    return simplicity(alg).verdict == Simplicity::simple;
}

/// Structure constants of the subalgebra spanned by `basis` (vectors of the
/// ambient algebra). Throws if the span is not closed under multiplication.
inline AlgebraPtr restrict_to(const AlgebraSpec& alg, const std::vector<Vector>& basis, std::string name)
{
    const std::size_t m = basis.size();
    Matrix cols = Matrix::from_columns(basis, alg.dim());
    if (rank(cols) != m)
        throw InputError("restrict_to: basis vectors are linearly dependent");
    std::vector<Scalar> table(m * m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            auto prod = alg.product(basis[a], basis[b]);
            auto coords = solve_linear(cols, prod);
            if (!coords)
                throw InputError("restrict_to: subspace is not closed under multiplication");
            for (std::size_t c = 0; c < m; ++c)
                table[(a * m + b) * m + c] = (*coords)[c];
        }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a)
        labels.push_back("u" + std::to_string(a + 1));
    return std::make_shared<const AlgebraSpec>(std::move(name), std::move(labels), std::move(table));
}

/// A ⊕ B with componentwise multiplication; labels suffixed "_1" and "_2".
inline AlgebraPtr direct_sum(const AlgebraSpec& a, const AlgebraSpec& b, std::string name)
{
    const std::size_t p = a.dim(), q = b.dim(), n = p + q;
    std::vector<Scalar> table(n * n * n);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t k = 0; k < p; ++k)
                table[(i * n + j) * n + k] = a.constant(i, j, k);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t k = 0; k < q; ++k)
                table[((p + i) * n + p + j) * n + p + k] = b.constant(i, j, k);
    std::vector<std::string> labels;
    for (const auto& l : a.basis())
        labels.push_back(l + "_1");
    for (const auto& l : b.basis())
        labels.push_back(l + "_2");
    return std::make_shared<const AlgebraSpec>(std::move(name), std::move(labels), std::move(table));
}

} // namespace drinfeld
