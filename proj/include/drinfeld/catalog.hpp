#pragma once

#include "drinfeld/double.hpp"
#include "drinfeld/rotabaxter.hpp"

#include <functional>
#include <map>
#include <optional>

namespace drinfeld::catalog {

using Params = std::map<std::string, Scalar>;

/// sl2 on the ordered basis (x, h, y): hx = 2x, hy = -2y, xy = h.
inline AlgebraPtr sl2()
{
    return make_algebra("sl2", {"x", "h", "y"},
                        {
                            {"x", "h", {{"x", -2}}},
                            {"x", "y", {{"h", 1}}},
                            {"h", "y", {{"y", -2}}},
                        },
                        true);
}

/// The split 7-dimensional simple non-Lie Malcev algebra on (h, x, x', y, y', z, z').
inline AlgebraPtr malcev7()
{
    return make_algebra("malcev7", {"h", "x", "x'", "y", "y'", "z", "z'"},
                        {
                            {"h", "x", {{"x", 2}}},
                            {"h", "y", {{"y", 2}}},
                            {"h", "z", {{"z", 2}}},
                            {"h", "x'", {{"x'", -2}}},
                            {"h", "y'", {{"y'", -2}}},
                            {"h", "z'", {{"z'", -2}}},
                            {"x", "x'", {{"h", 1}}},
                            {"y", "y'", {{"h", 1}}},
                            {"z", "z'", {{"h", 1}}},
                            {"x", "y", {{"z'", 2}}},
                            {"y", "z", {{"x'", 2}}},
                            {"x", "z", {{"y'", -2}}}, // zx = 2y'
                            {"x'", "y'", {{"z", -2}}},
                            {"y'", "z'", {{"x", -2}}},
                            {"x'", "z'", {{"y", 2}}}, // z'x' = -2y
                        },
                        true);
}

/// Σ_j images[e_j] placed as columns; unlisted basis vectors map to zero.
inline LinearOperator operator_from_images(
    const AlgebraPtr& alg, const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Scalar>>>>& images)
{
    Matrix m(alg->dim(), alg->dim());
    for (const auto& [source, terms] : images) {
        auto j = alg->require_index(source);
        for (const auto& [target, c] : terms)
            m(alg->require_index(target), j) += c;
    }
    return {alg, std::move(m)};
}

struct Family {
    std::string name;
    TensorTemplate tmpl;
    std::string provenance;
};

struct NamedForm {
    std::string name;
    BilinearForm form;
    std::string provenance;
};

struct CatalogEntry {
    std::string name;
    AlgebraPtr algebra;
    std::vector<Family> families;
    std::vector<NamedForm> forms;

    const Family* family(std::string_view fname) const
    {
        for (const auto& f : families)
            if (f.name == fname)
                return &f;
        return nullptr;
    }
    const BilinearForm* form(std::string_view fname) const
    {
        for (const auto& f : forms)
            if (f.name == fname)
                return &f.form;
        return nullptr;
    }
};

inline CatalogEntry catalog_sl2()
{
    auto alg = sl2();
    TensorTemplate ex1{alg, {"alpha"}, {}};
    ex1.add("alpha", "h", "x").add("-alpha", "x", "h").add("1/4", "h", "h").add("1", "x", "y");
    TensorTemplate ex2{alg, {}, {}};
    ex2.add("1", "x", "x");
    return {"sl2",
            alg,
            {{"example1", ex1, "alpha(h⊗x − x⊗h) + 1/4 h⊗h + x⊗y; CYBE solution for every alpha (reference)"},
             {"example2", ex2, "x⊗x; non skew-symmetric CYBE solution with non-invariant symmetric part (reference)"}},
            {{"killing", trace_form(alg), "trace form; <h,h> = 8, <x,y> = 4 (derived)"}}};
}

inline CatalogEntry catalog_malcev7()
{
    auto alg = malcev7();
    TensorTemplate ex3{alg, {"alpha", "beta", "gamma", "delta", "mu"}, {}};
    ex3.add("alpha", "h", "x").add("-alpha", "x", "h");
    ex3.add("beta", "h", "y'").add("-beta", "y'", "h");
    ex3.add("gamma", "h", "z").add("-gamma", "z", "h");
    ex3.add("delta", "x", "y'").add("-delta", "y'", "x");
    ex3.add("-2*beta", "x", "z").add("2*beta", "z", "x");
    ex3.add("mu", "y'", "z").add("-mu", "z", "y'");
    ex3.add("1/4", "h", "h").add("1", "x", "x'").add("1", "y'", "y").add("1", "z", "z'");
    auto trace = trace_form(alg);
    return {"malcev7",
            alg,
            {{"example3", ex3, "r0 + 1/4 h⊗h + x⊗x' + y'⊗y + z⊗z' (reference)"}},
            {{"killing", trace, "trace form; trace(x, x') = 12 (derived)"},
             {"trace12", BilinearForm(alg, Scalar(1, 12) * trace.gram),
              "trace form / 12: normalized so that omega(x, x') = 1, reproducing the reference operator (derived)"}}};
}

inline std::vector<CatalogEntry> entries()
{
    return {catalog_sl2(), catalog_malcev7()};
}

inline std::optional<CatalogEntry> find_entry(std::string_view name)
{
    for (auto& e : entries())
        if (e.name == name)
            return e;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parameter sampling

inline const std::vector<Scalar>& sample_values()
{
    static const std::vector<Scalar> values{0, 1, -1, Scalar(1, 2), Scalar(3, 5), Scalar(7, 2)};
    return values;
}

/// Full grid for up to two parameters. For more, 25 tuples: the all-zero
/// tuple, then tuple t = 1..24 takes value index (t + k·(1 + (t−1)/6)) mod 6
/// for parameter k, so every parameter runs through every sample value
/// under four different offsets against the others.
inline std::vector<Params> sample_schedule(const std::vector<std::string>& params)
{
    const auto& vals = sample_values();
    const std::size_t m = vals.size();
    std::vector<Params> out;
    if (params.empty())
        return {Params{}};
    if (params.size() == 1) {
        for (const auto& v : vals)
            out.push_back({{params[0], v}});
        return out;
    }
    if (params.size() == 2) {
        for (const auto& a : vals)
            for (const auto& b : vals)
                out.push_back({{params[0], a}, {params[1], b}});
        return out;
    }
    Params zero;
    for (const auto& p : params)
        zero[p] = 0;
    out.push_back(zero);
    for (std::size_t t = 1; t <= 24; ++t) {
        Params tuple;
        for (std::size_t k = 0; k < params.size(); ++k)
            tuple[params[k]] = vals[(t + k * (1 + (t - 1) / 6)) % m];
        out.push_back(std::move(tuple));
    }
    return out;
}

inline std::string describe(const Params& p)
{
    if (p.empty())
        return "no parameters";
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty())
            s += ", ";
        s += k + "=" + to_string(v);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Golden cases

struct GoldenCase {
    std::string name;
    std::string entry;
    std::string family;
    std::string form;
    bool expect_jacobi;
    bool expect_invariant;
    Scalar expected_weight;
    std::function<LinearOperator(const AlgebraPtr&, const Params&)> expected_operator;
    // Companion table when one is known; empty otherwise.
    std::function<LinearOperator(const AlgebraPtr&, const Params&)> expected_companion;
    std::string provenance;
};

inline std::vector<GoldenCase> golden_cases()
{
    std::vector<GoldenCase> out;
    out.push_back({"sl2-example1", "sl2", "example1", "killing", true, true, -4,
                   [](const AlgebraPtr& a, const Params& p) {
                       const Scalar& al = p.at("alpha");
                       return operator_from_images(a, {{"h", {{"h", 2}, {"x", 8 * al}}},
                                                       {"y", {{"y", 4}, {"h", -4 * al}}}});
                   },
                   [](const AlgebraPtr& a, const Params& p) {
                       const Scalar& al = p.at("alpha");
                       return operator_from_images(a, {{"x", {{"x", 4}}},
                                                       {"h", {{"x", -8 * al}, {"h", 2}}},
                                                       {"y", {{"h", 4 * al}}}});
                   },
                   "reference: R(x)=0, R(h)=2h+8αx, R(y)=4(y−αh), weight −4; Q = 4·id − R"});
    out.push_back({"sl2-example2", "sl2", "example2", "killing", true, false, 0,
                   [](const AlgebraPtr& a, const Params&) { return operator_from_images(a, {{"y", {{"x", 4}}}}); },
                   nullptr, "reference: R(x)=0, R(h)=0, R(y)=4x, weight 0"});
    out.push_back({"malcev7-example3", "malcev7", "example3", "trace12", false, true, -1,
                   [](const AlgebraPtr& a, const Params& p) {
                       const Scalar &al = p.at("alpha"), &be = p.at("beta"), &ga = p.at("gamma"),
                                    &de = p.at("delta"), &mu = p.at("mu");
                       return operator_from_images(
                           a, {{"h", {{"h", Scalar(1, 2)}, {"x", 2 * al}, {"y'", 2 * be}, {"z", 2 * ga}}},
                               {"x'", {{"x'", 1}, {"h", -al}, {"y'", de}, {"z", -2 * be}}},
                               {"y", {{"y", 1}, {"h", -be}, {"x", -de}, {"z", mu}}},
                               {"z'", {{"z'", 1}, {"h", -ga}, {"x", 2 * be}, {"y'", -mu}}}});
                   },
                   nullptr, "reference normalized operator of weight −1"});
    return out;
}

inline std::optional<GoldenCase> find_golden(std::string_view name)
{
    for (auto& g : golden_cases())
        if (g.name == name)
            return g;
    return std::nullopt;
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct GoldenResult {
    std::string name;
    std::vector<CheckResult> checks;
    std::vector<std::string> weights; // inferred weight per sampled tuple

    bool pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    const CheckResult* first_failure() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return &c;
        return nullptr;
    }
};

/// Finds c with a = c·b (both non-zero), or nullopt if not proportional.
inline std::optional<Scalar> proportionality(const Matrix& a, const Matrix& b)
{
    auto ea = a.entries(), eb = b.entries();
    std::optional<Scalar> c;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (eb[i] == 0) {
            if (ea[i] != 0)
                return std::nullopt;
            continue;
        }
        Scalar ratio = ea[i] / eb[i];
        if (c && *c != ratio)
            return std::nullopt;
        c = ratio;
    }
    return c;
}

/// Runs the full pipeline for one golden case at every sampled parameter
/// tuple, in order: identities, CYBE, invariance, double, decomposition,
/// derived operators, form-induced operator, weight, companion. Every expected value
/// is recomputed here, never read from a file.
inline GoldenResult run_golden(const GoldenCase& gc)
{
    GoldenResult res{gc.name, {}, {}};
    auto entry = find_entry(gc.entry);
    const auto& alg = entry->algebra;
    const auto* fam = entry->family(gc.family);
    const auto* form = entry->form(gc.form);
    auto add = [&](std::string name, bool pass, std::string detail = {}) {
        res.checks.push_back({std::move(name), pass, std::move(detail)});
        return pass;
    };

    add("anticommutative", check_anticommutative(*alg).pass());
    {
        bool jac = check_jacobi(*alg).pass();
        add(gc.expect_jacobi ? "jacobi" : "jacobi fails (non-Lie)", jac == gc.expect_jacobi);
    }
    add("malcev", check_malcev(*alg).pass());
    add("simple", is_simple(alg), to_string(simplicity(alg).verdict));

    const std::size_t n = alg->dim();
    for (const auto& p : sample_schedule(fam->tmpl.params)) {
        const std::string at = "[" + describe(p) + "] ";
        auto r = fam->tmpl.instantiate(p);
        auto residual = cybe_residual(r);
        if (!add(at + "cybe residual zero", residual.is_zero(), "max |coefficient| " + to_string(residual.max_abs())))
            continue;
        add(at + "bracket and slotwise residuals agree", cybe_residual_slotwise(r) == residual);
        bool invariant = is_invariant(symmetric_part(r));
        add(at + (gc.expect_invariant ? "symmetric part invariant" : "symmetric part not invariant"),
            invariant == gc.expect_invariant);

        std::optional<LinearOperator> R1;
        if (gc.expect_invariant) {
            try {
                auto dbl = build_double(alg, r);
                add(at + "double anticommutative", check_anticommutative(*dbl.spec).pass());
                auto dec = decompose(dbl);
                add(at + "ideals have dimension n", dec.ideal1.size() == n && dec.ideal2.size() == n);
                add(at + "Q(ideal1, ideal2) = 0", check_orthogonality(dec).pass());
                add(at + "phi1, phi2 multiplicative", check_phi_homomorphism(dec).pass());
                add(at + "psi intertwines the actions", check_psi_intertwining(dec).pass());
                auto [r1, q1] = derived_rb(dec);
                add(at + "R1 weight 1", check_rota_baxter(r1, 1).pass());
                add(at + "Q1 weight -1", check_rota_baxter(q1, -1).pass());
                add(at + "R1 - Q1 = -id", (r1.matrix - q1.matrix) == Scalar(-1) * Matrix::identity(n));
                auto omega = omega_form(dec);
                add(at + "omega symmetric, associative, non-degenerate", check_form(omega).all());
                add(at + "sum omega(a_i, .) b_i = R1", from_r(r, omega) == r1);
                R1 = r1;
            } catch (const Refusal& e) {
                add(at + "double and decomposition", false, e.what());
            }
        }

        auto R = from_r(r, *form);
        auto expected = gc.expected_operator(alg, p);
        add(at + "operator matches reference table", R == expected);
        if (R1) {
            auto c = proportionality(R.matrix, R1->matrix);
            add(at + "form operator = c·R1", c.has_value(), c ? "c = " + to_string(*c) : "not proportional");
        }
        auto rep = infer_weight(R);
        res.weights.push_back(weight_string(rep));
        add(at + "weight " + to_string(gc.expected_weight),
            rep.kind == WeightKind::determined && rep.weight == gc.expected_weight, "inferred " + weight_string(rep));

        auto Q = companion(R, gc.expected_weight);
        add(at + "companion has the same weight", infer_weight(Q).has_weight(gc.expected_weight));
        add(at + "R + companion = -weight·id",
            (R.matrix + Q.matrix) == Scalar(-gc.expected_weight) * Matrix::identity(n));
        if (gc.expected_companion)
            add(at + "companion matches reference table", Q == gc.expected_companion(alg, p));
        if (gc.expect_invariant)
            add(at + "operator from tau(r) is the companion", from_r(tau(r), *form) == Q);
    }
    return res;
}

} // namespace drinfeld::catalog
