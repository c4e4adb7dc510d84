#pragma once

// JSON readers and writers for algebras, tensors, operators and forms.
// Rationals are strings "p/q" (or "p"); the sign sits on the numerator.

#include "drinfeld/rotabaxter.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace drinfeld::io {

using json = nlohmann::json;

/// Reads and parses a JSON file. Syntax errors carry line and column.
inline json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open \"" + path.string() + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        // what() reads "[json.exception.parse_error.101] parse error at line L, column C: ..."
        std::string msg = e.what();
        auto at = msg.find("at line");
        throw InputError(path.string() + ": malformed JSON " + (at == std::string::npos ? msg : msg.substr(at)));
    }
}

inline void write_json_file(const std::filesystem::path& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write \"" + path.string() + "\"");
    out << j.dump(2) << '\n';
}

namespace detail {

inline const json& field(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(where + ": missing field \"" + key + "\"");
    return obj.at(key);
}

inline std::string string_at(const json& j, const std::string& where)
{
    if (!j.is_string())
        throw InputError(where + ": expected a string");
    return j.get<std::string>();
}

inline Scalar scalar_at(const json& j, const std::string& where)
{
    try {
        if (j.is_number_integer())
            return Scalar(j.get<long>());
        return parse_scalar(string_at(j, where));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

} // namespace detail

inline json to_json(const Scalar& q)
{
    return to_string(q);
}

inline json to_json(const Vector& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

/// Row-major list of rows.
inline json to_json(const Matrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(to_json(m.row(i)));
    return out;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where)
{
    if (!j.is_array() || j.size() != rows)
        throw InputError(where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto rw = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols)
            throw InputError(rw + ": expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = detail::scalar_at(j[i][k], rw + "[" + std::to_string(k) + "]");
    }
    return m;
}

// ---------------------------------------------------------------------------
// Algebras

inline AlgebraPtr algebra_from_json(const json& j)
{
    using detail::field;
    const std::string top = "algebra";
    auto name = detail::string_at(field(j, "name", top), "name");
    const auto& basis_j = field(j, "basis", top);
    if (!basis_j.is_array())
        throw InputError("basis: expected an array of labels");
    std::vector<std::string> basis;
    for (std::size_t i = 0; i < basis_j.size(); ++i)
        basis.push_back(detail::string_at(basis_j[i], "basis[" + std::to_string(i) + "]"));
    if (j.contains("dim")) {
        if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() != basis.size())
            throw InputError("dim: does not match the number of basis labels (" + std::to_string(basis.size()) + ")");
    }
    bool anti = j.value("anticommutative", false);
    std::vector<ProductRule> rules;
    if (j.contains("products")) {
        const auto& prods = j["products"];
        if (!prods.is_array())
            throw InputError("products: expected an array");
        for (std::size_t r = 0; r < prods.size(); ++r) {
            auto where = "products[" + std::to_string(r) + "]";
            ProductRule rule;
            rule.left = detail::string_at(field(prods[r], "left", where), where + ".left");
            rule.right = detail::string_at(field(prods[r], "right", where), where + ".right");
            const auto& res = field(prods[r], "result", where);
            if (!res.is_array())
                throw InputError(where + ".result: expected [[label, coefficient], ...]");
            for (std::size_t t = 0; t < res.size(); ++t) {
                auto tw = where + ".result[" + std::to_string(t) + "]";
                if (!res[t].is_array() || res[t].size() != 2)
                    throw InputError(tw + ": expected [label, coefficient]");
                rule.result.emplace_back(detail::string_at(res[t][0], tw), detail::scalar_at(res[t][1], tw));
            }
            rules.push_back(std::move(rule));
        }
    }
    return make_algebra(std::move(name), std::move(basis), rules, anti);
}

/// Writes the product list; when the table is anticommutative only pairs
/// with left index < right index are emitted.
inline json algebra_to_json(const AlgebraSpec& alg)
{
    const bool anti = check_anticommutative(alg).pass();
    json prods = json::array();
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = anti ? i + 1 : 0; j < n; ++j) {
            auto p = alg.basis_product(i, j);
            if (is_zero(p))
                continue;
            json result = json::array();
            for (std::size_t k = 0; k < n; ++k)
                if (p[k] != 0)
                    result.push_back({alg.basis()[k], to_string(p[k])});
            prods.push_back({{"left", alg.basis()[i]}, {"right", alg.basis()[j]}, {"result", result}});
        }
    return {{"name", alg.name()}, {"dim", n}, {"basis", alg.basis()}, {"anticommutative", anti}, {"products", prods}};
}

// ---------------------------------------------------------------------------
// Tensors

inline TensorTemplate tensor_from_json(const json& j, const AlgebraPtr& alg)
{
    using detail::field;
    auto declared = detail::string_at(field(j, "algebra", "tensor"), "algebra");
    if (declared != alg->name())
        throw InputError("tensor is declared over \"" + declared + "\" but the algebra is \"" + alg->name() + "\"");
    TensorTemplate t{alg, {}, {}};
    if (j.contains("params")) {
        if (!j["params"].is_array())
            throw InputError("params: expected an array of names");
        for (std::size_t i = 0; i < j["params"].size(); ++i)
            t.params.push_back(detail::string_at(j["params"][i], "params[" + std::to_string(i) + "]"));
    }
    const auto& terms = field(j, "terms", "tensor");
    if (!terms.is_array())
        throw InputError("terms: expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        auto where = "terms[" + std::to_string(i) + "]";
        try {
            t.add(detail::string_at(field(terms[i], "coeff", where), where + ".coeff"),
                  detail::string_at(field(terms[i], "left", where), where + ".left"),
                  detail::string_at(field(terms[i], "right", where), where + ".right"));
        } catch (const InputError& e) {
            std::string msg = e.what();
            if (msg.rfind(where, 0) == 0)
                throw;
            throw InputError(where + ": " + msg);
        }
    }
    return t;
}

inline json tensor_to_json(const Tensor2& r)
{
    json terms = json::array();
    const auto& alg = *r.algebra;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            if (r.coeff(i, j) != 0)
                terms.push_back({{"left", alg.basis()[i]}, {"right", alg.basis()[j]}, {"coeff", to_string(r.coeff(i, j))}});
    return {{"algebra", alg.name()}, {"terms", terms}, {"params", json::array()}};
}

// ---------------------------------------------------------------------------
// Operators and forms. matrix[i][j] is the e_i-coefficient of R(e_j).

inline json operator_to_json(const LinearOperator& op)
{
    return {{"algebra", op.algebra->name()}, {"matrix", to_json(op.matrix)}};
}

inline LinearOperator operator_from_json(const json& j, const AlgebraPtr& alg)
{
    auto declared = detail::string_at(detail::field(j, "algebra", "operator"), "algebra");
    if (declared != alg->name())
        throw InputError("operator is declared over \"" + declared + "\" but the algebra is \"" + alg->name() + "\"");
    return {alg, matrix_from_json(detail::field(j, "matrix", "operator"), alg->dim(), alg->dim(), "matrix")};
}

inline json form_to_json(const BilinearForm& form)
{
    return {{"algebra", form.algebra->name()}, {"gram", to_json(form.gram)}};
}

inline BilinearForm form_from_json(const json& j, const AlgebraPtr& alg)
{
    auto declared = detail::string_at(detail::field(j, "algebra", "form"), "algebra");
    if (declared != alg->name())
        throw InputError("form is declared over \"" + declared + "\" but the algebra is \"" + alg->name() + "\"");
    return {alg, matrix_from_json(detail::field(j, "gram", "form"), alg->dim(), alg->dim(), "gram")};
}

inline json weight_to_json(const RBReport& rep)
{
    return weight_string(rep);
}

inline json report_to_json(const IdentityReport& rep, const AlgebraSpec& alg)
{
    json violations = json::array();
    for (const auto& v : rep.violations) {
        json residual = json::object();
        const bool by_label = v.residual.size() == alg.dim();
        for (std::size_t k = 0; k < v.residual.size(); ++k)
            if (v.residual[k] != 0)
                residual[by_label ? alg.basis()[k] : std::to_string(k)] = to_string(v.residual[k]);
        violations.push_back({{"at", v.where}, {"residual", residual}});
    }
    return {{"identity", rep.identity}, {"pass", rep.pass()}, {"checked", rep.checked},
            {"failures", rep.failures}, {"violations", violations}};
}

} // namespace drinfeld::io
