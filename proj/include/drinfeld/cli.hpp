#pragma once

// Command-line front end. Every command builds a JSON report
// {command, inputs, checks: [{name, pass, detail}], weight?}; the text
// output is a rendering of that report.
//
// Exit codes: 0 every check passed, 1 a mathematical check failed,
// 2 bad input (arguments, files, parameters).

#include "drinfeld/catalog.hpp"
#include "drinfeld/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace drinfeld::cli {

using json = nlohmann::json;

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2 };

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    json inputs = json::object();
    json extra = json::object();
    std::optional<std::string> weight;

    bool check(std::string name, bool pass, std::string detail = {})
    {
        checks_.push_back({{"name", std::move(name)}, {"pass", pass}, {"detail", std::move(detail)}});
        return pass;
    }

    bool pass() const
    {
        for (const auto& c : checks_)
            if (!c["pass"].get<bool>())
                return false;
        return true;
    }

    json to_json() const
    {
        json j{{"command", command_}, {"inputs", inputs}, {"checks", checks_}};
        if (weight)
            j["weight"] = *weight;
        for (const auto& [k, v] : extra.items())
            j[k] = v;
        return j;
    }

private:
    std::string command_;
    json checks_ = json::array();
};

// ---------------------------------------------------------------------------
// Text rendering

/// "2*h + 8*x - y"; "0" for the zero vector.
inline std::string format_vector(const AlgebraSpec& alg, std::span<const Scalar> v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0)
            continue;
        Scalar c = v[k];
        if (s.empty()) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            c = abs(c);
        }
        if (c != 1)
            s += to_string(c) + "*";
        s += alg.basis()[k];
    }
    return s.empty() ? "0" : s;
}

inline std::string first_violation(const IdentityReport& rep, const AlgebraSpec& alg)
{
    if (rep.violations.empty())
        return {};
    const auto& v = rep.violations.front();
    std::string res = v.residual.size() == alg.dim() ? format_vector(alg, v.residual) : to_string(max_abs(v.residual));
    return "; first at " + v.where + ": " + res;
}

inline std::string summarize(const IdentityReport& rep, const AlgebraSpec& alg)
{
    return std::to_string(rep.checked - rep.failures) + "/" + std::to_string(rep.checked) + " hold"
           + first_violation(rep, alg);
}

inline std::string format_tensor3(const Tensor3& t, std::size_t limit = 6)
{
    const auto& alg = *t.algebra;
    const std::size_t n = alg.dim();
    std::string s;
    std::size_t shown = 0, total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (t.at(i, j, k) == 0)
                    continue;
                ++total;
                if (shown++ < limit)
                    s += (s.empty() ? "" : ", ") + to_string(t.at(i, j, k)) + " " + alg.basis()[i] + "⊗"
                         + alg.basis()[j] + "⊗" + alg.basis()[k];
            }
    if (total > limit)
        s += ", ... (" + std::to_string(total) + " non-zero terms)";
    return s;
}

inline json tensor3_to_json(const Tensor3& t)
{
    const auto& alg = *t.algebra;
    const std::size_t n = alg.dim();
    json out = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (t.at(i, j, k) != 0)
                    out.push_back({alg.basis()[i], alg.basis()[j], alg.basis()[k], to_string(t.at(i, j, k))});
    return out;
}

/// [[label, "image"], ...] in basis order.
inline json operator_table(const LinearOperator& op)
{
    json table = json::array();
    const auto& alg = *op.algebra;
    for (std::size_t j = 0; j < alg.dim(); ++j)
        table.push_back({alg.basis()[j], format_vector(alg, op.matrix.column(j))});
    return table;
}

inline void render(const json& report, std::ostream& out)
{
    out << report["command"].get<std::string>() << "\n";
    for (const auto& [k, v] : report["inputs"].items())
        out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    std::size_t passed = 0;
    for (const auto& c : report["checks"]) {
        bool ok = c["pass"].get<bool>();
        passed += ok;
        out << (ok ? "  [PASS] " : "  [FAIL] ") << c["name"].get<std::string>();
        auto detail = c["detail"].get<std::string>();
        if (!detail.empty())
            out << "  (" << detail << ")";
        out << "\n";
    }
    if (report.contains("operator")) {
        out << "  operator:\n";
        for (const auto& row : report["operator"])
            out << "    R(" << row[0].get<std::string>() << ") = " << row[1].get<std::string>() << "\n";
    }
    if (report.contains("weight"))
        out << "  weight: " << report["weight"].get<std::string>() << "\n";
    const std::size_t total = report["checks"].size();
    out << (passed == total ? "PASS" : "FAIL") << " (" << passed << "/" << total << " checks)\n";
}

// ---------------------------------------------------------------------------
// Argument resolution

struct AlgebraArg {
    AlgebraPtr algebra;
    std::optional<catalog::CatalogEntry> entry;
};

inline AlgebraArg load_algebra(const std::string& arg)
{
    if (arg.rfind("catalog:", 0) == 0) {
        auto name = arg.substr(8);
        auto e = catalog::find_entry(name);
        if (!e)
            throw InputError("unknown catalog algebra \"" + name + "\" (see `catalog list`)");
        return {e->algebra, std::move(e)};
    }
    auto j = io::read_json_file(arg);
    try {
        return {io::algebra_from_json(j), std::nullopt};
    } catch (const InputError& e) {
        throw InputError(arg + ": " + e.what());
    }
}

inline std::map<std::string, Scalar> parse_params(const std::vector<std::string>& items)
{
    std::map<std::string, Scalar> out;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InputError("--param expects name=p/q, got \"" + item + "\"");
        auto name = item.substr(0, eq);
        Scalar value;
        try {
            value = parse_scalar(item.substr(eq + 1));
        } catch (const InputError& e) {
            throw InputError("--param " + name + ": " + e.what());
        }
        if (!out.emplace(name, value).second)
            throw InputError("parameter \"" + name + "\" is given twice");
    }
    return out;
}

/// A file path, or the name of a family of the catalog algebra.
inline Tensor2 load_tensor(const AlgebraArg& alg, const std::string& arg, const std::vector<std::string>& params)
{
    auto bindings = parse_params(params);
    std::string name = arg.rfind("catalog:", 0) == 0 ? arg.substr(8) : arg;
    if (!std::filesystem::exists(arg)) {
        if (alg.entry) {
            if (const auto* fam = alg.entry->family(name))
                return fam->tmpl.instantiate(bindings);
            throw InputError("\"" + arg + "\" is neither a file nor a family of catalog:" + alg.entry->name);
        }
        throw InputError("cannot open \"" + arg + "\"");
    }
    auto j = io::read_json_file(arg);
    try {
        return io::tensor_from_json(j, alg.algebra).instantiate(bindings);
    } catch (const InputError& e) {
        throw InputError(arg + ": " + e.what());
    }
}

inline BilinearForm load_form(const AlgebraArg& alg, const std::string& arg)
{
    if (alg.entry)
        if (const auto* f = alg.entry->form(arg))
            return *f;
    if (arg == "killing")
        return trace_form(alg.algebra);
    if (!std::filesystem::exists(arg))
        throw InputError("unknown form \"" + arg + "\" (killing, a catalog form name, or a file)");
    auto j = io::read_json_file(arg);
    try {
        return io::form_from_json(j, alg.algebra);
    } catch (const InputError& e) {
        throw InputError(arg + ": " + e.what());
    }
}

inline LinearOperator load_operator(const AlgebraArg& alg, const std::string& arg)
{
    auto j = io::read_json_file(arg);
    try {
        return io::operator_from_json(j, alg.algebra);
    } catch (const InputError& e) {
        throw InputError(arg + ": " + e.what());
    }
}

inline Scalar parse_weight(const std::string& text)
{
    try {
        return parse_scalar(text);
    } catch (const InputError& e) {
        throw InputError(std::string("--weight: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Commands

struct Options {
    std::string algebra;
    std::string tensor;
    std::string operator_file;
    std::string form;
    std::string weight;
    std::string output;
    std::string report_file;
    std::string golden;
    std::vector<std::string> params;
    bool anticommutative = false;
    bool jacobi = false;
    bool malcev = false;
    bool simple = false;
    bool infer = false;
    bool json_output = false;
};

inline json param_inputs(const std::vector<std::string>& params)
{
    json j = json::object();
    for (const auto& [k, v] : parse_params(params))
        j[k] = to_string(v);
    return j;
}

inline void identity_check(Report& rep, const std::string& name, const IdentityReport& id, const AlgebraSpec& alg)
{
    rep.check(name, id.pass(), summarize(id, alg));
}

inline void simplicity_check(Report& rep, const std::string& name, const AlgebraPtr& alg)
{
    auto s = simplicity(alg);
    std::string detail = to_string(s.verdict);
    if (!s.reason.empty())
        detail += ": " + s.reason;
    if (s.verdict == Simplicity::not_simple)
        detail += " (ideal of dimension " + std::to_string(s.proper_ideal.size()) + ")";
    rep.check(name, s.verdict == Simplicity::simple, detail);
}

inline Report cmd_algebra_check(const Options& o)
{
    auto a = load_algebra(o.algebra);
    const auto& alg = *a.algebra;
    Report rep("algebra check");
    rep.inputs["algebra"] = o.algebra;
    rep.inputs["dim"] = alg.dim();
    const bool all = !(o.anticommutative || o.jacobi || o.malcev || o.simple);
    if (all || o.anticommutative)
        identity_check(rep, "anticommutative", check_anticommutative(alg), alg);
    if (all || o.jacobi)
        identity_check(rep, "jacobi", check_jacobi(alg), alg);
    if (all || o.malcev)
        identity_check(rep, "malcev", check_malcev(alg), alg);
    if (all || o.simple)
        simplicity_check(rep, "simple", a.algebra);
    return rep;
}

inline Report cmd_cybe_check(const Options& o)
{
    auto a = load_algebra(o.algebra);
    auto r = load_tensor(a, o.tensor, o.params);
    Report rep("cybe check");
    rep.inputs = {{"algebra", o.algebra}, {"tensor", o.tensor}, {"params", param_inputs(o.params)}};
    auto residual = cybe_residual(r);
    rep.check("cybe residual zero", residual.is_zero(),
              residual.is_zero() ? "residual = 0" : "residual " + format_tensor3(residual));
    rep.extra["residual"] = tensor3_to_json(residual);
    return rep;
}

inline Report cmd_invariance_check(const Options& o)
{
    auto a = load_algebra(o.algebra);
    auto r = load_tensor(a, o.tensor, o.params);
    Report rep("invariance check");
    rep.inputs = {{"algebra", o.algebra}, {"tensor", o.tensor}, {"params", param_inputs(o.params)}};
    auto defects = invariance_defect(symmetric_part(r));
    const auto& alg = *a.algebra;
    std::string detail;
    std::size_t bad = 0;
    json per_basis = json::object();
    for (std::size_t k = 0; k < defects.size(); ++k) {
        if (defects[k].is_zero())
            continue;
        ++bad;
        if (detail.empty())
            detail = "first defect at " + alg.basis()[k];
        per_basis[alg.basis()[k]] = io::tensor_to_json(defects[k])["terms"];
    }
    rep.check("r + tau(r) invariant", bad == 0,
              bad == 0 ? "all " + std::to_string(defects.size()) + " defects vanish"
                       : std::to_string(bad) + " basis elements with non-zero defect; " + detail);
    rep.extra["defects"] = per_basis;
    return rep;
}

inline Report cmd_rb_derive(const Options& o)
{
    auto a = load_algebra(o.algebra);
    auto r = load_tensor(a, o.tensor, o.params);
    auto form = load_form(a, o.form);
    Report rep("rb derive");
    rep.inputs = {{"algebra", o.algebra}, {"tensor", o.tensor}, {"form", o.form}, {"params", param_inputs(o.params)}};
    auto R = from_r(r, form);
    auto w = infer_weight(R);
    rep.weight = weight_string(w);
    rep.check("rota-baxter for some weight", w.has_weight(), "inferred weight " + weight_string(w));
    rep.extra["operator"] = operator_table(R);
    rep.extra["matrix"] = io::operator_to_json(R)["matrix"];
    if (!o.output.empty())
        io::write_json_file(o.output, io::operator_to_json(R));
    return rep;
}

inline Report cmd_rb_verify(const Options& o)
{
    auto a = load_algebra(o.algebra);
    auto R = load_operator(a, o.operator_file);
    Report rep("rb verify");
    rep.inputs = {{"algebra", o.algebra}, {"operator", o.operator_file}};
    rep.extra["operator"] = operator_table(R);
    if (!o.weight.empty()) {
        auto lambda = parse_weight(o.weight);
        rep.inputs["weight"] = to_string(lambda);
        auto id = check_rota_baxter(R, lambda);
        identity_check(rep, id.identity, id, *a.algebra);
        if (id.pass())
            rep.weight = to_string(lambda);
        return rep;
    }
    auto w = infer_weight(R);
    rep.weight = weight_string(w);
    std::string detail = "inferred weight " + weight_string(w);
    if (!w.defects.empty())
        detail += "; first defect at " + w.defects.front().where + ": " + format_vector(*a.algebra, w.defects.front().residual);
    rep.check("rota-baxter for some weight", w.has_weight(), detail);
    return rep;
}

inline Report cmd_rb_companion(const Options& o)
{
    auto a = load_algebra(o.algebra);
    auto R = load_operator(a, o.operator_file);
    auto lambda = parse_weight(o.weight);
    Report rep("rb companion");
    rep.inputs = {{"algebra", o.algebra}, {"operator", o.operator_file}, {"weight", to_string(lambda)}};
    auto Q = companion(R, lambda);
    identity_check(rep, "input is rota-baxter of weight " + to_string(lambda), check_rota_baxter(R, lambda), *a.algebra);
    identity_check(rep, "companion is rota-baxter of weight " + to_string(lambda), check_rota_baxter(Q, lambda),
                   *a.algebra);
    rep.weight = to_string(lambda);
    rep.extra["operator"] = operator_table(Q);
    rep.extra["matrix"] = io::operator_to_json(Q)["matrix"];
    if (!o.output.empty())
        io::write_json_file(o.output, io::operator_to_json(Q));
    return rep;
}

inline json rows_to_json(const std::vector<Vector>& rows)
{
    json out = json::array();
    for (const auto& v : rows)
        out.push_back(io::to_json(v));
    return out;
}

inline Report cmd_double_build(const Options& o)
{
    auto a = load_algebra(o.algebra);
    auto r = load_tensor(a, o.tensor, o.params);
    const auto& base = *a.algebra;
    const std::size_t n = base.dim();
    Report rep("double build");
    rep.inputs = {{"algebra", o.algebra}, {"tensor", o.tensor}, {"params", param_inputs(o.params)}};

    std::optional<DoubleAlgebra> dbl;
    try {
        dbl = build_double(a.algebra, r);
    } catch (const Refusal& e) {
        rep.check("input accepted (" + e.check + ")", false, e.what());
        return rep;
    }
    rep.check("cybe residual zero", true);
    rep.check("r + tau(r) invariant", true);
    const auto& D = *dbl->spec;
    identity_check(rep, "double anticommutative", check_anticommutative(D), D);
    if (check_jacobi(base).pass())
        identity_check(rep, "double jacobi", check_jacobi(D), D);
    else
        identity_check(rep, "double malcev", check_malcev(D), D);

    std::optional<DoubleDecomposition> dec;
    try {
        dec = decompose(*dbl);
    } catch (const Refusal& e) {
        rep.check("decomposition (" + e.check + ")", false, e.what());
        return rep;
    }
    {
        auto both = dec->ideal1;
        both.insert(both.end(), dec->ideal2.begin(), dec->ideal2.end());
        rep.check("ideal1 + ideal2 = D", rank(Matrix::from_rows(both, 2 * n)) == 2 * n,
                  "dimensions " + std::to_string(dec->ideal1.size()) + " + " + std::to_string(dec->ideal2.size()));
    }
    identity_check(rep, "Q(ideal1, ideal2) = 0", check_orthogonality(*dec), D);
    simplicity_check(rep, "ideal1 simple", ideal_algebra(*dec, 1));
    simplicity_check(rep, "ideal2 simple", ideal_algebra(*dec, 2));
    identity_check(rep, "phi1, phi2 multiplicative", check_phi_homomorphism(*dec), base);
    identity_check(rep, "psi intertwines the actions", check_psi_intertwining(*dec), base);
    auto [R1, Q1] = derived_rb(*dec);
    identity_check(rep, "R1 weight 1", check_rota_baxter(R1, 1), base);
    identity_check(rep, "Q1 weight -1", check_rota_baxter(Q1, -1), base);
    rep.check("R1 - Q1 = -id", (R1.matrix - Q1.matrix) == Scalar(-1) * Matrix::identity(n));
    auto omega = omega_form(*dec);
    auto fr = check_form(omega);
    rep.check("omega symmetric, associative, non-degenerate", fr.all(),
              std::string("symmetric ") + (fr.symmetric ? "yes" : "no") + ", associative "
                  + (fr.associative ? "yes" : "no") + ", non-degenerate " + (fr.nondegenerate ? "yes" : "no"));
    rep.check("sum omega(a_i, .) b_i = R1", from_r(r, omega) == R1);

    rep.extra["R1"] = operator_table(R1);
    rep.extra["Q1"] = operator_table(Q1);
    if (!o.output.empty()) {
        json out{{"double", io::algebra_to_json(D)},
                 {"pairing", io::to_json(dbl->qform.gram)},
                 {"ideal1", rows_to_json(dec->ideal1)},
                 {"ideal2", rows_to_json(dec->ideal2)},
                 {"phi1", io::to_json(dec->phi1)},
                 {"phi2", io::to_json(dec->phi2)},
                 {"psi", io::to_json(dec->psi)},
                 {"R1", io::operator_to_json(R1)},
                 {"Q1", io::operator_to_json(Q1)},
                 {"omega", io::form_to_json(omega)}};
        io::write_json_file(o.output, out);
    }
    return rep;
}

inline Report cmd_catalog_list(const Options&)
{
    Report rep("catalog list");
    json list = json::array();
    for (const auto& e : catalog::entries()) {
        json fams = json::array(), forms = json::array();
        for (const auto& f : e.families)
            fams.push_back({{"name", f.name}, {"params", f.tmpl.params}, {"provenance", f.provenance}});
        for (const auto& f : e.forms)
            forms.push_back({{"name", f.name}, {"provenance", f.provenance}});
        list.push_back({{"name", e.name}, {"dim", e.algebra->dim()}, {"basis", e.algebra->basis()},
                        {"families", fams}, {"forms", forms}});
    }
    json golden = json::array();
    for (const auto& g : catalog::golden_cases())
        golden.push_back({{"name", g.name}, {"provenance", g.provenance}});
    rep.extra["entries"] = list;
    rep.extra["golden"] = golden;
    return rep;
}

/// A golden case name, or an entry name (runs every case of that entry).
inline Report cmd_catalog_golden(const Options& o)
{
    std::vector<catalog::GoldenCase> cases;
    for (auto& g : catalog::golden_cases())
        if (g.name == o.golden || g.entry == o.golden)
            cases.push_back(std::move(g));
    if (cases.empty())
        throw InputError("unknown golden case \"" + o.golden + "\" (see `catalog list`)");
    Report rep("catalog golden");
    rep.inputs["name"] = o.golden;
    std::set<std::string> weights;
    json failures = json::array();
    for (const auto& g : cases) {
        auto res = catalog::run_golden(g);
        for (const auto& c : res.checks)
            rep.check(cases.size() > 1 ? g.name + " " + c.name : c.name, c.pass, c.detail);
        weights.insert(res.weights.begin(), res.weights.end());
        if (const auto* f = res.first_failure())
            failures.push_back({{"case", g.name}, {"check", f->name}, {"detail", f->detail}});
    }
    if (weights.size() == 1)
        rep.weight = *weights.begin();
    else if (!weights.empty())
        rep.extra["weights"] = weights;
    rep.extra["first_failure"] = failures.empty() ? json(nullptr) : failures.front();
    return rep;
}

// ---------------------------------------------------------------------------
// Entry point

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact verifier for Yang-Baxter solutions, Drinfeld doubles and Rota-Baxter operators", "drinfeld"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json_output, "Print the JSON report instead of text");

    auto add_report = [&](CLI::App* sub) { sub->add_option("--report", o.report_file, "Also write the JSON report here"); };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--param", o.params, "Bind a tensor parameter, name=p/q")
            ->expected(1)
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    };
    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("algebra", o.algebra, "Algebra JSON file or catalog:NAME")->required();
    };
    auto add_tensor = [&](CLI::App* sub) {
        sub->add_option("tensor", o.tensor, "Tensor JSON file or catalog family name")->required();
    };

    auto* algebra = app.add_subcommand("algebra", "Identity checks on an algebra")->require_subcommand(1);
    auto* algebra_check = algebra->add_subcommand("check", "Check identities (all when no flag is given)");
    add_algebra(algebra_check);
    algebra_check->add_flag("--anticommutative", o.anticommutative);
    algebra_check->add_flag("--jacobi", o.jacobi);
    algebra_check->add_flag("--malcev", o.malcev);
    algebra_check->add_flag("--simple", o.simple);
    add_report(algebra_check);

    auto* cybe = app.add_subcommand("cybe", "Classical Yang-Baxter equation")->require_subcommand(1);
    auto* cybe_check = cybe->add_subcommand("check", "Compute the CYBE residual");
    add_algebra(cybe_check);
    add_tensor(cybe_check);
    add_params(cybe_check);
    add_report(cybe_check);

    auto* inv = app.add_subcommand("invariance", "Invariance of r + tau(r)")->require_subcommand(1);
    auto* inv_check = inv->add_subcommand("check", "Check that r + tau(r) is invariant");
    add_algebra(inv_check);
    add_tensor(inv_check);
    add_params(inv_check);
    add_report(inv_check);

    auto* rb = app.add_subcommand("rb", "Rota-Baxter operators")->require_subcommand(1);
    auto* rb_derive = rb->add_subcommand("derive", "Operator R(a) = sum omega(a_i, a) b_i");
    add_algebra(rb_derive);
    add_tensor(rb_derive);
    add_params(rb_derive);
    rb_derive->add_option("--form", o.form, "killing, a catalog form name, or a form JSON file")->required();
    rb_derive->add_option("-o,--output", o.output, "Write the operator JSON here");
    add_report(rb_derive);

    auto* rb_verify = rb->add_subcommand("verify", "Check the Rota-Baxter identity");
    add_algebra(rb_verify);
    rb_verify->add_option("operator", o.operator_file, "Operator JSON file")->required();
    auto* weight_opt = rb_verify->add_option("--weight", o.weight, "Check this weight, p/q");
    auto* infer_opt = rb_verify->add_flag("--infer", o.infer, "Infer the weight (default)");
    weight_opt->excludes(infer_opt);
    add_report(rb_verify);

    auto* rb_comp = rb->add_subcommand("companion", "Companion -weight*id - R");
    add_algebra(rb_comp);
    rb_comp->add_option("operator", o.operator_file, "Operator JSON file")->required();
    rb_comp->add_option("--weight", o.weight, "Weight of the input operator, p/q")->required();
    rb_comp->add_option("-o,--output", o.output, "Write the companion JSON here");
    add_report(rb_comp);

    auto* dbl = app.add_subcommand("double", "Drinfeld double")->require_subcommand(1);
    auto* dbl_build = dbl->add_subcommand("build", "Build and decompose the double");
    add_algebra(dbl_build);
    add_tensor(dbl_build);
    add_params(dbl_build);
    dbl_build->add_option("-o,--output", o.output, "Write the double and its decomposition here");
    add_report(dbl_build);

    auto* cat = app.add_subcommand("catalog", "Built-in algebras and golden cases")->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "List catalog entries and golden cases");
    add_report(cat_list);
    auto* cat_golden = cat->add_subcommand("golden", "Run every golden check of a case");
    cat_golden->add_option("name", o.golden, "Golden case or entry name")->required();
    add_report(cat_golden);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        std::optional<Report> rep;
        if (algebra_check->parsed())
            rep = cmd_algebra_check(o);
        else if (cybe_check->parsed())
            rep = cmd_cybe_check(o);
        else if (inv_check->parsed())
            rep = cmd_invariance_check(o);
        else if (rb_derive->parsed())
            rep = cmd_rb_derive(o);
        else if (rb_verify->parsed())
            rep = cmd_rb_verify(o);
        else if (rb_comp->parsed())
            rep = cmd_rb_companion(o);
        else if (dbl_build->parsed())
            rep = cmd_double_build(o);
        else if (cat_list->parsed())
            rep = cmd_catalog_list(o);
        else
            rep = cmd_catalog_golden(o);

        auto j = rep->to_json();
        if (!o.report_file.empty())
            io::write_json_file(o.report_file, j);
        if (o.json_output)
            out << j.dump(2) << "\n";
        else if (cat_list->parsed()) {
            for (const auto& e : j["entries"]) {
                out << e["name"].get<std::string>() << " (dim " << e["dim"] << ")\n";
                for (const auto& f : e["families"])
                    out << "  family " << f["name"].get<std::string>() << " " << f["params"].dump() << "\n";
                for (const auto& f : e["forms"])
                    out << "  form " << f["name"].get<std::string>() << "\n";
            }
            out << "golden cases:\n";
            for (const auto& g : j["golden"])
                out << "  " << g["name"].get<std::string>() << "\n";
        } else
            render(j, out);
        return rep->pass() ? exit_ok : exit_check_failed;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const Refusal& e) {
        err << "refused (" << e.check << "): " << e.what() << "\n";
        return exit_check_failed;
    }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace drinfeld::cli
