// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expected tables are typed in here rather than taken from
// the catalog, so the catalog itself is under test.

#include "support.hpp"

#include <drinfeld/cli.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace drinfeld;
using drinfeld::testing::example1;
using drinfeld::testing::example3;
using drinfeld::testing::malcev_params;
using drinfeld::testing::malcev_schedule;
using drinfeld::testing::tensor_of;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

/// Collects failure notes for one criterion; the first few are printed.
class Gate {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok)
            failures_.push_back(what);
    }
    bool pass() const { return failures_.empty() && checks_ > 0; }
    std::size_t checks() const { return checks_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::size_t checks_ = 0;
    std::vector<std::string> failures_;
};

struct Run {
    int code;
    std::string out;
    std::string err;
    json report() const { return out.empty() ? json() : json::parse(out, nullptr, false); }
};

Run cli_run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const fs::path& scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("drinfeld-acceptance-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string scratch_file(const std::string& name) { return (scratch() / name).string(); }

LinearOperator load_op(const std::string& path, const AlgebraPtr& alg)
{
    return io::operator_from_json(io::read_json_file(path), alg);
}

std::vector<std::string> param_args(const catalog::Params& p)
{
    std::vector<std::string> out;
    for (const auto& [k, v] : p) {
        out.push_back("--param");
        out.push_back(k + "=" + to_string(v));
    }
    return out;
}

AlgebraPtr sl2() { return catalog::sl2(); }
AlgebraPtr malcev() { return catalog::malcev7(); }

/// R(x) = 0, R(h) = 2h + 8αx, R(y) = 4y − 4αh
LinearOperator table_r1(const Scalar& a)
{
    Matrix m(3, 3); // basis (x, h, y); column j is R(e_j)
    m(0, 1) = 8 * a;
    m(1, 1) = 2;
    m(1, 2) = -4 * a;
    m(2, 2) = 4;
    return {sl2(), m};
}

/// Q(x) = 4x, Q(h) = 2h − 8αx, Q(y) = 4αh
LinearOperator table_q1(const Scalar& a)
{
    Matrix m(3, 3);
    m(0, 0) = 4;
    m(0, 1) = -8 * a;
    m(1, 1) = 2;
    m(1, 2) = 4 * a;
    return {sl2(), m};
}

/// Basis (h, x, x', y, y', z, z').
LinearOperator table_malcev(const catalog::Params& p)
{
    const Scalar &al = p.at("alpha"), &be = p.at("beta"), &ga = p.at("gamma"), &de = p.at("delta"), &mu = p.at("mu");
    enum { h, x, xp, y, yp, z, zp };
    Matrix m(7, 7);
    m(h, h) = rational(1, 2), m(x, h) = 2 * al, m(yp, h) = 2 * be, m(z, h) = 2 * ga;
    m(xp, xp) = 1, m(h, xp) = -al, m(yp, xp) = de, m(z, xp) = -2 * be;
    m(y, y) = 1, m(h, y) = -be, m(x, y) = -de, m(z, y) = mu;
    m(zp, zp) = 1, m(h, zp) = -ga, m(x, zp) = 2 * be, m(yp, zp) = -mu;
    return {malcev(), m};
}

std::vector<Scalar> alphas() { return catalog::sample_values(); }

/// Every (algebra, r) pair of the catalog whose double exists.
struct DoubleCase {
    std::string label;
    Tensor2 r;
};

std::vector<DoubleCase> double_cases()
{
    std::vector<DoubleCase> out;
    for (const auto& a : alphas())
        out.push_back({"sl2 alpha=" + to_string(a), example1(a)});
    for (const auto& p : malcev_schedule())
        out.push_back({"malcev7 " + catalog::describe(p), example3(p)});
    return out;
}

// ---------------------------------------------------------------------------

void criterion1(Gate& g)
{
    for (const auto& a : alphas()) {
        auto out = scratch_file("c1.json");
        auto d = cli_run({"rb", "derive", "catalog:sl2", "example1", "--param", "alpha=" + to_string(a), "--form", "killing",
                          "-o", out});
        g.expect(d.code == 0, "rb derive exit code at alpha=" + to_string(a));
        g.expect(load_op(out, sl2()) == table_r1(a), "R table at alpha=" + to_string(a));
        auto v = cli_run({"--json", "rb", "verify", "catalog:sl2", out, "--infer"});
        g.expect(v.code == 0 && v.report()["weight"] == "-4", "inferred weight -4 at alpha=" + to_string(a));
    }
}

void criterion2(Gate& g)
{
    for (const auto& a : alphas()) {
        auto in = scratch_file("c2-r.json"), out = scratch_file("c2-q.json");
        io::write_json_file(in, io::operator_to_json(table_r1(a)));
        auto c = cli_run({"rb", "companion", "catalog:sl2", in, "--weight", "-4", "-o", out});
        g.expect(c.code == 0, "rb companion exit code at alpha=" + to_string(a));
        auto Q = load_op(out, sl2());
        g.expect(Q == table_q1(a), "Q table at alpha=" + to_string(a));
        g.expect(Q.matrix + table_r1(a).matrix == Scalar(4) * Matrix::identity(3), "R + Q = 4 id at alpha=" + to_string(a));
    }
}

void criterion3(Gate& g)
{
    g.expect(cli_run({"cybe", "check", "catalog:sl2", "example2"}).code == 0, "x⊗x passes cybe check");
    auto out = scratch_file("c3.json");
    g.expect(cli_run({"rb", "derive", "catalog:sl2", "example2", "--form", "killing", "-o", out}).code == 0,
             "rb derive exit code");
    Matrix expected(3, 3);
    expected(0, 2) = 4; // R(y) = 4x, R(x) = R(h) = 0
    g.expect(load_op(out, sl2()).matrix == expected, "R(y) = 4x and R vanishes on x, h");
    auto v = cli_run({"--json", "rb", "verify", "catalog:sl2", out, "--infer"});
    g.expect(v.code == 0 && v.report()["weight"] == "0", "inferred weight 0");
}

void criterion4(Gate& g)
{
    for (const auto& p : malcev_schedule()) {
        auto where = " at " + catalog::describe(p);
        auto params = param_args(p);
        auto args = [&](std::vector<std::string> head) {
            head.insert(head.end(), params.begin(), params.end());
            return head;
        };
        g.expect(cli_run(args({"cybe", "check", "catalog:malcev7", "example3"})).code == 0, "cybe" + where);
        g.expect(cli_run(args({"invariance", "check", "catalog:malcev7", "example3"})).code == 0, "invariance" + where);
        auto out = scratch_file("c4.json");
        auto d = cli_run(args({"--json", "rb", "derive", "catalog:malcev7", "example3", "--form", "trace12", "-o", out}));
        g.expect(d.code == 0 && d.report()["weight"] == "-1", "weight -1" + where);
        g.expect(load_op(out, malcev()) == table_malcev(p), "operator table" + where);
    }
}

void criterion5(Gate& g)
{
    for (const auto& a : {Scalar(0), rational(1, 2)}) {
        auto where = " at alpha=" + to_string(a);
        auto dbl = build_double(sl2(), example1(a));
        g.expect(dbl.spec->dim() == 6, "double has dimension 6" + where);
        g.expect(check_anticommutative(*dbl.spec).pass(), "double anticommutative" + where);
        g.expect(check_jacobi(*dbl.spec).pass(), "double satisfies Jacobi" + where);
        auto dec = decompose(dbl);
        g.expect(dec.ideal1.size() == 3 && dec.ideal2.size() == 3, "two 3-dimensional ideals" + where);
        g.expect(is_simple(ideal_algebra(dec, 1)), "ideal1 simple" + where);
        g.expect(is_simple(ideal_algebra(dec, 2)), "ideal2 simple" + where);
        bool orthogonal = true;
        for (const auto& u : dec.ideal1)
            for (const auto& v : dec.ideal2)
                orthogonal = orthogonal && form_q(dbl, u, v) == 0;
        g.expect(orthogonal, "Q(ideal1, ideal2) = 0" + where);
        auto both = dec.ideal1;
        both.insert(both.end(), dec.ideal2.begin(), dec.ideal2.end());
        g.expect(rank(Matrix::from_rows(both, 6)) == 6, "ideal1 + ideal2 = D" + where);
    }
}

void criterion6(Gate& g)
{
    for (const auto& p : {malcev_params(0, 0, 0, 0, 0), malcev_params(1, rational(1, 2), -1, rational(3, 5), rational(7, 2))}) {
        auto where = " at " + catalog::describe(p);
        auto dbl = build_double(malcev(), example3(p));
        g.expect(dbl.spec->dim() == 14, "double has dimension 14" + where);
        g.expect(check_malcev(*dbl.spec).pass(), "double satisfies Malcev" + where);
        auto dec = decompose(dbl);
        g.expect(dec.ideal1.size() == 7 && dec.ideal2.size() == 7, "two 7-dimensional ideals" + where);
        g.expect(is_simple(ideal_algebra(dec, 1)), "ideal1 simple" + where);
        g.expect(is_simple(ideal_algebra(dec, 2)), "ideal2 simple" + where);
    }
}

void criterion7(Gate& g)
{
    for (const auto& c : double_cases()) {
        auto dec = decompose(build_double(c.r.algebra, c.r));
        auto [R1, Q1] = derived_rb(dec);
        const std::size_t n = c.r.algebra->dim();
        g.expect(check_rota_baxter(R1, 1).pass(), "R1 weight 1 for " + c.label);
        g.expect(check_rota_baxter(Q1, -1).pass(), "Q1 weight -1 for " + c.label);
        g.expect(R1.matrix - Q1.matrix == Scalar(-1) * Matrix::identity(n), "R1 - Q1 = -id for " + c.label);
    }
}

void criterion8(Gate& g)
{
    for (const auto& c : double_cases()) {
        auto dec = decompose(build_double(c.r.algebra, c.r));
        auto omega = omega_form(dec);
        g.expect(check_form(omega).all(), "omega symmetric, associative, non-degenerate for " + c.label);
        LinearOperator phi1_psi(c.r.algebra, dec.phi1 * dec.psi);
        g.expect(from_r(c.r, omega) == phi1_psi, "sum omega(a_i, .) b_i = phi1 psi for " + c.label);
    }
}

void criterion9(Gate& g)
{
    drinfeld::testing::Gen gen(9);
    std::vector<Tensor2> tensors;
    for (const auto& c : double_cases())
        tensors.push_back(c.r);
    tensors.push_back(tensor_of(sl2(), {{1, "x", "x"}}));
    tensors.push_back(tensor_of(sl2(), {{1, "x", "y"}}));
    for (int t = 0; t < 10; ++t) {
        tensors.push_back(gen.tensor(sl2()));
        tensors.push_back(gen.tensor(malcev()));
    }
    for (const auto& r : tensors) {
        g.expect(tau(tau(r)) == r, "tau involution");
        g.expect(cybe_residual(r) == cybe_residual_slotwise(r), "bracket and slotwise residuals agree");
    }

    std::vector<std::pair<LinearOperator, Scalar>> operators;
    for (const auto& c : double_cases()) {
        auto dec = decompose(build_double(c.r.algebra, c.r));
        g.expect(check_phi_homomorphism(dec).pass(), "phi homomorphism for " + c.label);
        g.expect(check_psi_intertwining(dec).pass(), "psi intertwining for " + c.label);
        auto [R1, Q1] = derived_rb(dec);
        operators.emplace_back(R1, 1);
        operators.emplace_back(Q1, -1);
    }
    for (const auto& a : alphas())
        operators.emplace_back(table_r1(a), -4);
    for (const auto& p : malcev_schedule())
        operators.emplace_back(table_malcev(p), -1);

    for (const auto& [R, lambda] : operators) {
        g.expect(companion(companion(R, lambda), lambda) == R, "companion involution");
        g.expect(check_rota_baxter(companion(R, lambda), lambda).pass(), "companion keeps the weight");
        for (const auto& c : {Scalar(-1), rational(-1, 4), Scalar(3)}) {
            auto [cR, clambda] = weight_scaling(R, lambda, c);
            g.expect(clambda == c * lambda && check_rota_baxter(cR, clambda).pass(),
                     "c*R has weight c*lambda at c=" + to_string(c));
        }
    }
}

void criterion10(Gate& g)
{
    auto xy = scratch_file("c10-xy.json");
    io::write_json_file(xy, io::tensor_to_json(tensor_of(sl2(), {{1, "x", "y"}})));
    g.expect(cli_run({"cybe", "check", "catalog:sl2", xy}).code == 1, "x⊗y fails cybe check");

    auto skew = tensor_of(sl2(), {{1, "h", "x"}, {-1, "x", "h"}});
    bool refused = false;
    try {
        decompose(build_double(sl2(), skew));
    } catch (const Refusal&) {
        refused = true;
    }
    g.expect(refused, "skew input to decompose is refused");

    auto corrupted = scratch_file("c10-corrupted.json");
    std::ofstream(corrupted) << "{\n  \"name\": \"sl2\",\n  \"basis\": [\"x\", \"h\", \"y\"],\n  \"products\": [\n"
                                "    {\"left\": \"h\", \"right\": \"x\", \"result\": [[\"x\", \"2\"]\n  ]\n}\n";
    g.expect(cli_run({"algebra", "check", corrupted}).code == 2, "corrupted structure-constant file exits 2");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Gate&)>>> criteria{
        {"sl2/example1 operator and weight -4", criterion1},
        {"sl2/example1 companion and R + Q = 4 id", criterion2},
        {"sl2/example2 operator and weight 0", criterion3},
        {"Malcev operator table and weight -1", criterion4},
        {"sl2 double and its decomposition", criterion5},
        {"Malcev double and its decomposition", criterion6},
        {"R1 weight 1, Q1 weight -1, R1 - Q1 = -id", criterion7},
        {"omega form and operator reconstruction", criterion8},
        {"property suite", criterion9},
        {"negative controls", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Gate g;
        std::string error;
        try {
            criteria[i].second(g);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const bool ok = error.empty() && g.pass();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  [PRIMARY] criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << g.checks() << " checks)\n";
        if (!error.empty())
            std::cout << "      exception: " << error << "\n";
        for (std::size_t k = 0; k < g.failures().size() && k < 5; ++k)
            std::cout << "      failed: " << g.failures()[k] << "\n";
    }
    fs::remove_all(scratch());
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
