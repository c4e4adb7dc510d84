#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace drinfeld;
using drinfeld::testing::Gen;

namespace {

AlgebraPtr sl2() { return catalog::sl2(); }
AlgebraPtr malcev() { return catalog::malcev7(); }

AlgebraElement el(const AlgebraPtr& a, std::initializer_list<std::pair<const char*, Scalar>> terms)
{
    auto e = zero_element(a);
    for (const auto& [label, c] : terms)
        e.coords[a->require_index(label)] += c;
    return e;
}

AlgebraPtr zero_algebra(std::size_t n)
{
    std::vector<std::string> basis;
    for (std::size_t i = 0; i < n; ++i)
        basis.push_back("e" + std::to_string(i + 1));
    return make_algebra("zero" + std::to_string(n), basis, {}, true);
}

/// Heisenberg algebra: [p, q] = c.
AlgebraPtr heisenberg()
{
    return make_algebra("heis", {"p", "q", "c"}, {{"p", "q", {{"c", 1}}}}, true);
}

} // namespace

TEST_CASE("multiply on catalog tables", "[algebra]")
{
    auto s = sl2();
    CHECK(multiply(basis_element(s, "h"), basis_element(s, "x")) == el(s, {{"x", 2}}));
    CHECK(multiply(basis_element(s, "x"), basis_element(s, "x")) == zero_element(s));
    CHECK(multiply(basis_element(s, "x"), basis_element(s, "y")) == el(s, {{"h", 1}}));
    CHECK(multiply(basis_element(s, "h"), basis_element(s, "y")) == el(s, {{"y", -2}}));

    auto m = malcev();
    CHECK(multiply(basis_element(m, "x'"), basis_element(m, "y'")) == el(m, {{"z", -2}}));
    CHECK(multiply(basis_element(m, "z"), basis_element(m, "x")) == el(m, {{"y'", 2}}));
    CHECK(multiply(basis_element(m, "z'"), basis_element(m, "x'")) == el(m, {{"y", -2}}));
    CHECK(multiply(basis_element(m, "y'"), basis_element(m, "z'")) == el(m, {{"x", -2}}));
    CHECK(multiply(basis_element(m, "h"), basis_element(m, "z'")) == el(m, {{"z'", -2}}));
}

TEST_CASE("multiply rejects elements of different algebras", "[algebra]")
{
    CHECK_THROWS_AS(multiply(basis_element(sl2(), 0), basis_element(malcev(), 0)), InputError);
}

TEST_CASE("ad_matrix", "[algebra]")
{
    auto s = sl2();
    Matrix diag(3, 3);
    diag(0, 0) = 2;
    diag(2, 2) = -2;
    CHECK(ad_matrix(basis_element(s, "h")).matrix == diag);
    CHECK(ad_matrix(zero_element(s)).matrix.is_zero());
    CHECK(ad_matrix(basis_element(s, "x"))(basis_element(s, "y")) == el(s, {{"h", 1}}));
}

TEST_CASE("jacobian", "[algebra]")
{
    auto s = sl2();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(jacobian(basis_element(s, i), basis_element(s, j), basis_element(s, k)) == zero_element(s));

    // (xy)x' + (yx')x + (x'x)y = 2z'·x' + 0 − h·y = −4y − 2y
    auto m = malcev();
    CHECK(jacobian(basis_element(m, "x"), basis_element(m, "y"), basis_element(m, "x'")) == el(m, {{"y", -6}}));

    Gen gen(5);
    for (int t = 0; t < 20; ++t) {
        auto x = gen.element(m), z = gen.element(m);
        CHECK(jacobian(x, x, z) == zero_element(m));
    }
}

TEST_CASE("check_anticommutative", "[algebra]")
{
    CHECK(check_anticommutative(*sl2()).pass());
    CHECK(check_anticommutative(*malcev()).pass());

    auto idem = make_algebra("idem", {"e1"}, {{"e1", "e1", {{"e1", 1}}}}, false);
    auto rep = check_anticommutative(*idem);
    CHECK_FALSE(rep.pass());
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].where == "(e1,e1)");
}

TEST_CASE("check_jacobi", "[algebra]")
{
    CHECK(check_jacobi(*sl2()).pass());
    CHECK_FALSE(check_jacobi(*malcev()).pass());
    CHECK(check_jacobi(*zero_algebra(1)).pass());
    CHECK(check_jacobi(*heisenberg()).pass());
}

TEST_CASE("check_malcev", "[algebra]")
{
    CHECK(check_malcev(*malcev()).pass());
    CHECK(check_malcev(*sl2()).pass());
    CHECK(check_malcev(*heisenberg()).pass());

    SECTION("e1e2 = e1 with every other product zero")
    {
        auto a = make_algebra("lit", {"e1", "e2"}, {{"e1", "e2", {{"e1", 1}}}}, false);
        CHECK_FALSE(check_malcev(*a).pass());
    }
    SECTION("its anticommutative completion is Lie, hence Malcev")
    {
        auto a = make_algebra("aff", {"e1", "e2"}, {{"e1", "e2", {{"e1", 1}}}}, true);
        CHECK(check_jacobi(*a).pass());
        CHECK(check_malcev(*a).pass());
    }
    SECTION("an anticommutative algebra that is not Malcev")
    {
        auto a = make_algebra("nm", {"e1", "e2", "e3"}, {{"e1", "e2", {{"e3", 1}}}, {"e1", "e3", {{"e1", 1}}}}, true);
        CHECK(check_anticommutative(*a).pass());
        CHECK_FALSE(check_malcev(*a).pass());
        // By hand at (e1, e2, e3): e1·e3 = e1, so J(e1, e2, e1·e3) = J(e1, e2, e1) = 0.
        // J(e1,e2,e3) = (e1e2)e3 + (e2e3)e1 + (e3e1)e2 = 0 + 0 + (−e1)e2 = −e3,
        // so J(e1,e2,e3)·e1 = −e3·e1 = e1.
        auto e1 = basis_element(a, "e1"), e2 = basis_element(a, "e2"), e3 = basis_element(a, "e3");
        auto lhs = jacobian(e1, e2, multiply(e1, e3));
        auto rhs = multiply(jacobian(e1, e2, e3), e1);
        CHECK(lhs == zero_element(a));
        CHECK(rhs == el(a, {{"e1", 1}}));
    }
}

TEST_CASE("trace_form", "[algebra]")
{
    auto s = sl2();
    auto k = trace_form(s);
    CHECK(k(basis_element(s, "h"), basis_element(s, "h")) == 8);
    CHECK(k(basis_element(s, "x"), basis_element(s, "y")) == 4);
    CHECK(k(basis_element(s, "y"), basis_element(s, "x")) == 4);
    CHECK(k(basis_element(s, "x"), basis_element(s, "x")) == 0);
    CHECK(k(basis_element(s, "x"), basis_element(s, "h")) == 0);
    CHECK(k(basis_element(s, "y"), basis_element(s, "y")) == 0);

    auto m = malcev();
    auto t = trace_form(m);
    CHECK(t(basis_element(m, "x"), basis_element(m, "x'")) == 12);
    CHECK(t(basis_element(m, "h"), basis_element(m, "h")) == 24);
    CHECK(t(basis_element(m, "x"), basis_element(m, "y")) == 0);
}

TEST_CASE("trace_form agrees with an explicit product of multiplication matrices", "[algebra][property]")
{
    for (const auto& alg : {sl2(), malcev()}) {
        auto t = trace_form(alg);
        const std::size_t n = alg->dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto li = ad_matrix(basis_element(alg, i)).matrix, lj = ad_matrix(basis_element(alg, j)).matrix;
                REQUIRE(t.gram(i, j) == (li * lj).trace());
            }
    }
}

TEST_CASE("check_form", "[algebra]")
{
    CHECK(check_form(trace_form(sl2())).all());
    CHECK(check_form(trace_form(malcev())).all());

    auto zero = check_form(BilinearForm(sl2(), Matrix(3, 3)));
    CHECK(zero.symmetric);
    CHECK(zero.associative);
    CHECK_FALSE(zero.nondegenerate);

    Matrix id = Matrix::identity(3);
    auto f = check_form(BilinearForm(sl2(), id));
    CHECK(f.symmetric);
    CHECK(f.nondegenerate);
    CHECK_FALSE(f.associative);
}

TEST_CASE("ideal_closure", "[algebra]")
{
    auto s = sl2();
    CHECK(ideal_closure(s, {basis_element(s, "x")}).size() == 3);
    CHECK(ideal_closure(s, {zero_element(s)}).empty());
    CHECK(ideal_closure(s, {}).empty());

    auto sum = direct_sum(*s, *s, "sl2+sl2");
    auto summand = ideal_closure(*sum, {unit_vector(6, sum->require_index("x_1"))});
    REQUIRE(summand.size() == 3);
    for (const auto& v : summand)
        for (std::size_t k = 3; k < 6; ++k)
            CHECK(v[k] == 0);

    auto h = heisenberg();
    auto centre = ideal_closure(h, {basis_element(h, "c")});
    REQUIRE(centre.size() == 1);
    CHECK(ideal_closure(h, {basis_element(h, "p")}).size() == 2);
}

TEST_CASE("ideal_closure is monotone in the seed", "[algebra][property]")
{
    Gen gen(31);
    auto s = sl2();
    auto sum = direct_sum(*s, *heisenberg(), "sl2+heis");
    for (int t = 0; t < 60; ++t) {
        std::vector<Vector> seed;
        int k = gen.integer(0, 2);
        for (int i = 0; i < k; ++i) {
            Vector v(sum->dim());
            v[static_cast<std::size_t>(gen.integer(0, 5))] = gen.nonzero_scalar();
            seed.push_back(v);
        }
        auto small = ideal_closure(*sum, seed);
        auto bigger_seed = seed;
        bigger_seed.push_back(gen.vector(sum->dim()));
        auto big = ideal_closure(*sum, bigger_seed);
        REQUIRE(big.size() >= small.size());
        for (const auto& v : small)
            REQUIRE(in_span(big, v));
        // the output is an ideal: closed under multiplication by basis vectors
        for (const auto& v : big)
            for (std::size_t i = 0; i < sum->dim(); ++i) {
                REQUIRE(in_span(big, sum->product(unit_vector(sum->dim(), i), v)));
                REQUIRE(in_span(big, sum->product(v, unit_vector(sum->dim(), i))));
            }
    }
}

TEST_CASE("is_simple", "[algebra]")
{
    CHECK(is_simple(sl2()));
    CHECK(is_simple(malcev()));
    CHECK_FALSE(is_simple(zero_algebra(2)));
    CHECK_FALSE(is_simple(zero_algebra(1)));
    CHECK_FALSE(is_simple(heisenberg()));

    auto sum = simplicity(direct_sum(*sl2(), *sl2(), "sl2+sl2"));
    CHECK(sum.verdict == Simplicity::not_simple);
    CHECK(sum.proper_ideal.size() == 3);

    auto msum = simplicity(direct_sum(*malcev(), *sl2(), "m+sl2"));
    CHECK(msum.verdict == Simplicity::not_simple);
}

TEST_CASE("centroid", "[algebra]")
{
    CHECK(centroid(*sl2()).size() == 1);
    CHECK(centroid(*malcev()).size() == 1);
    CHECK(centroid(*direct_sum(*sl2(), *sl2(), "sl2+sl2")).size() == 2);
}

TEST_CASE("restrict_to and direct_sum", "[algebra]")
{
    auto s = sl2();
    auto sum = direct_sum(*s, *s, "sl2+sl2");
    CHECK(sum->basis() == std::vector<std::string>{"x_1", "h_1", "y_1", "x_2", "h_2", "y_2"});
    CHECK(check_jacobi(*sum).pass());

    std::vector<Vector> second;
    for (std::size_t i = 3; i < 6; ++i)
        second.push_back(unit_vector(6, i));
    auto back = restrict_to(*sum, second, "copy");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(back->basis_product(i, j) == s->basis_product(i, j));

    // span{x, h} is a subalgebra; span{x, y} is not
    CHECK(restrict_to(*s, {unit_vector(3, 0), unit_vector(3, 1)}, "borel")->dim() == 2);
    CHECK_THROWS_AS(restrict_to(*s, {unit_vector(3, 0), unit_vector(3, 2)}, "bad"), InputError);
}

TEST_CASE("make_algebra validates its product list", "[algebra]")
{
    using R = std::vector<ProductRule>;
    CHECK_THROWS_AS(make_algebra("a", {"e", "e"}, {}, true), InputError);
    CHECK_THROWS_AS(make_algebra("a", {"e", "f"}, R{{"e", "g", {{"e", 1}}}}, true), InputError);
    CHECK_THROWS_AS(make_algebra("a", {"e", "f"}, R{{"e", "f", {{"g", 1}}}}, true), InputError);
    CHECK_THROWS_AS(make_algebra("a", {"e", "f"}, R{{"e", "e", {{"e", 1}}}}, true), InputError);
    CHECK_THROWS_AS(make_algebra("a", {"e", "f"}, R{{"f", "e", {{"e", 1}}}, {"e", "f", {{"e", -1}}}}, true),
                    InputError);
    CHECK_THROWS_AS(make_algebra("a", {"e", "f"}, R{{"e", "f", {{"e", 1}}}, {"e", "f", {{"f", 1}}}}, true),
                    InputError);
    // a reversed pair defines the product by skew-symmetry
    auto rev = make_algebra("a", {"e", "f"}, R{{"f", "e", {{"e", 1}}}}, true);
    CHECK(multiply(basis_element(rev, "e"), basis_element(rev, "f")) == Scalar(-1) * basis_element(rev, "e"));
    CHECK(multiply(basis_element(rev, "f"), basis_element(rev, "e")) == basis_element(rev, "e"));
    // without the anticommutative declaration, squares and reversed pairs are fine
    CHECK_NOTHROW(make_algebra("a", {"e", "f"}, R{{"f", "e", {{"e", 1}}}, {"e", "e", {{"f", 1}}}}, false));
}

TEST_CASE("multiply is bilinear", "[algebra][property]")
{
    Gen gen(1234);
    for (const auto& alg : {sl2(), malcev()}) {
        for (int t = 0; t < 40; ++t) {
            auto a = gen.element(alg), b = gen.element(alg), c = gen.element(alg);
            Scalar s = gen.scalar();
            REQUIRE(multiply(s * a + b, c) == s * multiply(a, c) + multiply(b, c));
            REQUIRE(multiply(c, s * a + b) == s * multiply(c, a) + multiply(c, b));
            REQUIRE(multiply(a, b) == Scalar(-1) * multiply(b, a));
        }
    }
}

TEST_CASE("Lie algebras pass the Malcev check", "[algebra][property]")
{
    auto s = sl2();
    std::vector<AlgebraPtr> lie{s, heisenberg(), zero_algebra(3), direct_sum(*s, *heisenberg(), "sl2+heis")};
    // doubles of sl2 along sampled members of the first family are Lie as well
    for (const auto& a : {Scalar(0), Scalar(1, 2), Scalar(-1)})
        lie.push_back(build_double(s, testing::example1(a)).spec);
    for (const auto& alg : lie) {
        REQUIRE(check_jacobi(*alg).pass());
        REQUIRE(check_malcev(*alg).pass());
    }
    // and on the catalog: Jacobi ⇒ Malcev
    for (const auto& e : catalog::entries())
        if (check_jacobi(*e.algebra).pass())
            CHECK(check_malcev(*e.algebra).pass());
}
