#include "frobkit/algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace frobkit;

namespace {

Element elem(const AlgebraPtr& alg, std::initializer_list<int> coords) {
    std::vector<Scalar> c;
    for (int v : coords) c.emplace_back(v);
    return make_element(alg, std::move(c));
}

Element random_element(const AlgebraPtr& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Scalar> c(alg->dim());
    for (auto& x : c) x = Scalar(num(rng)) / Scalar(den(rng));
    return Element{alg, std::move(c)};
}

} // namespace

TEST_CASE("axiom check accepts valid algebras", "[algebra]") {
    CHECK(check_algebra_axioms(*function_algebra({"x", "y"})).empty());
    const AlgebraPtr field = make_algebra(1, {"1"}, {Scalar(1)}, {Scalar(1)});
    CHECK(check_algebra_axioms(*field).empty());
}

TEST_CASE("axiom check reports a commutativity violation", "[algebra]") {
    const AlgebraPtr good = function_algebra({"x", "y"});
    std::vector<Scalar> c(8);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) c[(std::size_t(i) * 2 + j) * 2 + k] = good->c(i, j, k);
    c[(0 * 2 + 1) * 2 + 0] = 1;  // e_x e_y != e_y e_x now
    const AlgebraPtr bad = make_algebra(2, {"x", "y"}, {Scalar(1), Scalar(1)}, c);
    const AxiomReport report = check_algebra_axioms(*bad);
    CHECK(!report.commutativity.empty());
}

TEST_CASE("multiplication in the function algebra is pointwise", "[algebra]") {
    const AlgebraPtr alg = function_algebra({"x", "y"});
    CHECK(mul(unit_element(alg), elem(alg, {2, 3})) == elem(alg, {2, 3}));
    CHECK(mul(elem(alg, {2, 3}), elem(alg, {5, 7})) == elem(alg, {10, 21}));
    CHECK(mul(basis_element(alg, 0), basis_element(alg, 1)).is_zero());
    CHECK(mul(elem(alg, {2, 3}), elem(alg, {5, 7})) == mul(elem(alg, {5, 7}), elem(alg, {2, 3})));
}

TEST_CASE("operations on mismatched algebras are rejected", "[algebra]") {
    const AlgebraPtr a = function_algebra({"x", "y"});
    const AlgebraPtr b = function_algebra({"x", "y", "w"});
    CHECK_THROWS_WITH(mul(unit_element(a), unit_element(b)), "algebra mismatch");
    CHECK_THROWS_WITH(unit_element(a) + unit_element(b), "algebra mismatch");
}

TEST_CASE("powers", "[algebra]") {
    const AlgebraPtr alg = function_algebra({"x", "y"});
    const Element a = elem(alg, {2, 3});
    CHECK(power(a, 0) == unit_element(alg));
    CHECK(power(a, 1) == a);
    CHECK(power(a, 3) == elem(alg, {8, 27}));
}

TEST_CASE("inversion", "[algebra]") {
    const AlgebraPtr alg = function_algebra({"x", "y"});
    CHECK(invert(unit_element(alg)) == unit_element(alg));
    const Element inv = invert(elem(alg, {2, 3}));
    CHECK(inv.coords[0] == Scalar(1) / 2);
    CHECK(inv.coords[1] == Scalar(1) / 3);
    CHECK_THROWS_WITH(invert(elem(alg, {0, 3})), "element not invertible");

    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        const Element a = random_element(alg, rng);
        if (a.coords[0].is_zero() || a.coords[1].is_zero()) continue;
        CHECK(mul(a, invert(a)) == unit_element(alg));
    }
}

TEST_CASE("function algebra construction", "[algebra]") {
    const AlgebraPtr one = function_algebra({"x"});
    CHECK(one->dim() == 1);
    CHECK(one->c(0, 0, 0) == 1);

    const AlgebraPtr two = function_algebra({"x", "y"});
    CHECK(mul(basis_element(two, 0), basis_element(two, 0)) == basis_element(two, 0));
    CHECK(mul(basis_element(two, 1), basis_element(two, 1)) == basis_element(two, 1));
    CHECK(mul(basis_element(two, 0), basis_element(two, 1)).is_zero());

    CHECK_THROWS_AS(function_algebra({}), Error);
    CHECK_THROWS_AS(function_algebra({"x", "x"}), Error);
    CHECK(is_function_algebra(*two));
}

TEST_CASE("evaluation homomorphisms extract coordinates", "[algebra]") {
    const AlgebraPtr alg = function_algebra({"x", "y"});
    const LinearMap ev = evaluation_hom(alg, "x");
    CHECK(apply(ev, elem(alg, {2, 3})).coords[0] == 2);
    CHECK(apply(ev, unit_element(alg)).coords[0] == 1);
    CHECK_THROWS_AS(evaluation_hom(alg, "nope"), Error);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Element a = random_element(alg, rng);
        const Element b = random_element(alg, rng);
        CHECK(apply(ev, mul(a, b)) == mul(apply(ev, a), apply(ev, b)));
        // Quadric: ev(a^2) = ev(a)^2.
        CHECK(apply(ev, mul(a, a)) == mul(apply(ev, a), apply(ev, a)));
    }
}

TEST_CASE("integer combinations of maps", "[algebra]") {
    const AlgebraPtr alg = function_algebra({"x", "y"});
    const LinearMap evx = evaluation_hom(alg, "x");
    const LinearMap evy = evaluation_hom(alg, "y");
    const LinearMap sum = integer_combination({evx, evy}, {1, 1});
    CHECK(sum.matrix(0, 0) == 1);
    CHECK(sum.matrix(0, 1) == 1);
    const LinearMap diff = integer_combination({evx, evy}, {1, -1});
    CHECK(diff.matrix(0, 1) == -1);
    const LinearMap zero = integer_combination({evx}, {0});
    CHECK(zero.matrix(0, 0) == 0);
    CHECK_THROWS_AS(integer_combination({evx}, {1, 2}), Error);
}

TEST_CASE("tensor powers", "[algebra]") {
    const AlgebraPtr two = function_algebra({"x", "y"});
    const AlgebraPtr t1 = tensor_power(two, 1);
    CHECK(t1->structurally_equal(*two));

    const AlgebraPtr t2 = tensor_power(two, 2);
    CHECK(t2->dim() == 4);
    CHECK(is_function_algebra(*t2));  // (Q^X)^(x2) = Q^(X x X)

    const AlgebraPtr three = function_algebra({"x", "y", "w"});
    CHECK(tensor_power(three, 2)->dim() == 9);
    CHECK(check_algebra_axioms(*tensor_power(three, 2)).empty());
}

TEST_CASE("exhaustive axioms on small algebras via basis checks", "[algebra]") {
    // Basis-exhaustive bilinearity, commutativity, associativity, unit.
    for (const AlgebraPtr& alg :
         {function_algebra({"x", "y", "w"}), tensor_power(function_algebra({"x", "y"}), 2)}) {
        REQUIRE(alg->dim() <= 8);
        for (int i = 0; i < alg->dim(); ++i)
            for (int j = 0; j < alg->dim(); ++j) {
                const Element ei = basis_element(alg, i), ej = basis_element(alg, j);
                CHECK(mul(ei, ej) == mul(ej, ei));
                CHECK(mul(unit_element(alg), ej) == ej);
                for (int k = 0; k < alg->dim(); ++k) {
                    const Element ek = basis_element(alg, k);
                    CHECK(mul(mul(ei, ej), ek) == mul(ei, mul(ej, ek)));
                }
            }
    }
}

TEST_CASE("division-free determinant over an algebra matches scalar determinants", "[algebra]") {
    const AlgebraPtr q = ground_field();
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<Element>> m(n, std::vector<Element>(n, zero_element(q)));
        Mat s(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Scalar x = Scalar(v(rng)) / Scalar(1 + (i + j) % 3);
                m[i][j] = Element{q, {x}};
                s(i, j) = x;
            }
        CHECK(element_det_division_free(m).coords[0] == bareiss_det(s));
    }
}
