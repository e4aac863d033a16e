#include "frobkit/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace frobkit;

namespace {

const AlgebraPtr& Q = ground_field();

TruncatedSeries scalar_series(std::initializer_list<Scalar> coeffs) {
    TruncatedSeries s = make_series(Q, static_cast<int>(coeffs.size()) - 1);
    int k = 0;
    for (const Scalar& c : coeffs) s.coeffs[k++] = Element{Q, {c}};
    return s;
}

TruncatedSeries random_series(std::mt19937_64& rng, int order, bool zero_const, bool unit_const) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    TruncatedSeries s = make_series(Q, order);
    for (int k = 0; k <= order; ++k) s.coeffs[k] = Element{Q, {Scalar(num(rng)) / Scalar(den(rng))}};
    if (zero_const) s.coeffs[0] = zero_element(Q);
    if (unit_const) s.coeffs[0] = unit_element(Q);
    return s;
}

// Direct defining sums, used as oracles for the recurrence implementations.
TruncatedSeries exp_by_sum(const TruncatedSeries& s) {
    TruncatedSeries acc = series_one(s.algebra, s.order);
    TruncatedSeries pw = series_one(s.algebra, s.order);
    for (int m = 1; m <= s.order; ++m) {
        pw = series_mul(pw, s);
        acc = series_add(acc, series_scale(Scalar(BigInt(1), factorial(m)), pw));
    }
    return acc;
}

TruncatedSeries log_by_sum(const TruncatedSeries& s) {
    TruncatedSeries shifted = s;
    shifted.coeffs[0] = shifted.coeffs[0] - unit_element(s.algebra);
    TruncatedSeries acc = make_series(s.algebra, s.order);
    TruncatedSeries pw = series_one(s.algebra, s.order);
    for (int k = 1; k <= s.order; ++k) {
        pw = series_mul(pw, shifted);
        const Scalar c = Scalar(1, k);
        acc = series_add(acc, series_scale((k % 2) ? c : -c, pw));
    }
    return acc;
}

} // namespace

TEST_CASE("series product and addition", "[series]") {
    const TruncatedSeries one_plus_z = scalar_series({Scalar(1), Scalar(1)});
    CHECK(series_mul(one_plus_z, one_plus_z).order == 1);  // truncation contract

    TruncatedSeries p = make_series(Q, 2);
    p.coeffs[0] = unit_element(Q);
    p.coeffs[1] = unit_element(Q);
    CHECK(series_mul(p, p) == scalar_series({Scalar(1), Scalar(2), Scalar(1)}));
    CHECK(series_mul(p, series_one(Q, 2)) == p);

    std::mt19937_64 rng(1);
    const TruncatedSeries a = random_series(rng, 3, false, false);
    const TruncatedSeries b = random_series(rng, 5, false, false);
    CHECK(series_mul(a, b).order == 3);
    CHECK(series_add(a, b).order == 3);
}

TEST_CASE("series exponential", "[series]") {
    CHECK(series_exp(make_series(Q, 4)) == series_one(Q, 4));

    const TruncatedSeries z = scalar_series({Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
    CHECK(series_exp(z) ==
          scalar_series({Scalar(1), Scalar(1), Scalar(1) / 2, Scalar(1) / 6}));

    TruncatedSeries one_plus_z = make_series(Q, 5);
    one_plus_z.coeffs[0] = unit_element(Q);
    one_plus_z.coeffs[1] = unit_element(Q);
    CHECK(series_exp(series_log(one_plus_z)) == one_plus_z);

    CHECK_THROWS_WITH(series_exp(series_one(Q, 3)), "exp requires zero constant term");
}

TEST_CASE("series logarithm", "[series]") {
    CHECK(series_log(series_one(Q, 4)) == make_series(Q, 4));

    TruncatedSeries one_plus_z = make_series(Q, 3);
    one_plus_z.coeffs[0] = unit_element(Q);
    one_plus_z.coeffs[1] = unit_element(Q);
    CHECK(series_log(one_plus_z) ==
          scalar_series({Scalar(0), Scalar(1), Scalar(-1) / 2, Scalar(1) / 3}));

    const TruncatedSeries s = scalar_series({Scalar(0), Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
    CHECK(series_log(series_exp(s)) == s);

    CHECK_THROWS_AS(series_log(make_series(Q, 3)), Error);
}

TEST_CASE("series inverse", "[series]") {
    TruncatedSeries one_plus_z = make_series(Q, 3);
    one_plus_z.coeffs[0] = unit_element(Q);
    one_plus_z.coeffs[1] = unit_element(Q);
    CHECK(series_invert(one_plus_z) ==
          scalar_series({Scalar(1), Scalar(-1), Scalar(1), Scalar(-1)}));
    CHECK(series_invert(series_one(Q, 3)) == series_one(Q, 3));

    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        const TruncatedSeries s = random_series(rng, 6, false, true);
        CHECK(series_mul(s, series_invert(s)) == series_one(Q, 6));
    }
}

TEST_CASE("recurrence implementations agree with the defining sums", "[series]") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 25; ++i) {
        const TruncatedSeries s = random_series(rng, 7, true, false);
        CHECK(series_exp(s) == exp_by_sum(s));
        const TruncatedSeries t = random_series(rng, 7, false, true);
        CHECK(series_log(t) == log_by_sum(t));
    }
}

TEST_CASE("exp turns sums into products, log inverts", "[series]") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 20; ++i) {
        const TruncatedSeries s = random_series(rng, 8, true, false);
        const TruncatedSeries t = random_series(rng, 8, true, false);
        CHECK(series_exp(series_add(s, t)) == series_mul(series_exp(s), series_exp(t)));
        const TruncatedSeries u = random_series(rng, 8, false, true);
        const TruncatedSeries v = random_series(rng, 8, false, true);
        CHECK(series_log(series_mul(u, v)) == series_add(series_log(u), series_log(v)));
        CHECK(series_log(series_exp(s)) == s);
        CHECK(series_exp(series_log(u)) == u);
    }
}

TEST_CASE("coefficient maps", "[series]") {
    const AlgebraPtr alg = function_algebra({"x", "y"});
    TruncatedSeries s = make_series(alg, 3);
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int k = 0; k <= 3; ++k)
        s.coeffs[k] = Element{alg, {Scalar(v(rng)), Scalar(v(rng))}};

    CHECK(map_coefficients(identity_map(alg), s) == s);

    const LinearMap zero{alg, ground_field(), Mat(1, 2)};
    const TruncatedSeries mapped_zero = map_coefficients(zero, s);
    for (int k = 0; k <= 3; ++k) CHECK(mapped_zero.coeffs[k].is_zero());

    const LinearMap evx = evaluation_hom(alg, "x");
    const TruncatedSeries mapped = map_coefficients(evx, s);
    for (int k = 0; k <= 3; ++k) CHECK(mapped.coeffs[k].coords[0] == s.coeffs[k].coords[0]);

    CHECK_THROWS_WITH(map_coefficients(evaluation_hom(function_algebra({"a", "b", "c"}), "a"), s),
                      "algebra mismatch");
}

TEST_CASE("series rendering", "[series]") {
    CHECK(series_to_string(scalar_series({Scalar(1), Scalar(5), Scalar(6)})) == "1 + 5 z + 6 z^2");
    CHECK(series_to_string(scalar_series({Scalar(1), Scalar(0), Scalar(-1) / 2})) == "1 + -1/2 z^2");
    CHECK(series_to_string(make_series(Q, 2)) == "0");
}
