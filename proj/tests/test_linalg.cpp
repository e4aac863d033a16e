#include "frobkit/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace frobkit;

namespace {

Mat from_rows(int n, int m, std::initializer_list<int> vals) {
    Mat a(n, m);
    auto it = vals.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) a(i, j) = *it++;
    return a;
}

Scalar det_by_cofactors(const Mat& m) {
    const int n = m.rows();
    if (n == 1) return m(0, 0);
    Scalar acc(0);
    for (int j = 0; j < n; ++j) {
        Mat minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const Scalar term = m(0, j) * det_by_cofactors(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

TEST_CASE("bareiss determinant matches cofactor expansion", "[linalg]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> v(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(trial % 5);
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Scalar(v(rng)) / Scalar(1 + (trial % 3));
        CHECK(bareiss_det(m) == det_by_cofactors(m));
    }
}

TEST_CASE("singular matrices have zero determinant and no fraction-free solution", "[linalg]") {
    const Mat m = from_rows(3, 3, {1, 2, 3, 2, 4, 6, 0, 1, 1});
    CHECK(bareiss_det(m) == 0);
    CHECK(!solve_fraction_free(m, {Scalar(1), Scalar(1), Scalar(1)}));
}

TEST_CASE("fraction-free solve inverts well-posed systems", "[linalg]") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> v(-5, 5);
    int solved = 0;
    while (solved < 25) {
        const int n = 1 + solved % 4;
        Mat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = v(rng);
        std::vector<Scalar> b(n);
        for (auto& x : b) x = Scalar(v(rng)) / 3;
        const auto x = solve_fraction_free(a, b);
        if (!x) continue;
        CHECK(a.apply(*x) == b);
        ++solved;
    }
}

TEST_CASE("solve_any handles underdetermined and inconsistent systems", "[linalg]") {
    // x + y = 2 has solutions; pick any.
    const Mat a = from_rows(1, 2, {1, 1});
    const auto x = solve_any(a, {Scalar(2)});
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[1] == 2);

    // Inconsistent: x + y = 1 and x + y = 2.
    const Mat b = from_rows(2, 2, {1, 1, 1, 1});
    CHECK(!solve_any(b, {Scalar(1), Scalar(2)}));
}

TEST_CASE("rank via rref", "[linalg]") {
    CHECK(rank(from_rows(3, 3, {1, 2, 3, 2, 4, 6, 0, 1, 1})) == 2);
    CHECK(rank(Mat::identity(4)) == 4);
    CHECK(rank(Mat(2, 3)) == 0);
}
