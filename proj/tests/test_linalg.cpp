#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfalg/linalg.hpp"

using namespace hopfalg;

namespace {

Mat sample_matrix(size_t n, int seed) {
    // deterministic small-integer + xi entries
    Mat m(n, n);
    long long state = seed;
    auto next = [&]() {
        state = (state * 6364136223846793005LL + 1442695040888963407LL);
        return int((state >> 33) % 5) - 2;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m(i, j) = Scalar(Rational(next()), Rational(next()));
    return m;
}

} // namespace

TEST_CASE("rank, kernel and solve are mutually consistent") {
    for (int seed : {1, 2, 3, 4}) {
        Mat m = sample_matrix(6, seed);
        size_t r = rank(m);
        auto ker = kernel_basis(m);
        CHECK(r + ker.size() == 6);
        for (const auto& v : ker) {
            Vec img = m.apply(v);
            for (const auto& c : img) CHECK(c.is_zero());
        }
    }
}

TEST_CASE("inverse round-trips") {
    for (int seed : {5, 6, 7}) {
        Mat m = sample_matrix(5, seed);
        auto inv = inverse(m);
        if (!inv) {
            CHECK(rank(m) < 5);
            continue;
        }
        CHECK(*inv * m == Mat::identity(5));
        CHECK(m * *inv == Mat::identity(5));
        CHECK(!det(m).is_zero());
    }
}

TEST_CASE("determinant multiplicative on samples") {
    Mat a = sample_matrix(4, 11), b = sample_matrix(4, 12);
    CHECK(det(a * b) == det(a) * det(b));
}

TEST_CASE("singular system reports no solution or kernel witness") {
    Mat m(2, 2);
    m(0, 0) = Scalar(1);
    m(0, 1) = Scalar(2);
    m(1, 0) = Scalar(2);
    m(1, 1) = Scalar(4);
    CHECK(rank(m) == 1);
    CHECK(!inverse(m).has_value());
    Vec bad = {Scalar(1), Scalar(0)};
    CHECK(!solve(m, bad).has_value());
    Vec good = {Scalar(1), Scalar(2)};
    auto x = solve(m, good);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == good);
}

TEST_CASE("span membership and growth") {
    Span sp(3);
    CHECK(sp.add({Scalar(1), Scalar(0), Scalar(1)}));
    CHECK(sp.add({Scalar(0), Scalar(1), Scalar(1)}));
    CHECK(!sp.add({Scalar(1), Scalar(1), Scalar(2)}));
    CHECK(sp.dim() == 2);
    CHECK(sp.contains({Scalar(2), Scalar(-1), Scalar(1)}));
    CHECK(!sp.contains({Scalar(0), Scalar(0), Scalar(1)}));
}

TEST_CASE("kronecker respects products") {
    Mat a = sample_matrix(2, 21), b = sample_matrix(2, 22);
    Mat c = sample_matrix(2, 23), d = sample_matrix(2, 24);
    CHECK(Mat::kronecker(a, b) * Mat::kronecker(c, d) == Mat::kronecker(a * c, b * d));
}
