#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spr3/errors.hpp"
#include "spr3/linalg.hpp"

using namespace spr3;

TEST_CASE("solve recovers known solutions") {
    Mat3 a;
    a(0, 0) = 4.0; a(0, 1) = 1.0; a(0, 2) = 0.0;
    a(1, 0) = 1.0; a(1, 1) = 3.0; a(1, 2) = 1.0;
    a(2, 0) = 0.0; a(2, 1) = 1.0; a(2, 2) = 2.0;
    const Vec3 x{1.0, -2.0, 3.0};
    const Vec3 sol = solve(a, a * x);
    CHECK(norm(sol - x) < 1e-14);
}

TEST_CASE("solve residual on random systems") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        Mat6 a;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) a(i, j) = d(rng);
        for (int i = 0; i < 6; ++i) a(i, i) += 4.0;
        Vec6 b;
        for (int i = 0; i < 6; ++i) b[i] = d(rng);
        const Vec6 x = solve(a, b);
        CHECK(norm(a * x - b) < 1e-12 * norm(b));
    }
}

TEST_CASE("singular system throws") {
    Mat3 a;
    a(0, 0) = 1.0; a(0, 1) = 2.0; a(0, 2) = 3.0;
    a(1, 0) = 2.0; a(1, 1) = 4.0; a(1, 2) = 6.0;
    a(2, 0) = 1.0; a(2, 1) = 0.0; a(2, 2) = 1.0;
    CHECK_THROWS_AS(solve(a, Vec3{1.0, 1.0, 1.0}), numerical_error);
}

TEST_CASE("jacobi eigenvalues of a known symmetric matrix") {
    // eigenvalues of [[2,1,0],[1,2,1],[0,1,2]] are 2 and 2 -+ sqrt(2)
    Mat3 a;
    a(0, 0) = 2.0; a(0, 1) = 1.0;
    a(1, 0) = 1.0; a(1, 1) = 2.0; a(1, 2) = 1.0;
    a(2, 1) = 1.0; a(2, 2) = 2.0;
    Mat3 v;
    const Vec3 eig = symmetric_eigenvalues(a, &v);
    CHECK(eig[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
    CHECK(eig[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(eig[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
    // columns of v are eigenvectors
    for (int k = 0; k < 3; ++k) {
        Vec3 col{v(0, k), v(1, k), v(2, k)};
        CHECK(norm(a * col - eig[k] * col) < 1e-12);
    }
}

TEST_CASE("jacobi reconstructs random symmetric spectra") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        Mat6 a;
        for (int i = 0; i < 6; ++i)
            for (int j = i; j < 6; ++j) a(i, j) = a(j, i) = d(rng);
        const Vec6 eig = symmetric_eigenvalues(a);
        double trace = 0.0, sum = 0.0;
        for (int i = 0; i < 6; ++i) {
            trace += a(i, i);
            sum += eig[i];
        }
        CHECK(sum == doctest::Approx(trace).epsilon(1e-12));
        for (int i = 1; i < 6; ++i) CHECK(eig[i] >= eig[i - 1]);
    }
}

TEST_CASE("singular values of a wide matrix") {
    Mat<2, 3> a;
    a(0, 0) = 3.0;
    a(1, 1) = 4.0;
    const Vec2 sv = singular_values(a);
    CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(sv[1] == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("cross products") {
    CHECK(norm(cross(Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}) - Vec3{0.0, 0.0, 1.0}) == 0.0);
    CHECK(cross2(Vec2{1.0, 0.0}, Vec2{0.0, 1.0}) == 1.0);
    const Vec3 a{0.3, -1.2, 0.7}, b{2.0, 0.4, -0.5};
    CHECK(std::fabs(dot(cross(a, b), a)) < 1e-15);
    CHECK(std::fabs(dot(cross(a, b), b)) < 1e-15);
}
