#include <doctest.h>

#include <random>

#include "dfn/dissipation.hpp"

using dfn::DissipationLaw;

TEST_SUITE("dissipation") {

TEST_CASE("f on the gas law") {
    DissipationLaw unit{1.0, 2.0};
    CHECK(unit.f(0.0) == 0.0);
    CHECK(unit.f(-3.0) == doctest::Approx(-9.0).epsilon(1e-14));
    DissipationLaw heavy{2.0, 2.0};
    CHECK(heavy.f(3.0) == doctest::Approx(18.0).epsilon(1e-14));
}

TEST_CASE("g inverts f") {
    DissipationLaw unit{1.0, 2.0};
    CHECK(unit.g(9.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(unit.g(0.0) == 0.0);
    DissipationLaw heavy{2.0, 2.0};
    CHECK(heavy.g(-18.0) == doctest::Approx(-3.0).epsilon(1e-14));
}

TEST_CASE("antiderivative of f") {
    DissipationLaw unit{1.0, 2.0};
    CHECK(unit.F_anti(3.0) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(unit.F_anti(0.0) == 0.0);
    DissipationLaw d3{3.0, 2.0};
    CHECK(d3.F_anti(1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("antiderivative of g") {
    DissipationLaw unit{1.0, 2.0};
    CHECK(unit.G_anti(4.0) == doctest::Approx(16.0 / 3.0).epsilon(1e-14));
    CHECK(unit.G_anti(0.0) == 0.0);
    DissipationLaw d4{4.0, 2.0};
    CHECK(d4.G_anti(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("g_prime with the origin cap") {
    DissipationLaw unit{1.0, 2.0};
    CHECK(unit.g_prime(4.0, 1e-8) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(unit.g_prime(0.0, 1e-4) == doctest::Approx(50.0).epsilon(1e-12));
    DissipationLaw lin{1.0, 1.0};
    CHECK(lin.g_prime(0.7, 1e-8) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lin.g_prime(-123.0, 1e-8) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("round trips and oddness over random laws") {
    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> ud(0.2, 5.0);
    std::uniform_real_distribution<double> ua(1.0, 3.0);
    std::uniform_real_distribution<double> ux(-50.0, 50.0);
    for (int t = 0; t < 500; ++t) {
        DissipationLaw law{ud(rng), ua(rng)};
        const double x = ux(rng), y = ux(rng);
        CHECK(std::abs(law.f(law.g(y)) - y) <= 1e-12 * (1.0 + std::abs(y)));
        CHECK(std::abs(law.g(law.f(x)) - x) <= 1e-12 * (1.0 + std::abs(x)));
        CHECK(law.f(-x) == doctest::Approx(-law.f(x)).epsilon(1e-13));
        CHECK(law.g(-y) == doctest::Approx(-law.g(y)).epsilon(1e-13));
        // even antiderivatives
        CHECK(law.F_anti(-x) == doctest::Approx(law.F_anti(x)).epsilon(1e-13));
        CHECK(law.G_anti(-y) == doctest::Approx(law.G_anti(y)).epsilon(1e-13));
    }
}

TEST_CASE("antiderivatives differentiate back to f and g") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ud(0.3, 3.0);
    const double alphas[3] = {1.0, 1.5, 2.0};
    for (int t = 0; t < 200; ++t) {
        DissipationLaw law{ud(rng), alphas[t % 3]};
        // log-spaced magnitudes in [1e-3, 1e3], both signs
        const double mag = std::pow(10.0, -3.0 + 6.0 * (t % 17) / 16.0);
        const double x = (t % 2 ? mag : -mag);
        const double h = 1e-6 * std::max(1.0, std::abs(x));
        const double dF = (law.F_anti(x + h) - law.F_anti(x - h)) / (2 * h);
        const double dG = (law.G_anti(x + h) - law.G_anti(x - h)) / (2 * h);
        CHECK(std::abs(dF - law.f(x)) <= 1e-6 * (1.0 + std::abs(law.f(x))));
        CHECK(std::abs(dG - law.g(x)) <= 1e-6 * (1.0 + std::abs(law.g(x))));
    }
}

TEST_CASE("convexity of the antiderivatives (midpoint)") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ud(0.3, 3.0);
    std::uniform_real_distribution<double> ua(1.0, 2.5);
    std::uniform_real_distribution<double> ux(-20.0, 20.0);
    for (int t = 0; t < 300; ++t) {
        DissipationLaw law{ud(rng), ua(rng)};
        const double a = ux(rng), b = ux(rng), m = 0.5 * (a + b);
        CHECK(law.F_anti(m) <=
              0.5 * (law.F_anti(a) + law.F_anti(b)) + 1e-10);
        CHECK(law.G_anti(m) <=
              0.5 * (law.G_anti(a) + law.G_anti(b)) + 1e-10);
    }
}

TEST_CASE("G is the conjugate of F (grid search)") {
    const DissipationLaw laws[] = {{1.0, 2.0}, {2.5, 1.5}, {0.7, 1.0}};
    for (const auto& law : laws) {
        for (double y : {-6.0, -1.2, 0.0, 0.4, 3.0, 9.0}) {
            double best = -1e300;
            // sup_x (x*y - F(x)) over a dense grid; the optimizer is g(y),
            // so the grid brackets it comfortably
            const double span = 2.0 + 2.0 * std::abs(law.g(y));
            const int steps = 40000;
            for (int k = 0; k <= steps; ++k) {
                const double x = -span + 2.0 * span * k / steps;
                best = std::max(best, x * y - law.F_anti(x));
            }
            const double grid = 2.0 * span / steps;
            CHECK(std::abs(best - law.G_anti(y)) <=
                  10.0 * grid * (1.0 + std::abs(y)));
        }
    }
}

} // TEST_SUITE
