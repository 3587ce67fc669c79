#include <doctest.h>

#include "dfn/kernels.hpp"
#include "test_support.hpp"

using namespace dfn;

// The OpenMP kernels must agree with the serial references. Reduction
// order differs between the two, so sums are compared to a relative
// tolerance; elementwise kernels must match exactly.

TEST_SUITE("kernels") {

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(41);
    for (int n : {6, 60, 600}) {
        Network net = test::random_connected(rng, n, n / 2);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        Eigen::VectorXd pi(net.num_nodes());
        for (int i = 0; i < net.num_nodes(); ++i) pi[i] = u(rng);
        Eigen::VectorXd b = test::random_b(rng, net);

        const double e_s = kernels::serial::energy_sum(net, pi, b);
        const double e_p = kernels::par::energy_sum(net, pi, b);
        CHECK(std::abs(e_s - e_p) <= 1e-12 * (1.0 + std::abs(e_s)));

        Eigen::VectorXd phi_s, phi_p;
        kernels::serial::flows_from_potentials(net, pi, b, phi_s);
        kernels::par::flows_from_potentials(net, pi, b, phi_p);
        CHECK((phi_s - phi_p).lpNorm<Eigen::Infinity>() == 0.0);

        Eigen::VectorXd w_s, w_p;
        kernels::serial::laplacian_weights(net, pi, b, 1e-8, w_s);
        kernels::par::laplacian_weights(net, pi, b, 1e-8, w_p);
        CHECK((w_s - w_p).lpNorm<Eigen::Infinity>() == 0.0);

        Eigen::VectorXd out_s, out_p;
        kernels::serial::net_outflow(net, phi_s, out_s);
        kernels::par::net_outflow(net, phi_s, out_p);
        CHECK((out_s - out_p).lpNorm<Eigen::Infinity>() == 0.0);

        const double p_s = kernels::serial::primal_energy_sum(net, phi_s, b);
        const double p_p = kernels::par::primal_energy_sum(net, phi_s, b);
        CHECK(std::abs(p_s - p_p) <= 1e-12 * (1.0 + std::abs(p_s)));
    }
}

TEST_CASE("net_outflow respects edge orientation") {
    Network net = test::triangle();
    Eigen::VectorXd phi(3);
    phi << 1.0, 2.0, 0.5; // edges (0,1), (0,2), (1,2)
    Eigen::VectorXd out;
    kernels::net_outflow(net, phi, out);
    CHECK(out[0] == doctest::Approx(3.0));
    CHECK(out[1] == doctest::Approx(-0.5));
    CHECK(out[2] == doctest::Approx(-2.5));
    CHECK(out.sum() == doctest::Approx(0.0));
}

} // TEST_SUITE
