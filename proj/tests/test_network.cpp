#include <doctest.h>

#include <algorithm>

#include "dfn/network.hpp"
#include "test_support.hpp"

using namespace dfn;

namespace {
Scenario wide(const Network& net) { return Scenario::unbounded(net); }
} // namespace

TEST_SUITE("network") {

TEST_CASE("minimal valid network passes") {
    Network net = test::path2();
    auto report = validate(net, wide(net));
    CHECK(report.ok);
    CHECK(report.issues.empty());
}

TEST_CASE("disconnected graph is rejected with its components") {
    // 4 nodes, 2 edges forming two components
    Network net(4, {{0, 1, {1.0, 2.0}, 0.0}, {2, 3, {1.0, 2.0}, 0.0}}, 0, 1.0);
    auto report = validate(net, wide(net));
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& issue : report.issues)
        if (issue.code == ValidationIssue::Code::disconnected_graph) {
            found = true;
            CHECK(issue.detail.find("2 components") != std::string::npos);
        }
    CHECK(found);
}

TEST_CASE("inverted potential bounds are rejected and named") {
    Network net = test::path2();
    Scenario s = wide(net);
    s.pi_lo[1] = 5.0;
    s.pi_hi[1] = 3.0;
    auto report = validate(net, s);
    CHECK_FALSE(report.ok);
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].code == ValidationIssue::Code::invalid_bounds);
    CHECK(report.issues[0].detail.find("node 1") != std::string::npos);
}

TEST_CASE("slack potential must sit inside its bounds") {
    Network net = test::path2(1.0, 2.0, 2.0);
    Scenario s = wide(net);
    s.pi_hi[0] = 1.0; // fixed slack value is 2.0
    auto report = validate(net, s);
    CHECK_FALSE(report.ok);
}

TEST_CASE("self loops and bad laws are rejected") {
    Network net(2, {{0, 1, {1.0, 2.0}, 0.0}, {1, 1, {1.0, 2.0}, 0.0}}, 0, 1.0);
    CHECK_FALSE(validate(net, wide(net)).ok);
    Network bad_law(2, {{0, 1, {-1.0, 2.0}, 0.0}}, 0, 1.0);
    CHECK_FALSE(validate(bad_law, wide(bad_law)).ok);
}

TEST_CASE("validation is idempotent and edge-order independent") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Network net = test::random_connected(rng, 8, 5);
        auto r1 = validate(net, wide(net));
        auto r2 = validate(net, wide(net));
        CHECK(r1.ok == r2.ok);
        CHECK(r1.issues.size() == r2.issues.size());

        auto edges = net.edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        Network permuted(net.num_nodes(), edges, net.slack(),
                         net.slack_potential());
        auto r3 = validate(permuted, wide(permuted));
        CHECK(r1.ok == r3.ok);
    }
}

TEST_CASE("slack injection is derived, never stored") {
    Network net = test::triangle();
    Injections q(net);
    q.set(1, 0.75);
    q.set(2, -0.25);
    CHECK(q.stored()[0] == 0.0);
    CHECK(q[0] == doctest::Approx(-0.5));
    CHECK(q.full().sum() == doctest::Approx(0.0));
    CHECK_THROWS_AS(q.set(0, 1.0), Error);
}

TEST_CASE("node balance residual") {
    Network net = test::path2();
    FlowState state;
    state.pi = Eigen::VectorXd::Zero(2);

    SUBCASE("zero flows, zero injections") {
        state.phi = Eigen::VectorXd::Zero(1);
        Injections q(net);
        auto res = node_balance_residual(net, q, state);
        CHECK(res.lpNorm<Eigen::Infinity>() == 0.0);
    }
    SUBCASE("flow equals injection on a path") {
        state.phi = Eigen::VectorXd::Constant(1, 1.0);
        Injections q(net);
        q.set(1, -1.0); // slack injection derives to +1
        auto res = node_balance_residual(net, q, state);
        CHECK(res[0] == doctest::Approx(0.0));
        CHECK(res[1] == doctest::Approx(0.0));
    }
    SUBCASE("imbalance shows up with sign") {
        state.phi = Eigen::VectorXd::Constant(1, 1.0);
        Injections q(net);
        q.set(1, -2.0); // slack derives to +2
        auto res = node_balance_residual(net, q, state);
        CHECK(res[0] == doctest::Approx(1.0));
        CHECK(res[1] == doctest::Approx(-1.0));
    }
}

TEST_CASE("fingerprint distinguishes instances") {
    Network a = test::path2();
    Network b = test::path2(2.0);
    CHECK(instance_fingerprint(a, wide(a)) != instance_fingerprint(b, wide(b)));
    CHECK(instance_fingerprint(a, wide(a)) == instance_fingerprint(a, wide(a)));
}

} // TEST_SUITE
