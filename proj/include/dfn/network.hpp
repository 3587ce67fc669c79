#ifndef DFN_NETWORK_HPP
#define DFN_NETWORK_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "dfn/dissipation.hpp"
#include "dfn/errors.hpp"

namespace dfn {

using NodeId = int;
using EdgeId = int;

struct Edge {
    NodeId from = -1;
    NodeId to = -1;
    DissipationLaw law;
    double b_fixed = 0.0; // potential boost when b is not optimized
};

// Connected graph with per-edge dissipation laws and one slack node whose
// potential is pinned. Node and edge ids are dense (0..N-1 / 0..M-1).
// Positive flow on edge (i,j) means i -> j; the nominal direction is the
// order the endpoints were given in.
//
// Treated as immutable once validate() has passed; solvers share it freely
// across threads.
class Network {
public:
    Network() = default;
    Network(int node_count, std::vector<Edge> edges, NodeId slack,
            double slack_potential, std::vector<std::string> names = {})
        : node_count_(node_count),
          edges_(std::move(edges)),
          slack_(slack),
          slack_potential_(slack_potential),
          names_(std::move(names)) {
        build_adjacency();
    }

    int num_nodes() const { return node_count_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    NodeId slack() const { return slack_; }
    double slack_potential() const { return slack_potential_; }

    // Node names are a reporting side table; solvers never touch them.
    const std::string& name(NodeId i) const;
    bool has_names() const { return !names_.empty(); }

    // Incident edges of a node as (edge id, sign); sign +1 when the node is
    // the edge tail (flow counts out of it), -1 at the head.
    struct Incidence {
        EdgeId edge;
        int sign;
    };
    const std::vector<Incidence>& incident(NodeId i) const {
        return adjacency_[i];
    }

    // Fixed b vector (all edges at their b_fixed value).
    Eigen::VectorXd fixed_b() const;

private:
    void build_adjacency();

    int node_count_ = 0;
    std::vector<Edge> edges_;
    NodeId slack_ = 0;
    double slack_potential_ = 0.0;
    std::vector<std::string> names_;
    std::vector<std::vector<Incidence>> adjacency_;
};

// Injections over non-slack nodes. The slack injection is never stored; it
// is derived from total flow balance as -sum of the others.
class Injections {
public:
    Injections() = default;
    explicit Injections(const Network& net)
        : q_(Eigen::VectorXd::Zero(net.num_nodes())), slack_(net.slack()) {}

    // q must have one entry per node; the slack entry is ignored and reset
    // to zero.
    Injections(const Network& net, Eigen::VectorXd q)
        : q_(std::move(q)), slack_(net.slack()) {
        q_[slack_] = 0.0;
    }

    int size() const { return static_cast<int>(q_.size()); }
    NodeId slack_node() const { return slack_; }

    void set(NodeId i, double value) {
        if (i == slack_)
            throw Error("Injections: slack injection is derived, not set");
        q_[i] = value;
    }
    double operator[](NodeId i) const {
        return i == slack_ ? slack_injection() : q_[i];
    }
    double slack_injection() const { return -q_.sum(); }

    // Stored vector: slack entry is always zero.
    const Eigen::VectorXd& stored() const { return q_; }
    // Full vector with the derived slack entry filled in.
    Eigen::VectorXd full() const {
        Eigen::VectorXd v = q_;
        v[slack_] = slack_injection();
        return v;
    }

private:
    Eigen::VectorXd q_;
    NodeId slack_ = 0;
};

// Box data for a throughput problem. All vectors are sized per node or per
// edge; +/-infinity marks an absent bound. The slack entry of x_lo/x_hi
// bounds the derived slack injection.
struct Scenario {
    Eigen::VectorXd pi_lo, pi_hi; // node potential bounds
    Eigen::VectorXd x_lo, x_hi;   // injection bounds
    Eigen::VectorXd b_lo, b_hi;   // edge boost bounds
    Eigen::VectorXd cost;         // per-node cost applied to injections
    std::vector<std::uint8_t> b_variable; // per edge: boost is optimizable

    static Scenario unbounded(const Network& net);

    bool edge_b_variable(EdgeId e) const {
        return !b_variable.empty() && b_variable[e] != 0;
    }
};

// Paired edge flows and node potentials.
struct FlowState {
    Eigen::VectorXd phi; // per edge
    Eigen::VectorXd pi;  // per node
};

struct ValidationIssue {
    enum class Code {
        disconnected_graph,
        invalid_bounds,
        no_slack,
        multiple_slack,
        bad_edge,
        bad_law,
    };
    Code code;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;

    void add(ValidationIssue::Code code, std::string detail) {
        ok = false;
        issues.push_back({code, std::move(detail)});
    }
    std::string summary() const;
};

// Checks connectivity, slack sanity, edge endpoints, law parameters and
// scenario bound consistency. Idempotent and order-independent.
ValidationReport validate(const Network& net, const Scenario& scenario);

// q_i - sum of signed flows out of node i, for every node. The slack entry
// uses the derived slack injection.
Eigen::VectorXd node_balance_residual(const Network& net,
                                      const Injections& injections,
                                      const FlowState& state);

// FNV-1a over the instance data; used to pair upper/lower bounds computed
// on the same problem.
std::uint64_t instance_fingerprint(const Network& net, const Scenario& scenario);

} // namespace dfn

#endif
