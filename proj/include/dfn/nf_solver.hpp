#ifndef DFN_NF_SOLVER_HPP
#define DFN_NF_SOLVER_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "dfn/network.hpp"

namespace dfn {

struct NewtonSettings {
    double grad_tol = 1e-10;
    int max_iter = 200;
    double armijo_c = 1e-4;
    double armijo_shrink = 0.5;
    double smooth_eps = 1e-8;
};

enum class SolveStatus { ok, max_iterations };

struct NfSolution {
    FlowState state;
    double kkt_residual = 0.0;
    double dual_value = 0.0;   // value of the concave dual at pi
    double primal_value = 0.0; // primal energy at the recovered flows
    int iterations = 0;
    SolveStatus status = SolveStatus::ok;
    // Minimized reduced objective after each accepted step (diagnostics).
    std::vector<double> objective_trace;
};

// Mapping between node ids and the dense indexing of the non-slack
// ("free") potentials the Newton systems are posed in.
struct FreeNodeMap {
    std::vector<int> free_of_node; // -1 at the slack
    std::vector<NodeId> node_of_free;

    explicit FreeNodeMap(const Network& net) {
        free_of_node.assign(net.num_nodes(), -1);
        node_of_free.reserve(net.num_nodes() - 1);
        for (NodeId i = 0; i < net.num_nodes(); ++i) {
            if (i == net.slack()) continue;
            free_of_node[i] = static_cast<int>(node_of_free.size());
            node_of_free.push_back(i);
        }
    }
    int count() const { return static_cast<int>(node_of_free.size()); }
};

// Solves the network flow equations by Newton minimization of the dual
// energy over the free potentials, then recovers flows as phi = g(drop).
// The solution is unique; any starting point converges. pi_hint, when
// given, warm-starts the iteration (size N, slack entry overwritten).
NfSolution solve_nf(const Network& net, const Injections& injections,
                    const Eigen::VectorXd& b, const NewtonSettings& settings = {},
                    const Eigen::VectorXd* pi_hint = nullptr);

// Primal energy sum F(phi) - b.phi. Throws InfeasibleFlow when phi violates
// conservation by more than feas_tol.
double primal_objective(const Network& net, const Injections& injections,
                        const Eigen::VectorXd& b, const Eigen::VectorXd& phi,
                        double feas_tol = 1e-6);

// max over (a) node balance residuals (slack included, against the derived
// slack injection) and (b) per-edge |f(phi) - (pi_i - pi_j + b)|. Uses the
// unsmoothed f, so the result is an honest optimality certificate.
double kkt_check(const Network& net, const Injections& injections,
                 const Eigen::VectorXd& b, const FlowState& state);

// Dual objective sum_i pi_i q_i - E(pi, b) with the derived slack injection
// included in the inner product.
double dual_objective(const Network& net, const Injections& injections,
                      const Eigen::VectorXd& b, const Eigen::VectorXd& pi);

} // namespace dfn

#endif
