#include "dfn/nf_solver.hpp"

#include <Eigen/SparseCholesky>

#include "dfn/kernels.hpp"

namespace dfn {

namespace {

// Dense solves are faster than sparse below this node count.
constexpr int kDenseLimit = 50;

// Objective minimized by the Newton iteration: E(pi,b) - sum_free pi_i q_i.
// Its negative is the dual objective up to the constant slack term.
double reduced_dual(const Network& net, const Eigen::VectorXd& pi,
                    const Eigen::VectorXd& b, const Injections& q) {
    double lin = 0.0;
    for (NodeId i = 0; i < net.num_nodes(); ++i)
        if (i != net.slack()) lin += pi[i] * q[i];
    return kernels::energy_sum(net, pi, b) - lin;
}

Eigen::MatrixXd assemble_dense(const Network& net, const FreeNodeMap& map,
                               const Eigen::VectorXd& w) {
    const int nf = map.count();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(nf, nf);
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
        const Edge& ed = net.edge(e);
        const int fi = map.free_of_node[ed.from];
        const int fj = map.free_of_node[ed.to];
        if (fi >= 0) h(fi, fi) += w[e];
        if (fj >= 0) h(fj, fj) += w[e];
        if (fi >= 0 && fj >= 0) {
            h(fi, fj) -= w[e];
            h(fj, fi) -= w[e];
        }
    }
    return h;
}

Eigen::SparseMatrix<double> assemble_sparse(const Network& net,
                                            const FreeNodeMap& map,
                                            const Eigen::VectorXd& w) {
    const int nf = map.count();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(net.num_edges() * 4);
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
        const Edge& ed = net.edge(e);
        const int fi = map.free_of_node[ed.from];
        const int fj = map.free_of_node[ed.to];
        if (fi >= 0) trips.emplace_back(fi, fi, w[e]);
        if (fj >= 0) trips.emplace_back(fj, fj, w[e]);
        if (fi >= 0 && fj >= 0) {
            trips.emplace_back(fi, fj, -w[e]);
            trips.emplace_back(fj, fi, -w[e]);
        }
    }
    Eigen::SparseMatrix<double> h(nf, nf);
    h.setFromTriplets(trips.begin(), trips.end());
    return h;
}

} // namespace

double dual_objective(const Network& net, const Injections& injections,
                      const Eigen::VectorXd& b, const Eigen::VectorXd& pi) {
    double lin = 0.0;
    for (NodeId i = 0; i < net.num_nodes(); ++i) lin += pi[i] * injections[i];
    return lin - kernels::energy_sum(net, pi, b);
}

NfSolution solve_nf(const Network& net, const Injections& injections,
                    const Eigen::VectorXd& b, const NewtonSettings& settings,
                    const Eigen::VectorXd* pi_hint) {
    const int n = net.num_nodes();
    const FreeNodeMap map(net);
    const int nf = map.count();

    Eigen::VectorXd pi =
        pi_hint ? *pi_hint
                : Eigen::VectorXd::Constant(n, net.slack_potential());
    pi[net.slack()] = net.slack_potential();

    Eigen::VectorXd phi(net.num_edges()), outflow(n), w(net.num_edges());
    Eigen::VectorXd grad(nf), step(nf);

    NfSolution sol;
    double obj = reduced_dual(net, pi, b, injections);
    sol.objective_trace.push_back(obj);

    int iter = 0;
    bool converged = nf == 0;
    while (!converged && iter < settings.max_iter) {
        kernels::flows_from_potentials(net, pi, b, phi);
        kernels::net_outflow(net, phi, outflow);
        for (int k = 0; k < nf; ++k) {
            const NodeId i = map.node_of_free[k];
            grad[k] = outflow[i] - injections[i];
        }
        if (grad.lpNorm<Eigen::Infinity>() <= settings.grad_tol) {
            converged = true;
            break;
        }
        ++iter;

        kernels::laplacian_weights(net, pi, b, settings.smooth_eps, w);
        if (nf < kDenseLimit) {
            Eigen::MatrixXd h = assemble_dense(net, map, w);
            Eigen::LLT<Eigen::MatrixXd> llt(h);
            if (llt.info() != Eigen::Success) {
                h.diagonal().array() += 1e-12 * (1.0 + h.diagonal().maxCoeff());
                llt.compute(h);
            }
            step = llt.solve(-grad);
        } else {
            Eigen::SparseMatrix<double> h = assemble_sparse(net, map, w);
            Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(h);
            if (llt.info() != Eigen::Success) {
                Eigen::SparseMatrix<double> ridge(nf, nf);
                ridge.setIdentity();
                h += ridge * 1e-12;
                llt.compute(h);
            }
            step = llt.solve(-grad);
        }

        const double slope = grad.dot(step);
        Eigen::VectorXd pi_try = pi;
        auto at = [&](double t) {
            for (int k = 0; k < nf; ++k)
                pi_try[map.node_of_free[k]] =
                    pi[map.node_of_free[k]] + t * step[k];
        };
        // directional derivative of the reduced objective at step length t
        auto dir_deriv = [&](double t) {
            at(t);
            kernels::flows_from_potentials(net, pi_try, b, phi);
            kernels::net_outflow(net, phi, outflow);
            double s = 0.0;
            for (int k = 0; k < nf; ++k) {
                const NodeId i = map.node_of_free[k];
                s += (outflow[i] - injections[i]) * step[k];
            }
            return s;
        };

        double t = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 80 && !accepted; ++ls) {
            at(t);
            const double obj_try = reduced_dual(net, pi_try, b, injections);
            if (obj_try <= obj + settings.armijo_c * t * slope)
                accepted = true;
            else
                t *= settings.armijo_shrink;
        }
        if (!accepted) break; // numerically stuck; report best iterate
        // The quadratic model underestimates curvature when the step
        // crosses zero-drop regions, so an accepted step can overshoot the
        // 1-D minimum and set up an oscillation. The restriction to the
        // ray is convex: when the arrival slope is positive, bisect to its
        // root.
        if (dir_deriv(t) > 0.0) {
            double lo = 0.0, hi = t;
            for (int k = 0; k < 60 && hi - lo > 1e-16 * (1.0 + hi); ++k) {
                const double mid = 0.5 * (lo + hi);
                (dir_deriv(mid) > 0.0 ? hi : lo) = mid;
            }
            t = 0.5 * (lo + hi);
            at(t);
        }
        pi = pi_try;
        obj = reduced_dual(net, pi, b, injections);
        sol.objective_trace.push_back(obj);
    }

    kernels::flows_from_potentials(net, pi, b, phi);
    sol.state.pi = pi;
    sol.state.phi = phi;
    sol.iterations = iter;
    sol.status = converged ? SolveStatus::ok : SolveStatus::max_iterations;
    sol.kkt_residual = kkt_check(net, injections, b, sol.state);
    sol.dual_value = dual_objective(net, injections, b, pi);
    sol.primal_value = kernels::primal_energy_sum(net, phi, b);
    return sol;
}

double primal_objective(const Network& net, const Injections& injections,
                        const Eigen::VectorXd& b, const Eigen::VectorXd& phi,
                        double feas_tol) {
    FlowState state;
    state.phi = phi;
    state.pi = Eigen::VectorXd::Zero(net.num_nodes());
    const Eigen::VectorXd res = node_balance_residual(net, injections, state);
    const double worst = res.lpNorm<Eigen::Infinity>();
    if (worst > feas_tol)
        throw InfeasibleFlow("flow conservation violated by " +
                             std::to_string(worst));
    return kernels::primal_energy_sum(net, phi, b);
}

double kkt_check(const Network& net, const Injections& injections,
                 const Eigen::VectorXd& b, const FlowState& state) {
    const Eigen::VectorXd res = node_balance_residual(net, injections, state);
    double worst = res.lpNorm<Eigen::Infinity>();
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
        const Edge& ed = net.edge(e);
        const double drop = state.pi[ed.from] - state.pi[ed.to] + b[e];
        worst = std::max(worst, std::abs(ed.law.f(state.phi[e]) - drop));
    }
    return worst;
}

} // namespace dfn
