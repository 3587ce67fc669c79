#include "dfn/energy_oracle.hpp"

#include "dfn/kernels.hpp"

namespace dfn {

double E(const Network& net, const Eigen::VectorXd& pi,
         const Eigen::VectorXd& b) {
    return kernels::energy_sum(net, pi, b);
}

ConjugateEval E_star(const Network& net, const Injections& x,
                     const Eigen::VectorXd& b, const NewtonSettings& settings,
                     const Eigen::VectorXd* pi_hint) {
    NfSolution sol = solve_nf(net, x, b, settings, pi_hint);
    ConjugateEval ev;
    ev.value = sol.dual_value;
    ev.pi_star = std::move(sol.state.pi);
    ev.phi_star = std::move(sol.state.phi);
    ev.inner_iterations = sol.iterations;
    ev.status = sol.status;
    return ev;
}

EStarGradient grad_E_star(const Network& net, const Injections& x,
                          const Eigen::VectorXd& b,
                          const NewtonSettings& settings,
                          const Eigen::VectorXd* pi_hint) {
    EStarGradient g;
    g.eval = E_star(net, x, b, settings, pi_hint);
    g.d_x = g.eval.pi_star;
    g.d_b = -g.eval.phi_star;
    return g;
}

Eigen::SparseMatrix<double> hess_E(const Network& net,
                                   const Eigen::VectorXd& pi,
                                   const Eigen::VectorXd& b,
                                   double smooth_eps) {
    const FreeNodeMap map(net);
    Eigen::VectorXd w;
    kernels::laplacian_weights(net, pi, b, smooth_eps, w);
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
    Eigen::SparseMatrix<double> h(map.count(), map.count());
    h.setFromTriplets(trips.begin(), trips.end());
    return h;
}

Eigen::MatrixXd hess_E_star(const Network& net, const Injections& x,
                            const Eigen::VectorXd& b,
                            const NewtonSettings& settings) {
    const ConjugateEval ev = E_star(net, x, b, settings);
    const Eigen::MatrixXd h =
        Eigen::MatrixXd(hess_E(net, ev.pi_star, b, settings.smooth_eps));
    return h.llt().solve(
        Eigen::MatrixXd::Identity(h.rows(), h.cols()));
}

double fenchel_gap(const Network& net, const Eigen::VectorXd& pi,
                   const Injections& x, const Eigen::VectorXd& b,
                   const NewtonSettings& settings) {
    const ConjugateEval ev = E_star(net, x, b, settings);
    double inner = 0.0;
    for (NodeId i = 0; i < net.num_nodes(); ++i) inner += pi[i] * x[i];
    return E(net, pi, b) + ev.value - inner;
}

bool monotonicity_check(const Network& net, const Eigen::VectorXd& b,
                        const Injections& q1, const Injections& q2,
                        const NewtonSettings& settings, double tol) {
    const NfSolution s1 = solve_nf(net, q1, b, settings);
    const NfSolution s2 = solve_nf(net, q2, b, settings);
    for (NodeId i = 0; i < net.num_nodes(); ++i) {
        if (i == net.slack()) continue;
        if (s1.state.pi[i] > s2.state.pi[i] + tol) return false;
    }
    return true;
}

} // namespace dfn
