#include "dfn/kernels.hpp"

namespace dfn::kernels {

namespace serial {

double energy_sum(const Network& net, const Eigen::VectorXd& pi,
                  const Eigen::VectorXd& b) {
    double acc = 0.0;
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
        const Edge& ed = net.edge(e);
        acc += ed.law.G_anti(pi[ed.from] - pi[ed.to] + b[e]);
    }
    return acc;
}

void flows_from_potentials(const Network& net, const Eigen::VectorXd& pi,
                           const Eigen::VectorXd& b, Eigen::VectorXd& phi) {
    phi.resize(net.num_edges());
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
        const Edge& ed = net.edge(e);
        phi[e] = ed.law.g(pi[ed.from] - pi[ed.to] + b[e]);
    }
}

void laplacian_weights(const Network& net, const Eigen::VectorXd& pi,
                       const Eigen::VectorXd& b, double smooth_eps,
                       Eigen::VectorXd& w) {
    w.resize(net.num_edges());
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
        const Edge& ed = net.edge(e);
        w[e] = ed.law.g_prime(pi[ed.from] - pi[ed.to] + b[e], smooth_eps);
    }
}

void net_outflow(const Network& net, const Eigen::VectorXd& phi,
                 Eigen::VectorXd& out) {
    out.resize(net.num_nodes());
    for (NodeId i = 0; i < net.num_nodes(); ++i) {
        double acc = 0.0;
        for (const auto& inc : net.incident(i)) acc += inc.sign * phi[inc.edge];
        out[i] = acc;
    }
}

double primal_energy_sum(const Network& net, const Eigen::VectorXd& phi,
                         const Eigen::VectorXd& b) {
    double acc = 0.0;
    for (EdgeId e = 0; e < net.num_edges(); ++e)
        acc += net.edge(e).law.F_anti(phi[e]) - b[e] * phi[e];
    return acc;
}

} // namespace serial

namespace par {

double energy_sum(const Network& net, const Eigen::VectorXd& pi,
                  const Eigen::VectorXd& b) {
    const int m = net.num_edges();
    double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = net.edge(e);
        acc += ed.law.G_anti(pi[ed.from] - pi[ed.to] + b[e]);
    }
    return acc;
}

void flows_from_potentials(const Network& net, const Eigen::VectorXd& pi,
                           const Eigen::VectorXd& b, Eigen::VectorXd& phi) {
    const int m = net.num_edges();
    phi.resize(m);
#pragma omp parallel for schedule(static)
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = net.edge(e);
        phi[e] = ed.law.g(pi[ed.from] - pi[ed.to] + b[e]);
    }
}

void laplacian_weights(const Network& net, const Eigen::VectorXd& pi,
                       const Eigen::VectorXd& b, double smooth_eps,
                       Eigen::VectorXd& w) {
    const int m = net.num_edges();
    w.resize(m);
#pragma omp parallel for schedule(static)
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = net.edge(e);
        w[e] = ed.law.g_prime(pi[ed.from] - pi[ed.to] + b[e], smooth_eps);
    }
}

void net_outflow(const Network& net, const Eigen::VectorXd& phi,
                 Eigen::VectorXd& out) {
    const int n = net.num_nodes();
    out.resize(n);
#pragma omp parallel for schedule(static)
    for (NodeId i = 0; i < n; ++i) {
        double acc = 0.0;
        for (const auto& inc : net.incident(i)) acc += inc.sign * phi[inc.edge];
        out[i] = acc;
    }
}

double primal_energy_sum(const Network& net, const Eigen::VectorXd& phi,
                         const Eigen::VectorXd& b) {
    const int m = net.num_edges();
    double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (EdgeId e = 0; e < m; ++e)
        acc += net.edge(e).law.F_anti(phi[e]) - b[e] * phi[e];
    return acc;
}

} // namespace par

double energy_sum(const Network& net, const Eigen::VectorXd& pi,
                  const Eigen::VectorXd& b) {
    return net.num_edges() >= parallel_threshold ? par::energy_sum(net, pi, b)
                                                 : serial::energy_sum(net, pi, b);
}

void flows_from_potentials(const Network& net, const Eigen::VectorXd& pi,
                           const Eigen::VectorXd& b, Eigen::VectorXd& phi) {
    if (net.num_edges() >= parallel_threshold)
        par::flows_from_potentials(net, pi, b, phi);
    else
        serial::flows_from_potentials(net, pi, b, phi);
}

void laplacian_weights(const Network& net, const Eigen::VectorXd& pi,
                       const Eigen::VectorXd& b, double smooth_eps,
                       Eigen::VectorXd& w) {
    if (net.num_edges() >= parallel_threshold)
        par::laplacian_weights(net, pi, b, smooth_eps, w);
    else
        serial::laplacian_weights(net, pi, b, smooth_eps, w);
}

void net_outflow(const Network& net, const Eigen::VectorXd& phi,
                 Eigen::VectorXd& out) {
    if (net.num_edges() >= parallel_threshold)
        par::net_outflow(net, phi, out);
    else
        serial::net_outflow(net, phi, out);
}

double primal_energy_sum(const Network& net, const Eigen::VectorXd& phi,
                         const Eigen::VectorXd& b) {
    return net.num_edges() >= parallel_threshold
               ? par::primal_energy_sum(net, phi, b)
               : serial::primal_energy_sum(net, phi, b);
}

} // namespace dfn::kernels
