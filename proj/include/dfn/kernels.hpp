#ifndef DFN_KERNELS_HPP
#define DFN_KERNELS_HPP

#include <Eigen/Dense>

#include "dfn/network.hpp"

namespace dfn::kernels {

// Edge- and node-wise kernels shared by the solvers. Each kernel has a
// serial reference implementation and an OpenMP one; the unqualified entry
// points dispatch on problem size (parallelizing a 12-node test network
// costs more than it buys). Tests compare the two implementations, the
// bench target times them.

// Edge count at and above which the dispatchers go parallel.
inline constexpr int parallel_threshold = 1 << 13;

namespace serial {

// sum over edges of G(pi_i - pi_j + b_ij)
double energy_sum(const Network& net, const Eigen::VectorXd& pi,
                  const Eigen::VectorXd& b);

// phi_e = g(pi_i - pi_j + b_e) for every edge
void flows_from_potentials(const Network& net, const Eigen::VectorXd& pi,
                           const Eigen::VectorXd& b, Eigen::VectorXd& phi);

// w_e = g'(pi_i - pi_j + b_e) with the cap at smooth_eps
void laplacian_weights(const Network& net, const Eigen::VectorXd& pi,
                       const Eigen::VectorXd& b, double smooth_eps,
                       Eigen::VectorXd& w);

// out_i = signed sum of phi over edges incident to i (net outflow)
void net_outflow(const Network& net, const Eigen::VectorXd& phi,
                 Eigen::VectorXd& out);

// sum over edges of F(phi_e) - b_e * phi_e
double primal_energy_sum(const Network& net, const Eigen::VectorXd& phi,
                         const Eigen::VectorXd& b);

} // namespace serial

namespace par {

double energy_sum(const Network& net, const Eigen::VectorXd& pi,
                  const Eigen::VectorXd& b);
void flows_from_potentials(const Network& net, const Eigen::VectorXd& pi,
                           const Eigen::VectorXd& b, Eigen::VectorXd& phi);
void laplacian_weights(const Network& net, const Eigen::VectorXd& pi,
                       const Eigen::VectorXd& b, double smooth_eps,
                       Eigen::VectorXd& w);
void net_outflow(const Network& net, const Eigen::VectorXd& phi,
                 Eigen::VectorXd& out);
double primal_energy_sum(const Network& net, const Eigen::VectorXd& phi,
                         const Eigen::VectorXd& b);

} // namespace par

double energy_sum(const Network& net, const Eigen::VectorXd& pi,
                  const Eigen::VectorXd& b);
void flows_from_potentials(const Network& net, const Eigen::VectorXd& pi,
                           const Eigen::VectorXd& b, Eigen::VectorXd& phi);
void laplacian_weights(const Network& net, const Eigen::VectorXd& pi,
                       const Eigen::VectorXd& b, double smooth_eps,
                       Eigen::VectorXd& w);
void net_outflow(const Network& net, const Eigen::VectorXd& phi,
                 Eigen::VectorXd& out);
double primal_energy_sum(const Network& net, const Eigen::VectorXd& phi,
                         const Eigen::VectorXd& b);

} // namespace dfn::kernels

#endif
