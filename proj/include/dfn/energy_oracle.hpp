#ifndef DFN_ENERGY_ORACLE_HPP
#define DFN_ENERGY_ORACLE_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "dfn/network.hpp"
#include "dfn/nf_solver.hpp"

namespace dfn {

// Result of evaluating the conjugate energy E*(x, b). pi_star is the inner
// maximizer (the NF potentials at injections x), phi_star the matching
// flows; value includes the slack node's contribution with its injection
// derived from balance, so it equals the common optimal value of the
// primal/dual pair.
struct ConjugateEval {
    double value = 0.0;
    Eigen::VectorXd pi_star;  // per node
    Eigen::VectorXd phi_star; // per edge
    int inner_iterations = 0;
    SolveStatus status = SolveStatus::ok;
};

// E(pi, b): sum over edges of G(pi_i - pi_j + b_ij). Convex in pi.
// Expects pi[slack] to equal the network's fixed slack potential.
double E(const Network& net, const Eigen::VectorXd& pi,
         const Eigen::VectorXd& b);

// E*(x, b) = sup_pi [pi.x - E(pi, b)], evaluated by the dual NF solve.
// pi_hint warm-starts the inner solve.
ConjugateEval E_star(const Network& net, const Injections& x,
                     const Eigen::VectorXd& b,
                     const NewtonSettings& settings = {},
                     const Eigen::VectorXd* pi_hint = nullptr);

// Both gradients of E* from one inner solve: d/dx = pi*, d/db = -phi*.
struct EStarGradient {
    Eigen::VectorXd d_x; // per node (pi*)
    Eigen::VectorXd d_b; // per edge (-phi*)
    ConjugateEval eval;
};
EStarGradient grad_E_star(const Network& net, const Injections& x,
                          const Eigen::VectorXd& b,
                          const NewtonSettings& settings = {},
                          const Eigen::VectorXd* pi_hint = nullptr);

// Hessian of E in pi, restricted to non-slack rows/columns: the reduced
// weighted graph Laplacian with edge weights g'(drop). Symmetric positive
// definite on connected graphs. Free-node ordering follows FreeNodeMap.
Eigen::SparseMatrix<double> hess_E(const Network& net,
                                   const Eigen::VectorXd& pi,
                                   const Eigen::VectorXd& b,
                                   double smooth_eps = 1e-8);

// Hessian of E* in x over free nodes: the inverse of hess_E at pi*(x).
// Symmetric with entrywise nonnegative entries.
Eigen::MatrixXd hess_E_star(const Network& net, const Injections& x,
                            const Eigen::VectorXd& b,
                            const NewtonSettings& settings = {});

// Fenchel-Young gap E(pi,b) + E*(x,b) - pi.x (slack term included in the
// inner product). Nonnegative; zero exactly at pi = pi*(x).
double fenchel_gap(const Network& net, const Eigen::VectorXd& pi,
                   const Injections& x, const Eigen::VectorXd& b,
                   const NewtonSettings& settings = {});

// Solves both injection profiles and checks the componentwise ordering of
// the resulting potentials (q1 <= q2 must give pi1 <= pi2, within tol).
bool monotonicity_check(const Network& net, const Eigen::VectorXd& b,
                        const Injections& q1, const Injections& q2,
                        const NewtonSettings& settings = {},
                        double tol = 1e-9);

} // namespace dfn

#endif
