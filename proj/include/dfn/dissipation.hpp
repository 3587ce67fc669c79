#ifndef DFN_DISSIPATION_HPP
#define DFN_DISSIPATION_HPP

#include <cassert>
#include <cmath>

namespace dfn {

// Power-law dissipation f(x) = delta * sgn(x) * |x|^alpha and its calculus.
//
// f is odd and strictly increasing, so it has an inverse g = f^{-1}. The
// antiderivative of f is F (convex, even, F(0) = 0) and the antiderivative
// of g is G (convex, even, G(0) = 0); these two are a Fenchel conjugate
// pair, G(y) = sup_x (x*y - F(x)).
//
// For alpha > 1 the derivative g' blows up at y = 0. g_prime caps it at
// g'(smooth_eps) so Newton systems stay finite; values of f, g, F, G are
// never smoothed.
struct DissipationLaw {
    double delta = 1.0; // friction coefficient, > 0
    double alpha = 2.0; // power-law exponent, >= 1

    bool valid() const { return delta > 0.0 && alpha >= 1.0; }

    // f(x) = delta * sgn(x) * |x|^alpha
    double f(double x) const {
        assert(valid());
        if (x == 0.0) return 0.0;
        return std::copysign(delta * std::pow(std::abs(x), alpha), x);
    }

    // g(y) = f^{-1}(y) = sgn(y) * (|y|/delta)^(1/alpha)
    double g(double y) const {
        assert(valid());
        if (y == 0.0) return 0.0;
        return std::copysign(std::pow(std::abs(y) / delta, 1.0 / alpha), y);
    }

    // F(x) = delta * |x|^(alpha+1) / (alpha+1), the antiderivative of f
    double F_anti(double x) const {
        assert(valid());
        return delta * std::pow(std::abs(x), alpha + 1.0) / (alpha + 1.0);
    }

    // G(y) = alpha/(alpha+1) * |y|^((alpha+1)/alpha) / delta^(1/alpha),
    // the antiderivative of g. For alpha = 2, delta = 1 this is (2/3)|y|^{3/2}.
    double G_anti(double y) const {
        assert(valid());
        return alpha / (alpha + 1.0) *
               std::pow(std::abs(y), (alpha + 1.0) / alpha) /
               std::pow(delta, 1.0 / alpha);
    }

    // g'(y) for |y| >= smooth_eps; the constant g'(smooth_eps) inside.
    // Always finite and positive.
    double g_prime(double y, double smooth_eps) const {
        assert(valid() && smooth_eps > 0.0);
        const double a = std::max(std::abs(y), smooth_eps);
        return std::pow(a, 1.0 / alpha - 1.0) /
               (alpha * std::pow(delta, 1.0 / alpha));
    }

    // f'(x) = alpha * delta * |x|^(alpha-1)
    double f_prime(double x) const {
        assert(valid());
        return alpha * delta * std::pow(std::abs(x), alpha - 1.0);
    }
};

} // namespace dfn

#endif
