#include "conelab/quadrature.hpp"

#include <cmath>
#include <vector>

#include "conelab/detail/ortho_eval.hpp"
#include "conelab/sym_matrix.hpp"
#include <algorithm>

namespace conelab {

namespace {

// Eigenvalues of the symmetric tridiagonal (diag d, offdiag e) by Sturm
// bisection; ample seeding accuracy for the Newton polish below at O(n^2).
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& d,
                                            const std::vector<double>& e) {
    const std::size_t n = d.size();
    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const double tiny = 1e-300;
    auto count_below = [&](double x) {
        std::size_t count = 0;
        double q = d[0] - x;
        if (q < 0.0) ++count;
        for (std::size_t i = 1; i < n; ++i) {
            if (q == 0.0) q = tiny;
            q = d[i] - x - e[i - 1] * e[i - 1] / q;
            if (q < 0.0) ++count;
        }
        return count;
    };
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 80 && b - a > 1e-14 * (std::abs(a) + std::abs(b) + 1.0); ++it) {
            const double mid = 0.5 * (a + b);
            if (count_below(mid) > k)
                b = mid;
            else
                a = mid;
        }
        values[k] = 0.5 * (a + b);
    }
    return values;
}

}  // namespace

QuadratureRule gauss_laguerre(double alpha, std::size_t n, double s) {
    if (!(alpha > -1.0)) throw std::domain_error("gauss_laguerre: alpha must exceed -1");
    if (n == 0) throw std::invalid_argument("gauss_laguerre: need at least one node");
    if (!(s > 0.0)) throw std::domain_error("gauss_laguerre: scale must be positive");

    // Jacobi matrix of the generalized Laguerre recurrence for t^alpha e^{-t};
    // its eigenvalues seed the nodes.
    std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
    for (std::size_t k = 0; k < n; ++k) {
        diag[k] = 2.0 * static_cast<double>(k) + 1.0 + alpha;
        if (k + 1 < n) {
            double b = static_cast<double>(k + 1) * (static_cast<double>(k + 1) + alpha);
            off[k] = std::sqrt(b);
        }
    }
    EigenDecomposition eig;
    eig.values = tridiagonal_eigenvalues(diag, off);

    QuadratureRule rule;
    rule.alpha = alpha;
    rule.scale = s;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    std::vector<long double> val(n + 1), der(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        // Newton refinement on the orthonormal T_n (its roots are the nodes);
        // the e^{-t/2} scaling cancels in the ratio.
        long double x = eig.values[i];
        for (int it = 0; it < 4; ++it) {
            detail::eval_t_family(alpha, 1.0, static_cast<double>(x), n + 1, val.data(),
                                  der.data(), nullptr);
            if (der[n] == 0.0L) break;
            const long double step = val[n] / der[n];
            x -= step;
            if (fabsl(step) <= 1e-18L * (1.0L + fabsl(x))) break;
        }
        // Christoffel weight; the e^{-x} factor may denormalize only at node
        // magnitudes far beyond any basis size used here.
        const long double w_scaled =
            detail::scaled_christoffel_weight(alpha, 1.0, static_cast<double>(x), n);
        const long double w = w_scaled * expl(-x);
        rule.nodes[i] = static_cast<double>(x / s);
        rule.weights[i] = static_cast<double>(w / powl(static_cast<long double>(s), alpha + 1.0L));
    }
    return rule;
}

double half_line_moment(double beta, double s) {
    if (!(beta > -1.0)) throw std::domain_error("half_line_moment: divergent for beta <= -1");
    if (!(s > 0.0)) throw std::domain_error("half_line_moment: scale must be positive");
    const double e = 0.5 * (beta + 1.0);
    return 0.5 * std::exp(std::lgamma(e) - e * std::log(s));
}

}  // namespace conelab
