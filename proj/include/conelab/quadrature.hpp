#ifndef CONELAB_QUADRATURE_HPP
#define CONELAB_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace conelab {

/// Gauss rule for the weight t^alpha e^{-s t} on (0, oo):
///     integral f(t) t^alpha e^{-s t} dt  ~=  sum_i weights[i] * f(nodes[i]),
/// exact for polynomials f of degree <= 2*len(nodes)-1.
struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing, positive
    std::vector<double> weights;  // positive
    double alpha = 0.0;
    double scale = 1.0;

    double integrate(const std::function<double(double)>& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/// Golub-Welsch rule on the generalized Laguerre recurrence; the scale s is
/// handled by the substitution t -> t/s. Requires alpha > -1, n >= 1.
QuadratureRule gauss_laguerre(double alpha, std::size_t n, double s);

/// integral_0^oo rho^beta e^{-s rho^2} d rho = Gamma((beta+1)/2) / (2 s^((beta+1)/2)),
/// computed through lgamma. Requires beta > -1 (divergent otherwise) and s > 0.
double half_line_moment(double beta, double s);

/// Thrown when a computed recurrence coefficient fails to be positive, which
/// signals loss of positivity of the moment data at that index.
struct StieltjesBreakdown : std::runtime_error {
    std::size_t index;
    explicit StieltjesBreakdown(std::size_t k)
        : std::runtime_error("stieltjes_recurrence: nonpositive beta at index " +
                             std::to_string(k)),
          index(k) {}
};

/// Chebyshev moment algorithm for an even measure on R: from the raw moments
/// m_0 .. m_{2K} (odd ones zero by symmetry, so the recurrence has no
/// diagonal term) produce beta_1..beta_K of the orthonormal recurrence
///     x p_{k-1} = sqrt(beta_k) p_k + sqrt(beta_{k-1}) p_{k-2}.
/// Works for any field-like scalar; exact over Rational moments. The moment
/// oracle receives the exponent j and returns m_j.
template <typename Scalar, typename MomentFn>
std::vector<Scalar> stieltjes_recurrence(const MomentFn& moment, std::size_t K) {
    // sigma[k][l] = integral p_k(x) x^l dmu, rows k = 0..K, l = k..2K-k.
    std::vector<std::vector<Scalar>> sigma(K + 1, std::vector<Scalar>(2 * K + 1, Scalar(0)));
    for (std::size_t l = 0; l <= 2 * K; ++l) sigma[0][l] = moment(l);

    std::vector<Scalar> beta;
    beta.reserve(K);
    for (std::size_t k = 1; k <= K; ++k) {
        for (std::size_t l = k; l + k <= 2 * K; ++l) {
            sigma[k][l] = sigma[k - 1][l + 1];
            if (k >= 2) sigma[k][l] -= beta[k - 2] * sigma[k - 2][l];
        }
        const Scalar& num = sigma[k][k];
        const Scalar& den = sigma[k - 1][k - 1];
        if (!(num > Scalar(0)) || !(den > Scalar(0))) throw StieltjesBreakdown(k);
        beta.push_back(num / den);
    }
    return beta;
}

}  // namespace conelab

#endif
