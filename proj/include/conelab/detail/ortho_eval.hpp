#ifndef CONELAB_DETAIL_ORTHO_EVAL_HPP
#define CONELAB_DETAIL_ORTHO_EVAL_HPP

#include <cstddef>

namespace conelab::detail {

/// Values at t of the orthonormal polynomials T_0..T_{M-1} for the weight
/// t^alpha e^{-s t} on (0, oo), with e^{-s t / 2} folded into the running
/// values so that nothing overflows at large t. d1/d2 receive the identically
/// scaled first and second derivative values when non-null. Long double
/// throughout; the recurrence runs forward (dominant solution), so it is
/// stable for every t >= 0.
void eval_t_family(double alpha, double s, double t, std::size_t M, long double* val,
                   long double* d1, long double* d2);

/// Gauss weight at a (true) node t of the n-point rule, multiplied by
/// e^{+s t}: by the Christoffel identity this equals 1 / sum_{m<n} That_m(t)^2
/// with the scaled values above, which is computable to full relative
/// accuracy at every node, however extreme.
long double scaled_christoffel_weight(double alpha, double s, double t, std::size_t n);

}  // namespace conelab::detail

#endif
