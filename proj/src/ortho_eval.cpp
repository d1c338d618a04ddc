#include "conelab/detail/ortho_eval.hpp"

#include <cmath>
#include <vector>

namespace conelab::detail {

void eval_t_family(double alpha, double s, double t, std::size_t M, long double* val,
                   long double* d1, long double* d2) {
    if (M == 0) return;
    const long double ls = s;
    const long double lt = t;
    const long double la = alpha;
    val[0] = expl(0.5L * ((la + 1.0L) * logl(ls) - lgammal(la + 1.0L)) - 0.5L * ls * lt);
    if (d1) d1[0] = 0.0L;
    if (d2) d2[0] = 0.0L;
    long double b_prev = 0.0L;  // sqrt(beta_m) of the previous step
    for (std::size_t m = 0; m + 1 < M; ++m) {
        const long double a_m = (2.0L * m + 1.0L + la) / ls;
        const long double b_next = sqrtl((m + 1.0L) * (m + 1.0L + la)) / ls;
        const long double vm = val[m];
        const long double vp = m == 0 ? 0.0L : val[m - 1];
        val[m + 1] = ((lt - a_m) * vm - b_prev * vp) / b_next;
        if (d1) {
            const long double dm = d1[m];
            const long double dp = m == 0 ? 0.0L : d1[m - 1];
            d1[m + 1] = (vm + (lt - a_m) * dm - b_prev * dp) / b_next;
        }
        if (d2) {
            const long double em = d2[m];
            const long double ep = m == 0 ? 0.0L : d2[m - 1];
            d2[m + 1] = (2.0L * d1[m] + (lt - a_m) * em - b_prev * ep) / b_next;
        }
        b_prev = b_next;
    }
}

long double scaled_christoffel_weight(double alpha, double s, double t, std::size_t n) {
    std::vector<long double> val(n);
    eval_t_family(alpha, s, t, n, val.data(), nullptr, nullptr);
    long double sum = 0.0L;
    for (long double v : val) sum += v * v;
    return 1.0L / sum;
}

}  // namespace conelab::detail
