#include "conelab/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace conelab {

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
}

double SymMatrix::max_abs() const {
    double s = 0.0;
    for (double x : a_) s = std::max(s, std::abs(x));
    return s;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
    return std::sqrt(2.0 * s);
}

}  // namespace

namespace {

// Cyclic Jacobi on a copy of the matrix; v (when non-null) accumulates the
// rotations. Deterministic sweep order: row-major upper triangle.
void jacobi_iterate(std::vector<double>& a, std::vector<double>* v, std::size_t n,
                    double scale) {
    const double tol = 1e-15 * scale;
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a, n) <= tol) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= 1e-18 * scale) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                // Classical stable rotation (Rutishauser).
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        const double aip = a[i * n + p];
                        const double aiq = a[i * n + q];
                        a[i * n + p] = aip - s * (aiq + tau * aip);
                        a[i * n + q] = aiq + s * (aip - tau * aiq);
                        a[p * n + i] = a[i * n + p];
                        a[q * n + i] = a[i * n + q];
                    }
                    if (v) {
                        const double vip = (*v)[i * n + p];
                        const double viq = (*v)[i * n + q];
                        (*v)[i * n + p] = vip - s * (viq + tau * vip);
                        (*v)[i * n + q] = viq + s * (vip - tau * viq);
                    }
                }
            }
        }
    }
}

void check_finite(const SymMatrix& m) {
    for (double x : m.data())
        if (!std::isfinite(x)) throw std::invalid_argument("sym_eigen: non-finite entry");
}

}  // namespace

EigenDecomposition sym_eigen(const SymMatrix& m) {
    const std::size_t n = m.order();
    check_finite(m);

    std::vector<double> a = m.data();
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    jacobi_iterate(a, &v, n, std::max(m.frobenius_norm(), 1e-300));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a[i * n + i] < a[j * n + j];
    });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a[order[k] * n + order[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = v[i * n + order[k]];
    }
    return out;
}

std::vector<double> sym_eigen_values(const SymMatrix& m) {
    const std::size_t n = m.order();
    check_finite(m);
    std::vector<double> a = m.data();
    jacobi_iterate(a, nullptr, n, std::max(m.frobenius_norm(), 1e-300));
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i];
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace conelab
