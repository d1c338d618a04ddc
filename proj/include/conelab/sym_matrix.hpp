#ifndef CONELAB_SYM_MATRIX_HPP
#define CONELAB_SYM_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace conelab {

/// Dense real symmetric matrix, full storage. set() writes both (i,j) and
/// (j,i) so the stored array is symmetric exactly, not just up to roundoff.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    static SymMatrix identity(std::size_t n) {
        SymMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
        return m;
    }
    static SymMatrix diagonal(const std::vector<double>& d) {
        SymMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.a_[i * d.size() + i] = d[i];
        return m;
    }

    std::size_t order() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, double v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }
    void add(std::size_t i, std::size_t j, double v) {
        a_[i * n_ + j] += v;
        if (i != j) a_[j * n_ + i] += v;
    }

    double frobenius_norm() const;
    double max_abs() const;

    const std::vector<double>& data() const { return a_; }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

struct EigenDecomposition {
    std::vector<double> values;               // ascending
    std::vector<std::vector<double>> vectors; // vectors[k] is the k-th eigenvector
};

/// Eigenvalues and orthonormal eigenvectors of a dense symmetric matrix by
/// cyclic Jacobi rotations. The sweep order is fixed (row-major upper
/// triangle), so repeated runs on one platform are bit-for-bit identical.
/// Intended for the moderate orders used here (<= ~200).
///
/// Throws std::invalid_argument on non-finite entries.
EigenDecomposition sym_eigen(const SymMatrix& m);

/// Eigenvalues only (ascending), same rotations without accumulating vectors;
/// noticeably faster for the larger coupled blocks.
std::vector<double> sym_eigen_values(const SymMatrix& m);

}  // namespace conelab

#endif
