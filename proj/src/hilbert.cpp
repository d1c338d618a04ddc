#include "conelab/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "conelab/sym_matrix.hpp"

namespace conelab::cx {

namespace {

using Matrix = std::vector<std::vector<double>>;  // row-major dense

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(rows, std::vector<double>(cols));
    for (auto& row : m)
        for (double& x : row) x = dist(rng);
    return m;
}

// Columns of an orthonormal basis of the column space of a (rows x cols).
std::vector<std::vector<double>> column_space_basis(const Matrix& a) {
    if (a.empty()) return {};
    const std::size_t rows = a.size(), cols = a[0].size();
    std::vector<std::vector<double>> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<double> v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = a[i][j];
        for (const auto& q : basis) {
            double dot = 0.0;
            for (std::size_t i = 0; i < rows; ++i) dot += q[i] * v[i];
            for (std::size_t i = 0; i < rows; ++i) v[i] -= dot * q[i];
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 1e-10) {
            for (double& x : v) x /= norm;
            basis.push_back(std::move(v));
        }
    }
    return basis;
}

SymMatrix laplacian_block(const FiniteComplex& c, std::size_t r) {
    const std::size_t n = c.dims[r];
    SymMatrix lap(n);
    if (r < c.d.size() && !c.d[r].empty()) {  // d_r^T d_r
        const auto& d = c.d[r];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < d.size(); ++k) acc += d[k][i] * d[k][j];
                lap.add(i, j, acc);
            }
    }
    if (r > 0 && !c.d[r - 1].empty()) {  // d_{r-1} d_{r-1}^T
        const auto& d = c.d[r - 1];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < d[0].size(); ++k) acc += d[i][k] * d[j][k];
                lap.add(i, j, acc);
            }
    }
    return lap;
}

}  // namespace

FiniteComplex random_finite_complex(std::uint64_t seed, std::size_t max_terms,
                                    std::size_t max_dim) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> term_count(2, std::max<std::size_t>(2, max_terms));
    std::uniform_int_distribution<std::size_t> dim_dist(1, std::max<std::size_t>(1, max_dim));

    FiniteComplex c;
    const std::size_t terms = term_count(rng);
    c.dims.resize(terms);
    for (auto& d : c.dims) d = dim_dist(rng);

    c.d.resize(terms - 1);
    std::vector<std::vector<double>> prev_image;
    for (std::size_t r = 0; r + 1 < terms; ++r) {
        Matrix d = random_matrix(rng, c.dims[r + 1], c.dims[r]);
        // Enforce d_r d_{r-1} = 0: kill the previous image inside the domain.
        if (r > 0 && !prev_image.empty()) {
            // prev_image spans im(d_{r-1}) in R^{n_r}; zero those directions out
            // of every row of d_r, i.e. project the row space.
            for (auto& row : d)
                for (const auto& q : prev_image) {
                    double dot = 0.0;
                    for (std::size_t i = 0; i < row.size(); ++i) dot += q[i] * row[i];
                    for (std::size_t i = 0; i < row.size(); ++i) row[i] -= dot * q[i];
                }
        }
        prev_image = column_space_basis(d);
        c.d[r] = std::move(d);
    }
    return c;
}

EvOddOracleReport finite_complex_even_odd(const FiniteComplex& complex) {
    std::vector<double> even, odd;
    double scale = 1.0;
    for (std::size_t r = 0; r < complex.dims.size(); ++r) {
        EigenDecomposition eig = sym_eigen(laplacian_block(complex, r));
        auto& sink = (r % 2 == 0) ? even : odd;
        for (double v : eig.values) {
            sink.push_back(v);
            scale = std::max(scale, std::abs(v));
        }
    }
    const double cut = 1e-9 * scale;
    auto positive = [&](std::vector<double>& v) {
        v.erase(std::remove_if(v.begin(), v.end(), [&](double x) { return x <= cut; }), v.end());
        std::sort(v.begin(), v.end());
    };
    positive(even);
    positive(odd);

    EvOddOracleReport report;
    report.even_positive = even;
    report.odd_positive = odd;
    if (even.size() != odd.size()) {
        report.max_deviation = std::numeric_limits<double>::infinity();
        report.match = false;
        return report;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < even.size(); ++i)
        worst = std::max(worst, std::abs(even[i] - odd[i]));
    report.max_deviation = worst;
    report.match = worst <= 1e-9 * scale;
    return report;
}

EvOddOracleReport finite_complex_oracle(std::uint64_t seed, std::size_t trials,
                                        std::size_t max_dim) {
    EvOddOracleReport worst;
    worst.max_deviation = 0.0;
    worst.match = true;
    for (std::size_t t = 0; t < trials; ++t) {
        FiniteComplex c = random_finite_complex(seed + t, 5, max_dim);
        EvOddOracleReport r = finite_complex_even_odd(c);
        const bool all_match = worst.match && r.match;
        if (r.max_deviation > worst.max_deviation) worst = std::move(r);
        worst.match = all_match;
    }
    return worst;
}

}  // namespace conelab::cx
