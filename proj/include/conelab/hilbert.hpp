#ifndef CONELAB_HILBERT_HPP
#define CONELAB_HILBERT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace conelab::cx {

/// A random finite-dimensional graded complex d_r: R^{n_r} -> R^{n_{r+1}}
/// with d^2 = 0, built by projecting each random differential onto the
/// orthogonal complement of the previous image.
struct FiniteComplex {
    std::vector<std::size_t> dims;                          // n_0 .. n_L
    std::vector<std::vector<std::vector<double>>> d;        // d[r] is n_{r+1} x n_r
};

FiniteComplex random_finite_complex(std::uint64_t seed, std::size_t max_terms,
                                    std::size_t max_dim);

struct EvOddOracleReport {
    std::vector<double> even_positive;  // positive Laplacian eigenvalues, sorted
    std::vector<double> odd_positive;
    double max_deviation;               // multiset mismatch, absolute
    bool match;                         // within the 1e-9 tolerance
};

/// Checks on one finite complex that the even and odd Laplacians share their
/// positive spectrum with multiplicity. Positivity cut at 1e-9 * scale.
EvOddOracleReport finite_complex_even_odd(const FiniteComplex& complex);

/// Runs `trials` seeded random complexes; returns the worst deviation seen.
/// Independent oracle for the spectral symmetry of Hilbert complexes.
EvOddOracleReport finite_complex_oracle(std::uint64_t seed, std::size_t trials,
                                        std::size_t max_dim);

}  // namespace conelab::cx

#endif
