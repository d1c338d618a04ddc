#ifndef CONELAB_CONE_HPP
#define CONELAB_CONE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "conelab/complex1.hpp"
#include "conelab/complex2.hpp"

namespace conelab::cx {

/// Spectral data of a compact link needed to split the deformed complex on
/// the cone: harmonic dimensions per degree and, for each positive eigenvalue
/// mu of the link Dirac-type operator, its multiplicity within the exact
/// image part at each alpha-degree. Lists are truncated; mu values ascend.
struct LinkData {
    std::string name;
    long dim = 0;
    std::vector<long> harmonic_max;  // per degree 0..dim
    std::vector<long> harmonic_min;
    // pairs[j] lists (mu, multiplicity) for the coexact/exact eigenpair whose
    // alpha component lives in degree j (1 <= j <= dim).
    std::vector<std::vector<std::pair<double, long>>> pairs;

    const std::vector<long>& harmonic(Choice c) const {
        return c == Choice::Max ? harmonic_max : harmonic_min;
    }
};

/// The one-point link: a single harmonic generator in degree 0.
LinkData link_point();
/// The circle with its standard metric: harmonic dims (1,1); positive
/// function-Laplacian eigenvalues k^2 (k >= 1) with multiplicity 2, feeding
/// the (0,1) eigenpairs with mu = k. Truncated after `count` distinct mu.
LinkData link_circle(std::size_t count);
/// The square flat torus: harmonic dims (1,2,1); eigenvalues |m|^2 over the
/// integer lattice with their lattice multiplicities, at both (0,1) and (1,2)
/// eigenpairs. Truncated after `count` distinct positive eigenvalues.
LinkData link_torus2(std::size_t count);

/// Per-cone-degree eigenvalue multisets of the deformed Laplacian on the cone
/// over the link, assembled from the splitting: each harmonic link generator
/// of degree r contributes the length-one spectra at kappa(n,r,u) to degrees
/// (r, r+1); each mu-eigenpair at alpha-degree r contributes the length-two
/// spectra at kappa(n,r,u) to degrees (r-1, r, r+1). Truncation K per block.
/// Throws when a needed realization is Unknown (grey range) at some kappa.
std::vector<std::vector<double>> cone_witten_spectrum(const LinkData& link, long n,
                                                      const Rational& u, double s, Sign sign,
                                                      Choice choice, std::size_t K);

/// Harmonic dimensions of the deformed complex on the cone, per degree
/// 0..n: purely combinatorial in the link Betti numbers with exact rational
/// threshold tests on kappa(n,r,u); independent of s.
///   sign +: degree r counts beta^r when kappa > -1/2 (max) / kappa >= 1/2 (min)
///   sign -: degree r+1 counts beta^r when kappa <= -1/2 (max) / kappa < 1/2 (min)
std::vector<long> cone_harmonic_dims(const std::vector<long>& link_betti, long n,
                                     const Rational& u, Sign sign, Choice choice);

}  // namespace conelab::cx

#endif
