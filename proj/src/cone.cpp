#include "conelab/cone.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace conelab::cx {

LinkData link_point() {
    LinkData link;
    link.name = "point";
    link.dim = 0;
    link.harmonic_max = {1};
    link.harmonic_min = {1};
    link.pairs.assign(1, {});
    return link;
}

LinkData link_circle(std::size_t count) {
    LinkData link;
    link.name = "S1";
    link.dim = 1;
    link.harmonic_max = {1, 1};
    link.harmonic_min = {1, 1};
    link.pairs.assign(2, {});
    // Fourier modes cos(k t), sin(k t): Laplacian eigenvalue k^2 with
    // multiplicity 2, exact image in degree 1 spanned by their differentials.
    for (std::size_t k = 1; k <= count; ++k)
        link.pairs[1].push_back({static_cast<double>(k), 2});
    return link;
}

LinkData link_torus2(std::size_t count) {
    LinkData link;
    link.name = "T2";
    link.dim = 2;
    link.harmonic_max = {1, 2, 1};
    link.harmonic_min = {1, 2, 1};
    link.pairs.assign(3, {});
    // Lattice eigenvalues |m|^2, m in Z^2, with their counting multiplicity;
    // by Hodge symmetry the same list feeds the (0,1) and the (1,2) pairs.
    std::map<long, long> mult;
    const long bound = static_cast<long>(count) + 2;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            const long q = a * a + b * b;
            if (q > 0 && q <= bound * bound) ++mult[q];
        }
    std::size_t taken = 0;
    for (const auto& [q, m] : mult) {
        if (taken++ >= count) break;
        const double mu = std::sqrt(static_cast<double>(q));
        link.pairs[1].push_back({mu, m});
        link.pairs[2].push_back({mu, m});
    }
    return link;
}

std::vector<std::vector<double>> cone_witten_spectrum(const LinkData& link, long n,
                                                      const Rational& u, double s, Sign sign,
                                                      Choice choice, std::size_t K) {
    if (n != link.dim + 1)
        throw std::invalid_argument("cone_witten_spectrum: n must be link dim + 1");
    if (static_cast<long>(link.harmonic(choice).size()) != link.dim + 1)
        throw std::invalid_argument("cone_witten_spectrum: missing link harmonic data");

    std::vector<std::vector<double>> per_degree(static_cast<std::size_t>(n) + 1);
    auto append = [&](long degree, const std::vector<double>& values) {
        auto& bucket = per_degree[static_cast<std::size_t>(degree)];
        bucket.insert(bucket.end(), values.begin(), values.end());
    };

    // Length-one blocks: one per harmonic link generator.
    for (long r = 0; r <= link.dim; ++r) {
        const long count = link.harmonic(choice)[static_cast<std::size_t>(r)];
        if (count == 0) continue;
        const Rational kp = kappa_exponent(n, r, u);
        const C1Assignment tags = complex1_assignment(kp, choice);
        const auto spec0 = complex1_spectrum(kp, sign, tags.degree0, s, K);
        const auto spec1 = complex1_spectrum(kp, sign, tags.degree1, s, K);
        for (long c = 0; c < count; ++c) {
            append(r, spec0);
            append(r + 1, spec1);
        }
    }

    // Length-two blocks: one per mu-eigenpair with alpha-degree r.
    for (long r = 1; r < static_cast<long>(link.pairs.size()); ++r) {
        if (link.pairs[static_cast<std::size_t>(r)].empty()) continue;
        const Rational kp = kappa_exponent(n, r, u);
        const C2Tag t0 = complex2_assignment(kp, u, choice, 0);
        const C2Tag t1 = complex2_assignment(kp, u, choice, 1);
        const C2Tag t2 = complex2_assignment(kp, u, choice, 2);
        for (const auto& [mu, mult] : link.pairs[static_cast<std::size_t>(r)]) {
            Complex2Spec spec{s, kp, u, mu, sign};
            const auto spec0 = complex2_degree_spectrum(spec, t0, K);
            const auto spec1 = complex2_degree_spectrum(spec, t1, K);
            const auto spec2 = complex2_degree_spectrum(spec, t2, K);
            for (long c = 0; c < mult; ++c) {
                append(r - 1, spec0);
                append(r, spec1);
                append(r + 1, spec2);
            }
        }
    }

    for (auto& bucket : per_degree) std::sort(bucket.begin(), bucket.end());
    return per_degree;
}

std::vector<long> cone_harmonic_dims(const std::vector<long>& link_betti, long n,
                                     const Rational& u, Sign sign, Choice choice) {
    if (static_cast<long>(link_betti.size()) != n)
        throw std::invalid_argument("cone_harmonic_dims: betti length must equal link dim + 1");
    const Rational half(1, 2);
    std::vector<long> dims(static_cast<std::size_t>(n) + 1, 0);
    for (long r = 0; r < n; ++r) {
        const Rational kp = kappa_exponent(n, r, u);
        const long beta = link_betti[static_cast<std::size_t>(r)];
        if (sign == Sign::Plus) {
            const bool keep = choice == Choice::Max ? kp > -half : kp >= half;
            if (keep) dims[static_cast<std::size_t>(r)] += beta;
        } else {
            const bool keep = choice == Choice::Max ? kp <= -half : kp < half;
            if (keep) dims[static_cast<std::size_t>(r) + 1] += beta;
        }
    }
    return dims;
}

}  // namespace conelab::cx
