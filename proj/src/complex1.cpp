#include "conelab/complex1.hpp"

#include <stdexcept>

namespace conelab::cx {

Rational kappa_exponent(long n, long r, const Rational& u) {
    return Rational(n - 2 * r - 1) * u / Rational(2);
}

C1Table complex1_operator_table(const Rational& kappa) {
    const Rational half(1, 2);
    C1Table t;
    t.a1 = {kappa > -half, kappa};
    t.a2 = {kappa < Rational(3, 2), Rational(1) - kappa};
    t.b1 = {kappa > Rational(-3, 2), kappa};
    t.b2 = {kappa < half, Rational(-1) - kappa};
    t.a_overlap_equal = (kappa == half);
    t.b_overlap_equal = (kappa == -half);
    return t;
}

C1Assignment complex1_assignment(const Rational& kappa, Choice choice) {
    const Rational half(1, 2);
    if (kappa >= half) return {C1Variant::A1, C1Variant::B1};
    if (kappa <= -half) return {C1Variant::A2, C1Variant::B2};
    if (choice == Choice::Max) return {C1Variant::A1, C1Variant::B1};
    return {C1Variant::A2, C1Variant::B2};
}

std::vector<double> complex1_spectrum(const Rational& kappa, Sign sign, C1Variant variant,
                                      double s, std::size_t K) {
    const C1Table table = complex1_operator_table(kappa);
    const bool defined = variant == C1Variant::A1   ? table.a1.defined
                         : variant == C1Variant::A2 ? table.a2.defined
                         : variant == C1Variant::B1 ? table.b1.defined
                                                    : table.b2.defined;
    if (!defined) throw std::domain_error("complex1_spectrum: variant undefined at this kappa");

    const double kp = kappa.to_double();
    const bool plus = sign == Sign::Plus;
    std::vector<double> lambda(K);
    for (std::size_t i = 0; i < K; ++i) {
        double k;
        double value;
        switch (variant) {
            case C1Variant::A1:
                k = 2.0 * static_cast<double>(i);
                value = plus ? 2.0 * k : 2.0 * (k + 1.0 + 2.0 * kp);
                break;
            case C1Variant::A2:
                k = 2.0 * static_cast<double>(i);
                value = plus ? 2.0 * (k + 1.0 - 2.0 * kp) : 2.0 * (k + 2.0);
                break;
            case C1Variant::B1:
                k = 2.0 * static_cast<double>(i) + 1.0;
                value = plus ? 2.0 * (k + 1.0) : 2.0 * (k + 2.0 * kp);
                break;
            case C1Variant::B2:
            default:
                k = 2.0 * static_cast<double>(i) + 1.0;
                value = plus ? 2.0 * (k - 2.0 * kp) : 2.0 * (k - 1.0);
                break;
        }
        lambda[i] = value * s;
    }
    return lambda;
}

}  // namespace conelab::cx
