#include "conelab/regions.hpp"

namespace conelab::ops {

namespace {

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

bool implies(bool guard, bool conclusion) { return !guard || conclusion; }

}  // namespace

bool in_J1(const Rational& sg, const Rational& ta) {
    const Rational half_sg = sg / 2 + kQuarter;
    bool ok = true;
    // 1/2 <= tau < sigma  =>  sigma - 1 < tau < sigma/2 + 1/4
    ok &= implies(kHalf <= ta && ta < sg, sg - 1 < ta && ta < half_sg);
    // 1/2, sigma <= tau   =>  tau < sigma/2 + 1/4, sigma + 1
    ok &= implies(kHalf <= ta && sg <= ta, ta < half_sg && ta < sg + 1);
    // tau < 1/2, sigma    =>  sigma/3, sigma - 1 < tau < sigma/2 + 1/4
    ok &= implies(ta < kHalf && ta < sg, sg / 3 < ta && sg - 1 < ta && ta < half_sg);
    // sigma <= tau < 1/2  =>  -sigma < tau < sigma/2 + 1/4, sigma + 1
    ok &= implies(sg <= ta && ta < kHalf, -sg < ta && ta < half_sg && ta < sg + 1);
    return ok;
}

bool in_J2(const Rational& sg, const Rational& ta) {
    const Rational half_sg = sg / 2 + kQuarter;
    const Rational half_sg_m = sg / 2 - kQuarter;
    const Rational sm = sg - kHalf;
    bool ok = true;
    // 1/2 <= tau < sigma - 1/2  =>  sigma - 1 < tau < sigma/2 + 1/4
    ok &= implies(kHalf <= ta && ta < sm, sg - 1 < ta && ta < half_sg);
    // 1/2, sigma - 1/2 <= tau   =>  tau < sigma/2 + 1/4, sigma
    ok &= implies(kHalf <= ta && sm <= ta, ta < half_sg && ta < sg);
    // 0 < tau < 1/2, sigma - 1/2  =>
    //   (-sigma/3, sigma - 1 < tau < sigma/2 + 1/4)  or  (sigma - 1 < tau < sigma/2 - 1/4)
    ok &= implies(Rational(0) < ta && ta < kHalf && ta < sm,
                  (-(sg / 3) < ta && sg - 1 < ta && ta < half_sg) ||
                      (sg - 1 < ta && ta < half_sg_m));
    // 0 < tau < 1/2, sigma - 1/2 <= tau  =>
    //   (1 - sigma < tau < sigma/2 + 1/4, sigma)  or  (tau < sigma/2 - 1/4, sigma)
    ok &= implies(Rational(0) < ta && ta < kHalf && sm <= ta,
                  (Rational(1) - sg < ta && ta < half_sg && ta < sg) ||
                      (ta < half_sg_m && ta < sg));
    // 0 = tau < sigma - 1/2  =>  1/2 < sigma < 1
    ok &= implies(ta == Rational(0) && ta < sm, kHalf < sg && sg < Rational(1));
    // sigma - 1/2 <= tau = 0  =>  1/2 < sigma
    ok &= implies(sm <= ta && ta == Rational(0), kHalf < sg);
    // tau < 0, sigma - 1/2  =>  1/4 - sigma/2, (sigma-1)/3, sigma - 1 < tau
    ok &= implies(ta < Rational(0) && ta < sm,
                  kQuarter - sg / 2 < ta && (sg - 1) / 3 < ta && sg - 1 < ta);
    // sigma - 1/2 <= tau < 0  =>  1/4 - sigma/2, -sigma < tau < sigma
    ok &= implies(sm <= ta && ta < Rational(0),
                  kQuarter - sg / 2 < ta && -sg < ta && ta < sg);
    return ok;
}

bool in_K1(const Rational& sg, const Rational& ta, const Rational& th) {
    const Rational A = sg / 2 - Rational(3, 4);
    bool ok = true;
    // theta <= sigma-1, theta < tau+1  =>  theta > sigma/2 - 3/4, (sigma+tau)/4
    ok &= implies(th <= sg - 1 && th < ta + 1, th > A && th > (sg + ta) / 4);
    // tau+1 <= theta <= sigma-1  =>  theta > sigma/2 - 3/4, (sigma-tau)/2 - 1
    ok &= implies(ta + 1 <= th && th <= sg - 1, th > A && th > (sg - ta) / 2 - 1);
    // sigma-1 < theta < tau+1  =>  theta > sigma/2 - 3/4, (tau-sigma)/2 + 1, (sigma+tau)/4
    ok &= implies(sg - 1 < th && th < ta + 1,
                  th > A && th > (ta - sg) / 2 + 1 && th > (sg + ta) / 4);
    // sigma-1 < theta, tau+1 <= theta  =>  theta > sigma/2 - 3/4, (sigma-tau)/2 - 1; sigma+tau > 0
    ok &= implies(sg - 1 < th && ta + 1 <= th,
                  th > A && th > (sg - ta) / 2 - 1 && sg + ta > Rational(0));
    return ok;
}

bool in_K1p(const Rational& sg, const Rational& ta, const Rational& th) {
    const Rational A = ta / 2 - kQuarter;
    bool ok = true;
    // theta < sigma, theta <= tau  =>  theta > tau/2 - 1/4, (sigma+tau)/4
    ok &= implies(th < sg && th <= ta, th > A && th > (sg + ta) / 4);
    // sigma <= theta <= tau  =>  theta > tau/2 - 1/4, (tau-sigma)/2
    ok &= implies(sg <= th && th <= ta, th > A && th > (ta - sg) / 2);
    // tau < theta < sigma  =>  theta > tau/2 - 1/4, (sigma-tau)/2, (sigma+tau)/4
    ok &= implies(ta < th && th < sg, th > A && th > (sg - ta) / 2 && th > (sg + ta) / 4);
    // sigma <= theta, tau < theta  =>  theta > tau/2 - 1/4, (tau-sigma)/2; sigma+tau > 0
    ok &= implies(sg <= th && ta < th,
                  th > A && th > (ta - sg) / 2 && sg + ta > Rational(0));
    return ok;
}

bool in_K2(const Rational& sg, const Rational& ta, const Rational& th) {
    const Rational A = sg / 2 - Rational(3, 4);
    const Rational B = sg / 2 - kQuarter;
    bool ok = true;
    // theta <= sigma-1, theta < tau+1/2  =>  theta > sigma/2 - 3/4, (sigma+tau)/4
    ok &= implies(th <= sg - 1 && th < ta + kHalf, th > A && th > (sg + ta) / 4);
    // tau+1/2 <= theta <= sigma-1  =>  theta > sigma/2 - 3/4, (sigma-tau-1)/2
    ok &= implies(ta + kHalf <= th && th <= sg - 1, th > A && th > (sg - ta - 1) / 2);
    // sigma-1 < theta < sigma-1/2, tau+1/2  =>
    //   (theta > sigma/2 - 3/4, (tau-sigma)/2 + 1, (sigma+tau)/4) or
    //   (theta > sigma/2 - 1/4, (sigma+tau)/4)
    ok &= implies(sg - 1 < th && th < sg - kHalf && th < ta + kHalf,
                  (th > A && th > (ta - sg) / 2 + 1 && th > (sg + ta) / 4) ||
                      (th > B && th > (sg + ta) / 4));
    // sigma-1 < theta < sigma-1/2, tau+1/2 <= theta  =>
    //   (theta > sigma/2 - 3/4, (sigma-tau-1)/2; sigma+tau > 1) or
    //   (theta > sigma/2 - 1/4, (sigma-tau-1)/2)
    ok &= implies(sg - 1 < th && th < sg - kHalf && ta + kHalf <= th,
                  (th > A && th > (sg - ta - 1) / 2 && sg + ta > Rational(1)) ||
                      (th > B && th > (sg - ta - 1) / 2));
    // sigma-1/2 = theta < tau+1/2  =>  sigma > 1/2, (tau+2)/3
    ok &= implies(sg - kHalf == th && th < ta + kHalf, sg > kHalf && sg > (ta + 2) / 3);
    // tau+1/2 <= theta = sigma-1/2  =>  sigma > 1/2, -tau
    ok &= implies(ta + kHalf <= th && th == sg - kHalf, sg > kHalf && sg > -ta);
    // sigma-1/2 < theta < tau+1/2  =>  theta > sigma/2 - 1/4, (tau-sigma+1)/2, (sigma+tau)/4
    ok &= implies(sg - kHalf < th && th < ta + kHalf,
                  th > B && th > (ta - sg + 1) / 2 && th > (sg + ta) / 4);
    // sigma-1/2 < theta, tau+1/2 <= theta  =>  theta > sigma/2 - 1/4, (sigma-tau-1)/2; sigma+tau > 0
    ok &= implies(sg - kHalf < th && ta + kHalf <= th,
                  th > B && th > (sg - ta - 1) / 2 && sg + ta > Rational(0));
    return ok;
}

bool in_K2p(const Rational& sg, const Rational& ta, const Rational& th) {
    const Rational A = ta / 2 - kQuarter;
    const Rational B = ta / 2 + kQuarter;
    bool ok = true;
    // theta <= sigma-1/2, theta < tau  =>  theta > tau/2 - 1/4, (sigma+tau)/4
    ok &= implies(th <= sg - kHalf && th < ta, th > A && th > (sg + ta) / 4);
    // sigma-1/2 <= theta <= tau  =>  theta > tau/2 - 1/4, (tau-sigma+1)/2
    ok &= implies(sg - kHalf <= th && th <= ta, th > A && th > (ta - sg + 1) / 2);
    // tau < theta < sigma-1/2, tau+1/2  =>
    //   (theta > tau/2 - 1/4, (sigma-tau)/2, (sigma+tau)/4) or
    //   (theta > tau/2 + 1/4, (sigma+tau)/4)
    ok &= implies(ta < th && th < sg - kHalf && th < ta + kHalf,
                  (th > A && th > (sg - ta) / 2 && th > (sg + ta) / 4) ||
                      (th > B && th > (sg + ta) / 4));
    // sigma-1/2 <= theta, tau < theta < tau+1/2  =>
    //   (theta > tau/2 - 1/4, (tau-sigma+1)/2; sigma+tau > 1) or
    //   (theta > tau/2 + 1/4, (tau-sigma+1)/2)
    ok &= implies(sg - kHalf <= th && ta < th && th < ta + kHalf,
                  (th > A && th > (ta - sg + 1) / 2 && sg + ta > Rational(1)) ||
                      (th > B && th > (ta - sg + 1) / 2));
    // tau+1/2 = theta < sigma-1/2  =>  tau > -1/2, (sigma-2)/3
    ok &= implies(ta + kHalf == th && th < sg - kHalf, ta > -kHalf && ta > (sg - 2) / 3);
    // sigma-1/2 <= theta = tau+1/2  =>  tau > -1/2, -sigma
    ok &= implies(sg - kHalf <= th && th == ta + kHalf, ta > -kHalf && ta > -sg);
    // tau+1/2 < theta < sigma-1/2  =>  theta > tau/2 + 1/4, (sigma-tau-1)/2, (sigma+tau)/4
    ok &= implies(ta + kHalf < th && th < sg - kHalf,
                  th > B && th > (sg - ta - 1) / 2 && th > (sg + ta) / 4);
    // sigma-1/2 <= theta, tau+1/2 < theta  =>  theta > tau/2 + 1/4, (tau-sigma+1)/2; sigma+tau > 0
    ok &= implies(sg - kHalf <= th && ta + kHalf < th,
                  th > B && th > (ta - sg + 1) / 2 && sg + ta > Rational(0));
    return ok;
}

WwReport ww_hypotheses(const Rational& sg, const Rational& ta, const Rational& th,
                       const Rational& u) {
    if (!(sg > u - kHalf)) return {WwStatus::Violated, "sigma > u - 1/2"};
    if (!(ta > u - Rational(3, 2))) return {WwStatus::Violated, "tau > u - 3/2"};
    if (!(th > -kHalf)) return {WwStatus::Violated, "theta > -1/2"};

    if (sg == th && th == ta) return {WwStatus::NotApplicable, "sigma = theta = tau"};

    if (sg == th) {  // (a): sigma = theta != tau
        if (is_nonpositive_integer(ta - sg))
            return {WwStatus::NotApplicable, "tau - sigma in -N"};
        const bool ok = sg - 1 < ta && ta < sg + 1 && ta < sg * 2 + kHalf;
        return {ok ? WwStatus::Satisfied : WwStatus::Violated, "(a)"};
    }
    if (th == ta) {  // (b): sigma != theta = tau
        if (is_nonpositive_integer(sg - ta))
            return {WwStatus::NotApplicable, "sigma - tau in -N"};
        const bool ok = in_J1(sg, ta) || in_J2(sg, ta);
        return {ok ? WwStatus::Satisfied : WwStatus::Violated, "(b)"};
    }
    if (th == ta + 1) {  // (c): sigma != theta = tau + 1
        if (is_nonpositive_integer(sg - ta - 1))
            return {WwStatus::NotApplicable, "sigma - tau - 1 in -N"};
        const bool ok = ta < sg * Rational(3, 2) - Rational(9, 4) && ta < sg - Rational(5, 3);
        return {ok ? WwStatus::Satisfied : WwStatus::Violated, "(c)"};
    }
    // (d): sigma != theta != tau
    if (is_nonpositive_integer(sg - th))
        return {WwStatus::NotApplicable, "sigma - theta in -N"};
    if (is_nonpositive_integer(ta - th))
        return {WwStatus::NotApplicable, "tau - theta in -N"};
    const bool ok =
        (in_K1(sg, ta, th) || in_K2(sg, ta, th)) && (in_K1p(sg, ta, th) || in_K2p(sg, ta, th));
    return {ok ? WwStatus::Satisfied : WwStatus::Violated, "(d)"};
}

}  // namespace conelab::ops
