#pragma once

// The two explicit error bounds on |scaled window mass - integral of F|:
// the headline bound stated with max{n1, n3}, and the refined bound with
// the sharper Lipschitz constant. Both are exact rationals; verify_bound
// also evaluates the actual discrepancy.

#include "factorlen/enumeration.hpp"
#include "factorlen/geometry.hpp"

namespace factorlen {

struct BoundInputs {
    i64 n;
    Rat alpha, beta;
    i128 d;
    Rat C1;  // 1 / (n2 rho2), the sup of the normalized segment length
    Rat C2;  // (1/rho2) max{n3/rho1, n1/rho3}, the Lipschitz constant
};

inline BoundInputs bound_inputs(const WeightSystem& ws, const DirectionData& dd,
                                i64 n, const Rat& alpha, const Rat& beta) {
    BoundInputs bi;
    bi.n = n;
    bi.alpha = alpha;
    bi.beta = beta;
    bi.d = dd.d;
    bi.C1 = Rat(1, checked_mul(ws.n2(), dd.rho2));
    // A vanishing rho drops its term from the max (that side of the
    // triangle is degenerate and contributes no slope).
    if (dd.rho1 == 0) {
        bi.C2 = Rat(ws.n1(), checked_mul(dd.rho2, dd.rho3));
    } else if (dd.rho3 == 0) {
        bi.C2 = Rat(ws.n3(), checked_mul(dd.rho2, dd.rho1));
    } else {
        bi.C2 = max(Rat(ws.n3(), dd.rho1), Rat(ws.n1(), dd.rho3)) / Rat(dd.rho2);
    }
    return bi;
}

// (2 n1 n2 n3 / n) [ 5d/n2 + 2d/n + (beta - alpha + 2d/n)(1 + d max{n1, n3}) ]
inline Rat theorem_bound(const WeightSystem& ws, const DirectionData& dd, i64 n,
                         const Rat& alpha, const Rat& beta) {
    if (n <= 0) throw Error(Errc::BadInput, "bound requires n > 0");
    if (!(alpha < beta)) throw Error(Errc::BadInput, "bound requires alpha < beta");
    Rat nr(n);
    Rat d(dd.d);
    Rat two_d_over_n = Rat(2) * d / nr;
    Rat max_n = Rat(ws.n1() > ws.n3() ? ws.n1() : ws.n3());
    Rat bracket = Rat(5) * d / Rat(ws.n2()) + two_d_over_n +
                  (beta - alpha + two_d_over_n) * (Rat(1) + d * max_n);
    return Rat(checked_mul(2, ws.generator_product())) / nr * bracket;
}

// (2 n1 n2 n3 / n) [ (beta - alpha + 2d/n)(1 + d C2) + d (5 C1 + 2/n) ]
inline Rat refined_bound(const WeightSystem& ws, const DirectionData& dd, i64 n,
                         const Rat& alpha, const Rat& beta) {
    if (n <= 0) throw Error(Errc::BadInput, "bound requires n > 0");
    if (!(alpha < beta)) throw Error(Errc::BadInput, "bound requires alpha < beta");
    BoundInputs bi = bound_inputs(ws, dd, n, alpha, beta);
    Rat nr(n);
    Rat d(dd.d);
    Rat two_d_over_n = Rat(2) * d / nr;
    Rat bracket = (beta - alpha + two_d_over_n) * (Rat(1) + d * bi.C2) +
                  d * (Rat(5) * bi.C1 + Rat(2) / nr);
    return Rat(checked_mul(2, ws.generator_product())) / nr * bracket;
}

struct BoundReport {
    i64 n;
    Rat alpha, beta;     // after clipping to the support
    i128 window_count;   // |Lambda[[n]] cap [alpha n, beta n]|
    Rat scaled_mass;     // window_count / (n^2 / (2 n1 n2 n3))
    Rat integral;        // exact integral of F over [alpha, beta]
    Rat error;           // |scaled_mass - integral|
    Rat theorem_bound;
    Rat refined_bound;
    bool theorem_pass;
    bool refined_pass;
};

// Clips [alpha, beta] to the support [t3, t1] (both the mass and the
// integral are unchanged by this) and evaluates everything exactly.
inline BoundReport verify_bound(const WeightSystem& ws, const DirectionData& dd,
                                i64 n, const Rat& alpha, const Rat& beta) {
    if (n <= 0) throw Error(Errc::BadInput, "bound verification requires n > 0");
    if (!(alpha < beta)) throw Error(Errc::BadInput, "bound requires alpha < beta");
    Rat a = max(alpha, ws.t3());
    Rat b = min(beta, ws.t1());
    bool disjoint = a > b;

    BoundReport r;
    r.n = n;
    r.alpha = disjoint ? alpha : a;
    r.beta = disjoint ? beta : b;
    r.window_count =
        disjoint ? 0
                 : count_values_in_range(ws, n, (a * Rat(n)).ceil(), (b * Rat(n)).floor());
    Rat denom = Rat(checked_mul(static_cast<i128>(n), static_cast<i128>(n)),
                    checked_mul(2, ws.generator_product()));
    r.scaled_mass = Rat(r.window_count) / denom;
    r.integral = (!disjoint && a < b) ? integrate_F(ws, a, b) : Rat(0);
    r.error = (r.scaled_mass - r.integral).abs();
    // If clipping collapsed the window to a point (which can still carry
    // the mass of a single value class), evaluate the bounds on the
    // original span; that keeps alpha < beta and only enlarges them.
    bool degenerate = disjoint || !(a < b);
    Rat ba = degenerate ? alpha : a;
    Rat bb = degenerate ? beta : b;
    r.theorem_bound = theorem_bound(ws, dd, n, ba, bb);
    r.refined_bound = refined_bound(ws, dd, n, ba, bb);
    r.theorem_pass = r.error <= r.theorem_bound;
    r.refined_pass = r.error <= r.refined_bound;
    return r;
}

}  // namespace factorlen
