#pragma once

// Cross-section geometry of the simplex {x >= 0 : n.x = 1} cut by the
// weight plane m.x = t: segment endpoints on the coordinate planes, the
// normalized segment length, the triangular limit density F, and exact
// closed-form integrals of F. The euclidean norm of the direction vector
// cancels out of every formula here, so the whole module stays rational.

#include <optional>

#include "factorlen/semigroup.hpp"

namespace factorlen {

// Piecewise description of F: support [t3, t1], peak at t2, linear on each
// side. A vanishing rho collapses the corresponding side to a jump.
struct TriangleDensity {
    Rat t3, t2, t1;                 // breakpoints, ascending
    Rat scale;                      // 2 n1 n2 n3 / rho2
    i128 mid_n;                     // n2
    i128 left_n, left_m, left_rho;  // slope data (n3, m3, rho1) for [t3, t2]
    i128 right_n, right_m, right_rho;  // (n1, m1, rho3) for [t2, t1]
    bool degenerate_left;           // rho1 == 0, i.e. t3 == t2
    bool degenerate_right;          // rho3 == 0, i.e. t2 == t1

    // F(t2) = 2 n1 n2 n3 / (n2 rho2)
    Rat peak_value() const { return scale / Rat(mid_n); }
};

inline TriangleDensity make_density(const WeightSystem& ws) {
    DirectionData dd = direction_data(ws);
    TriangleDensity td;
    td.t3 = ws.t3();
    td.t2 = ws.t2();
    td.t1 = ws.t1();
    td.scale = Rat(checked_mul(2, ws.generator_product()), dd.rho2);
    td.mid_n = ws.n2();
    td.left_n = ws.n3();
    td.left_m = ws.m3();
    td.left_rho = dd.rho1;
    td.right_n = ws.n1();
    td.right_m = ws.m1();
    td.right_rho = dd.rho3;
    td.degenerate_left = (dd.rho1 == 0);
    td.degenerate_right = (dd.rho3 == 0);
    return td;
}

struct SegmentEndpoint {
    Rvec3 p;
    bool valid;  // lies in the nonnegative octant
};

// Intersections of the line {m.x = t, n.x = 1} with the three coordinate
// planes. p1 (resp. p3) is undefined when rho1 = 0 (resp. rho3 = 0).
struct SegmentEndpoints {
    std::optional<SegmentEndpoint> p1;  // x1 = 0 plane, valid iff t in [t3, t2]
    std::optional<SegmentEndpoint> p2;  // x2 = 0 plane, valid iff t in [t3, t1]
    std::optional<SegmentEndpoint> p3;  // x3 = 0 plane, valid iff t in [t2, t1]
};

inline SegmentEndpoints segment_endpoints(const WeightSystem& ws, const Rat& t) {
    DirectionData dd = direction_data(ws);
    SegmentEndpoints out;
    Rat m1(ws.m1()), m2(ws.m2()), m3(ws.m3());
    Rat n1(ws.n1()), n2(ws.n2()), n3(ws.n3());
    if (dd.rho1 != 0) {
        Rat inv(1, dd.rho1);
        Rvec3 p{Rat(0), (n3 * t - m3) * inv, (m2 - n2 * t) * inv};
        out.p1 = SegmentEndpoint{p, ws.t3() <= t && t <= ws.t2()};
    }
    {
        Rat inv(1, dd.rho2);
        Rvec3 p{(n3 * t - m3) * inv, Rat(0), (m1 - n1 * t) * inv};
        out.p2 = SegmentEndpoint{p, ws.t3() <= t && t <= ws.t1()};
    }
    if (dd.rho3 != 0) {
        Rat inv(1, dd.rho3);
        Rvec3 p{(n2 * t - m2) * inv, (m1 - n1 * t) * inv, Rat(0)};
        out.p3 = SegmentEndpoint{p, ws.t2() <= t && t <= ws.t1()};
    }
    return out;
}

// ell(t,1) / |r| as an exact rational: (n3 t - m3)/(rho1 rho2) on [t3, t2],
// (m1 - n1 t)/(rho2 rho3) on [t2, t1], 0 outside the support. On a
// degenerate side the surviving branch handles the single jump point.
inline Rat normalized_segment_length(const WeightSystem& ws, const DirectionData& dd,
                                     const Rat& t) {
    if (dd.rho1 != 0 && ws.t3() <= t && t <= ws.t2()) {
        Rat num = Rat(ws.n3()) * t - Rat(ws.m3());
        return num / Rat(checked_mul(dd.rho1, dd.rho2));
    }
    if (dd.rho3 != 0 && ws.t2() <= t && t <= ws.t1()) {
        Rat num = Rat(ws.m1()) - Rat(ws.n1()) * t;
        return num / Rat(checked_mul(dd.rho2, dd.rho3));
    }
    return Rat(0);
}

inline Rat density_F(const WeightSystem& ws, const Rat& t) {
    DirectionData dd = direction_data(ws);
    return Rat(checked_mul(2, ws.generator_product())) *
           normalized_segment_length(ws, dd, t);
}

// Exact integral of F over [alpha, beta]: clip to each linear piece and
// integrate as a difference of squares.
inline Rat integrate_F(const WeightSystem& ws, const Rat& alpha, const Rat& beta) {
    if (beta < alpha)
        throw Error(Errc::BadInput, "integrate_F requires alpha <= beta");
    DirectionData dd = direction_data(ws);
    i128 two_prod = checked_mul(2, ws.generator_product());
    Rat total(0);
    if (dd.rho1 != 0) {
        Rat a = max(alpha, ws.t3());
        Rat b = min(beta, ws.t2());
        if (a < b) {
            Rat fa = Rat(ws.n3()) * a - Rat(ws.m3());
            Rat fb = Rat(ws.n3()) * b - Rat(ws.m3());
            total += Rat(two_prod) * (fb * fb - fa * fa) /
                     Rat(checked_mul(checked_mul(dd.rho1, dd.rho2),
                                     checked_mul(2, ws.n3())));
        }
    }
    if (dd.rho3 != 0) {
        Rat a = max(alpha, ws.t2());
        Rat b = min(beta, ws.t1());
        if (a < b) {
            Rat fa = Rat(ws.m1()) - Rat(ws.n1()) * a;
            Rat fb = Rat(ws.m1()) - Rat(ws.n1()) * b;
            total += Rat(two_prod) * (fa * fa - fb * fb) /
                     Rat(checked_mul(checked_mul(dd.rho2, dd.rho3),
                                     checked_mul(2, ws.n1())));
        }
    }
    return total;
}

}  // namespace factorlen
