#pragma once

// Problem instances: a weight triple m paired with a generator triple n,
// hypothesis validation, the rho-triple / primitive direction of the kernel
// line, residue classes of attainable weighted lengths, and explicit integer
// solutions of the 2x3 system via Bezout constructions.

#include <array>
#include <optional>
#include <string>

#include "factorlen/int128.hpp"
#include "factorlen/rational.hpp"

namespace factorlen {

using Triple = std::array<i64, 3>;

class WeightSystem {
public:
    // Ratio ordering m3/n3 <= m2/n2 <= m1/n1 with at least one strict
    // inequality, checked by integer cross-multiplication. theorem_mode
    // additionally requires distinct generators with gcd 1.
    static WeightSystem validate(const Triple& m, const Triple& n, bool theorem_mode) {
        for (int i = 0; i < 3; ++i)
            if (n[i] <= 0)
                throw Error(Errc::NonPositiveGenerator,
                            "generator n" + std::to_string(i + 1) + " = " +
                                std::to_string(n[i]) + " is not positive");
        Ivec3 mv{m[0], m[1], m[2]};
        Ivec3 nv{n[0], n[1], n[2]};
        i128 rho1 = checked_sub(checked_mul(mv[1], nv[2]), checked_mul(mv[2], nv[1]));
        i128 rho3 = checked_sub(checked_mul(mv[0], nv[1]), checked_mul(mv[1], nv[0]));
        if (rho1 < 0)
            throw Error(Errc::RatioOrderViolated,
                        "ratio order violated: m3/n3 > m2/n2 (weights must pair with "
                        "generators so the ratios weakly decrease)");
        if (rho3 < 0)
            throw Error(Errc::RatioOrderViolated,
                        "ratio order violated: m2/n2 > m1/n1 (weights must pair with "
                        "generators so the ratios weakly decrease)");
        if (rho1 == 0 && rho3 == 0)
            throw Error(Errc::AllRatiosEqual,
                        "all three ratios m_i/n_i are equal; at least one inequality "
                        "must be strict");
        if (theorem_mode) {
            if (n[0] == n[1] || n[1] == n[2] || n[0] == n[2])
                throw Error(Errc::GeneratorsNotDistinct,
                            "theorem mode requires pairwise distinct generators");
            if (gcd_i128(gcd_i128(nv[0], nv[1]), nv[2]) != 1)
                throw Error(Errc::GeneratorsNotCoprime,
                            "theorem mode requires gcd(n1,n2,n3) = 1");
        }
        return WeightSystem(mv, nv, theorem_mode);
    }

    const Ivec3& m() const { return m_; }
    const Ivec3& n() const { return n_; }
    i128 m1() const { return m_[0]; }
    i128 m2() const { return m_[1]; }
    i128 m3() const { return m_[2]; }
    i128 n1() const { return n_[0]; }
    i128 n2() const { return n_[1]; }
    i128 n3() const { return n_[2]; }
    bool theorem_mode() const { return theorem_mode_; }

    bool generators_coprime() const {
        return gcd_i128(gcd_i128(n_[0], n_[1]), n_[2]) == 1;
    }

    // Support breakpoints of the limit density, ascending: t3 <= t2 <= t1.
    Rat t1() const { return Rat(m_[0], n_[0]); }
    Rat t2() const { return Rat(m_[1], n_[1]); }
    Rat t3() const { return Rat(m_[2], n_[2]); }

    i128 generator_product() const {
        return checked_mul(checked_mul(n_[0], n_[1]), n_[2]);
    }

private:
    WeightSystem(const Ivec3& m, const Ivec3& n, bool theorem_mode)
        : m_(m), n_(n), theorem_mode_(theorem_mode) {}

    Ivec3 m_;
    Ivec3 n_;
    bool theorem_mode_;
};

inline WeightSystem validate(const Triple& m, const Triple& n, bool theorem_mode = true) {
    return WeightSystem::validate(m, n, theorem_mode);
}

// The three 2x2 minors of [m; n], the kernel direction r = m x n and its
// primitive form r/d. rho2 > 0 for every validated instance.
struct DirectionData {
    i128 rho1, rho2, rho3;
    i128 d;            // gcd(rho1, rho2, rho3)
    Ivec3 r;           // (rho1, -rho2, rho3) = m x n
    Ivec3 r_primitive; // r / d
};

inline DirectionData direction_data(const WeightSystem& ws) {
    const Ivec3& m = ws.m();
    const Ivec3& n = ws.n();
    Ivec3 r = cross(m, n);
    DirectionData dd;
    dd.rho1 = r[0];
    dd.rho2 = checked_neg(r[1]);
    dd.rho3 = r[2];
    dd.d = gcd_i128(gcd_i128(dd.rho1, dd.rho2), dd.rho3);
    dd.r = r;
    dd.r_primitive = {r[0] / dd.d, r[1] / dd.d, r[2] / dd.d};
    return dd;
}

namespace detail {

inline void require_coprime(const WeightSystem& ws) {
    if (!ws.generators_coprime())
        throw Error(Errc::GeneratorsNotCoprime, "operation requires gcd(n1,n2,n3) = 1");
}

// a with a . n == 1, via two extended-gcd steps.
inline Ivec3 bezout_for_generators(const Ivec3& n) {
    ExtGcd e12 = ext_gcd(n[0], n[1]);
    ExtGcd e = ext_gcd(e12.g, n[2]);
    Ivec3 a{checked_mul(e.x, e12.x), checked_mul(e.x, e12.y), e.y};
    return a;
}

// v with r . v == d where r = (rho1, -rho2, rho3).
inline Ivec3 bezout_for_direction(const DirectionData& dd) {
    ExtGcd e12 = ext_gcd(dd.rho1, dd.rho2);
    ExtGcd e = ext_gcd(e12.g, dd.rho3);
    Ivec3 v{checked_mul(e.x, e12.x), checked_neg(checked_mul(e.x, e12.y)), e.y};
    return v;
}

}  // namespace detail

struct ResidueClass {
    i128 n;
    i128 c;  // least nonnegative residue, in [0, d)
    i128 d;
};

// The residue c such that integer solutions of A.z = (m, n) exist exactly
// when m == c (mod d): c = ((a.m) * n) mod d for any a with a.n = 1.
inline ResidueClass residue_class(const WeightSystem& ws, const DirectionData& dd,
                                  i128 n) {
    detail::require_coprime(ws);
    if (dd.d == 1) return {n, 0, 1};
    Ivec3 a = detail::bezout_for_generators(ws.n());
    i128 c = mod_nonneg(checked_mul(dot(a, ws.m()), n), dd.d);
    return {n, c, dd.d};
}

struct IntegerPointWitness {
    Ivec3 z;  // A.z = (m, n)
    Ivec3 v;  // r . v = d
    Ivec3 w;  // n x v; satisfies n.w = 0, m.w = d
};

// Explicit integer (possibly negative) solution of m.z = m_target,
// n.z = n_target, or nullopt when m_target is in the wrong residue class.
inline std::optional<IntegerPointWitness> integer_point(const WeightSystem& ws,
                                                        const DirectionData& dd,
                                                        i128 m_target, i128 n_target) {
    detail::require_coprime(ws);
    Ivec3 a = detail::bezout_for_generators(ws.n());
    Ivec3 z0 = scale(n_target, a);  // n . z0 = n_target
    i128 s = dot(ws.m(), z0);
    i128 diff = checked_sub(m_target, s);
    if (mod_nonneg(diff, dd.d) != 0) return std::nullopt;
    Ivec3 v = detail::bezout_for_direction(dd);
    Ivec3 w = cross(ws.n(), v);
    Ivec3 z = add(z0, scale(diff / dd.d, w));
    return IntegerPointWitness{z, v, w};
}

}  // namespace factorlen
