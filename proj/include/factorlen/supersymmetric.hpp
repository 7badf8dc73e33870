#pragma once

// Supersymmetric semigroups <ab, ac, bc> carry two weightings, (b,a,c) and
// (a,c,b), whose weighted-length histograms are exact translates of each
// other. The offset r_n comes from the unique "small" part of the
// decomposition n = q*abc + r and is periodic in n with period abc.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factorlen/enumeration.hpp"

namespace factorlen {

struct SupersymmetricSystem {
    i64 a, b, c;
    Triple gens;  // (ab, ac, bc)
    Triple m1;    // (b, a, c)
    Triple m2;    // (a, c, b)
    i64 abc;
};

inline SupersymmetricSystem make_supersymmetric(i64 a, i64 b, i64 c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw Error(Errc::NonPositiveGenerator, "a, b, c must be positive");
    if (a == b || b == c || a == c)
        throw Error(Errc::GeneratorsNotDistinct, "a, b, c must be distinct");
    SupersymmetricSystem s;
    s.a = a;
    s.b = b;
    s.c = c;
    i128 ab = checked_mul(i128{a}, b), ac = checked_mul(i128{a}, c),
         bc = checked_mul(i128{b}, c);
    i128 abc = checked_mul(ab, c);
    if (abc > std::numeric_limits<i64>::max()) throw_overflow("make_supersymmetric");
    s.gens = {static_cast<i64>(ab), static_cast<i64>(ac), static_cast<i64>(bc)};
    s.m1 = {b, a, c};
    s.m2 = {a, c, b};
    s.abc = static_cast<i64>(abc);
    return s;
}

// Membership in <n1, n2, n3> by bounded double loop; negatives are not
// elements.
inline bool is_element(const Triple& gens, i64 n) {
    if (n < 0) return false;
    bool found = false;
    for_each_factorization(gens, n, [&](const Factorization&) { found = true; });
    return found;
}

struct Decomposition {
    i64 q;
    i64 r;            // r in S with r - abc not in S
    Factorization x;  // the unique factorization of r
};

// n = q*abc + r with r in S and r - abc not in S; the structure of
// supersymmetric semigroups makes this decomposition unique and gives
// |Z_S(r)| = 1. Both facts are asserted, not assumed.
inline Decomposition decompose(const SupersymmetricSystem& sys, i64 n) {
    if (!is_element(sys.gens, n))
        throw Error(Errc::NotInSemigroup,
                    std::to_string(n) + " is not an element of the semigroup");
    std::optional<Decomposition> found;
    for (i64 q = n / sys.abc; q >= 0; --q) {
        i64 r = n - q * sys.abc;
        if (!is_element(sys.gens, r) || is_element(sys.gens, r - sys.abc)) continue;
        std::vector<Factorization> zs;
        for_each_factorization(sys.gens, r,
                               [&](const Factorization& x) { zs.push_back(x); });
        if (zs.size() != 1)
            throw std::logic_error("supersymmetric residue is not uniquely factorable");
        if (found) throw std::logic_error("supersymmetric decomposition is not unique");
        found = Decomposition{q, r, zs[0]};
    }
    if (!found) throw std::logic_error("no admissible supersymmetric decomposition");
    return *found;
}

// r_n = (m2 - m1) . x for the unique factorization x of the residue part.
inline i64 translation_offset(const SupersymmetricSystem& sys, i64 n) {
    Decomposition dec = decompose(sys, n);
    std::array<i64, 3> x{dec.x.x1, dec.x.x2, dec.x.x3};
    i64 off = 0;
    for (int i = 0; i < 3; ++i) off += (sys.m2[i] - sys.m1[i]) * x[i];
    return off;
}

namespace detail {

inline std::map<i64, u64> weighted_histogram(const Triple& m, const Triple& gens,
                                             i64 n) {
    std::map<i64, u64> h;
    for_each_factorization(gens, n, [&](const Factorization& x) {
        ++h[m[0] * x.x1 + m[1] * x.x2 + m[2] * x.x3];
    });
    return h;
}

}  // namespace detail

// Brute-force check of |Z_1(m, n)| == |Z_2(m + r_n, n)| for every m.
inline bool verify_translation(const SupersymmetricSystem& sys, i64 n) {
    i64 offset = translation_offset(sys, n);
    std::map<i64, u64> h1 = detail::weighted_histogram(sys.m1, sys.gens, n);
    std::map<i64, u64> h2 = detail::weighted_histogram(sys.m2, sys.gens, n);
    if (h1.size() != h2.size()) return false;
    for (const auto& [m, count] : h1) {
        auto it = h2.find(m + offset);
        if (it == h2.end() || it->second != count) return false;
    }
    return true;
}

// Alignment of a permuted supersymmetric instance with the canonical order:
// a coordinate permutation sending the generators to (ab, ac, bc) and the
// weights to (b,a,c) or (a,c,b). Histograms are invariant under the
// simultaneous permutation, so results transfer verbatim.
struct CanonicalizedSupersymmetric {
    SupersymmetricSystem sys;
    std::array<int, 3> perm;  // canonical position i holds input position perm[i]
    int weighting;            // 1 if the weights matched m1, 2 if m2
};

inline std::optional<CanonicalizedSupersymmetric> canonicalize_supersymmetric(
    const Triple& m, const Triple& n) {
    for (int i = 0; i < 3; ++i)
        if (n[i] <= 0) return std::nullopt;
    i128 prod = checked_mul(checked_mul(i128{n[0]}, n[1]), n[2]);
    // abc = sqrt(n1 n2 n3) must be an exact integer.
    i128 root = static_cast<i128>(std::sqrt(static_cast<double>(prod)));
    while (root > 0 && checked_mul(root, root) > prod) --root;
    while (checked_mul(root + 1, root + 1) <= prod) ++root;
    if (checked_mul(root, root) != prod) return std::nullopt;

    std::array<int, 3> perm{0, 1, 2};
    do {
        Triple g{n[perm[0]], n[perm[1]], n[perm[2]]};
        if (root % g[0] != 0 || root % g[1] != 0 || root % g[2] != 0) continue;
        i64 c = static_cast<i64>(root / g[0]);  // g0 = ab
        i64 b = static_cast<i64>(root / g[1]);  // g1 = ac
        i64 a = static_cast<i64>(root / g[2]);  // g2 = bc
        if (a == b || b == c || a == c) continue;
        if (i128{a} * b != g[0] || i128{a} * c != g[1] || i128{b} * c != g[2]) continue;
        Triple mp{m[perm[0]], m[perm[1]], m[perm[2]]};
        SupersymmetricSystem sys = make_supersymmetric(a, b, c);
        if (mp == sys.m1)
            return CanonicalizedSupersymmetric{sys, perm, 1};
        if (mp == sys.m2)
            return CanonicalizedSupersymmetric{sys, perm, 2};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace factorlen
