#pragma once

// Checked 128-bit signed integer arithmetic. Every operation that could
// wrap throws Error{Errc::Overflow}; nothing in the library is allowed to
// wrap silently.

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace factorlen {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

enum class Errc {
    NonPositiveGenerator,
    RatioOrderViolated,
    AllRatiosEqual,
    GeneratorsNotCoprime,
    GeneratorsNotDistinct,
    NotInSemigroup,
    EmptyMultiset,
    Overflow,
    ZeroDenominator,
    BadInput,
    Resource,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

    // Input/hypothesis problems (CLI exit 2) versus runtime failures (exit 1).
    bool is_validation() const {
        switch (code_) {
        case Errc::Overflow:
        case Errc::ZeroDenominator:
        case Errc::Resource:
            return false;
        default:
            return true;
        }
    }

private:
    Errc code_;
};

inline constexpr i128 i128_max() {
    return static_cast<i128>((static_cast<unsigned __int128>(1) << 127) - 1);
}
inline constexpr i128 i128_min() { return -i128_max() - 1; }

[[noreturn]] inline void throw_overflow(const char* op) {
    throw Error(Errc::Overflow, std::string("128-bit integer overflow in ") + op);
}

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("addition");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow("subtraction");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("multiplication");
    return r;
}

inline i128 checked_neg(i128 a) {
    if (a == i128_min()) throw_overflow("negation");
    return -a;
}

inline i128 checked_abs(i128 a) { return a < 0 ? checked_neg(a) : a; }

inline i128 gcd_i128(i128 a, i128 b) {
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Floor/ceil division; b must be nonzero.
inline i128 floor_div(i128 a, i128 b) {
    if (b == 0) throw Error(Errc::ZeroDenominator, "division by zero");
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b) {
    if (b == 0) throw Error(Errc::ZeroDenominator, "division by zero");
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

// Least nonnegative residue of a modulo m (m > 0).
inline i128 mod_nonneg(i128 a, i128 m) {
    i128 r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    char buf[48];
    int pos = 48;
    while (u > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string s(buf + pos, buf + 48);
    return neg ? "-" + s : s;
}

inline i128 parse_i128(std::string_view s) {
    if (s.empty()) throw Error(Errc::BadInput, "empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) throw Error(Errc::BadInput, "sign without digits");
    i128 v = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9')
            throw Error(Errc::BadInput, "invalid integer literal: " + std::string(s));
        v = checked_add(checked_mul(v, 10), neg ? -(c - '0') : (c - '0'));
    }
    return v;
}

// Extended Euclid: g = gcd(a,b) >= 0 with a*x + b*y == g. The iteration
// yields the standard minimal-magnitude coefficient pair.
struct ExtGcd {
    i128 g, x, y;
};

inline ExtGcd ext_gcd(i128 a, i128 b) {
    i128 old_r = a, r = b;
    i128 old_s = 1, s = 0;
    i128 old_t = 0, t = 1;
    while (r != 0) {
        i128 q = old_r / r;
        i128 tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_s = checked_neg(old_s);
        old_t = checked_neg(old_t);
    }
    return {old_r, old_s, old_t};
}

// Integer triples with exact dot/cross products.
struct Ivec3 {
    i128 v[3];

    i128 operator[](int i) const { return v[i]; }
    i128& operator[](int i) { return v[i]; }

    bool operator==(const Ivec3& o) const {
        return v[0] == o.v[0] && v[1] == o.v[1] && v[2] == o.v[2];
    }
};

inline i128 dot(const Ivec3& a, const Ivec3& b) {
    i128 acc = 0;
    for (int i = 0; i < 3; ++i) acc = checked_add(acc, checked_mul(a.v[i], b.v[i]));
    return acc;
}

inline Ivec3 cross(const Ivec3& a, const Ivec3& b) {
    return {checked_sub(checked_mul(a.v[1], b.v[2]), checked_mul(a.v[2], b.v[1])),
            checked_sub(checked_mul(a.v[2], b.v[0]), checked_mul(a.v[0], b.v[2])),
            checked_sub(checked_mul(a.v[0], b.v[1]), checked_mul(a.v[1], b.v[0]))};
}

inline Ivec3 add(const Ivec3& a, const Ivec3& b) {
    return {checked_add(a.v[0], b.v[0]), checked_add(a.v[1], b.v[1]),
            checked_add(a.v[2], b.v[2])};
}

inline Ivec3 scale(i128 k, const Ivec3& a) {
    return {checked_mul(k, a.v[0]), checked_mul(k, a.v[1]), checked_mul(k, a.v[2])};
}

}  // namespace factorlen
