#pragma once

// Exact rational arithmetic over checked 128-bit integers. Values are kept
// normalized: positive denominator, gcd(|num|, den) == 1.

#include <cmath>
#include <string>
#include <string_view>

#include "factorlen/int128.hpp"

namespace factorlen {

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(i128 n) : num_(n), den_(1) {}  // NOLINT: implicit integer promotion wanted
    Rat(int n) : num_(n), den_(1) {}   // NOLINT
    Rat(i64 n) : num_(n), den_(1) {}   // NOLINT

    Rat(i128 num, i128 den) : num_(num), den_(den) { normalize(); }

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const { return Rat(checked_neg(num_), den_, already_normal{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        // a/b + c/d with the shared factor of the denominators pulled out.
        i128 g = gcd_i128(a.den_, b.den_);
        i128 bd = a.den_ / g;
        i128 num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, bd));
        return Rat(num, checked_mul(bd, b.den_));
    }

    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

    friend Rat operator*(const Rat& a, const Rat& b) {
        i128 g1 = gcd_i128(a.num_, b.den_);
        i128 g2 = gcd_i128(b.num_, a.den_);
        return Rat(checked_mul(a.num_ / g1, b.num_ / g2),
                   checked_mul(a.den_ / g2, b.den_ / g1), already_normal{});
    }

    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw Error(Errc::ZeroDenominator, "rational division by zero");
        return a * Rat(b.den_, b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    i128 floor() const { return floor_div(num_, den_); }
    i128 ceil() const { return ceil_div(num_, den_); }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) /
                                   static_cast<long double>(den_));
    }

    // Exact conversion from a finite double (the binary value, not its
    // decimal rendering). Throws on values whose scale exceeds 128 bits.
    static Rat from_double(double x) {
        if (!std::isfinite(x)) throw Error(Errc::BadInput, "non-finite value");
        int exp = 0;
        double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5,1)
        i128 num = static_cast<i128>(std::ldexp(mant, 53));
        exp -= 53;
        if (exp >= 0) {
            if (exp > 72) throw_overflow("from_double");
            return Rat(checked_mul(num, i128{1} << exp), 1);
        }
        if (exp < -120) throw_overflow("from_double");
        return Rat(num, i128{1} << (-exp));
    }

    // Accepts "p/q", plain integers, and decimal strings ("7.1" -> 71/10).
    static Rat from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash != std::string_view::npos) {
            i128 p = parse_i128(s.substr(0, slash));
            i128 q = parse_i128(s.substr(slash + 1));
            if (q == 0) throw Error(Errc::BadInput, "zero denominator: " + std::string(s));
            return Rat(p, q);
        }
        auto point = s.find('.');
        if (point == std::string_view::npos) return Rat(parse_i128(s), 1);
        std::string_view head = s.substr(0, point);
        std::string_view frac = s.substr(point + 1);
        if (frac.empty()) return Rat(parse_i128(head), 1);
        std::string digits(head);
        digits.append(frac);  // sign stays attached to the leading digits
        i128 scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale = checked_mul(scale, 10);
        return Rat(parse_i128(digits), scale);
    }

    std::string to_fraction_string() const {
        return to_string_i128(num_) + "/" + to_string_i128(den_);
    }

    // Fixed-point decimal rendering with round-half-to-even.
    std::string to_decimal_string(int places) const {
        i128 scale = 1;
        for (int i = 0; i < places; ++i) scale = checked_mul(scale, 10);
        i128 t = checked_mul(checked_abs(num_), scale);
        i128 q = t / den_;
        i128 r2 = checked_mul(t % den_, 2);
        if (r2 > den_ || (r2 == den_ && (q % 2) != 0)) ++q;
        std::string digits = to_string_i128(q);
        std::string out;
        if (num_ < 0 && q != 0) out += '-';
        if (static_cast<int>(digits.size()) <= places) {
            out += "0.";
            out.append(places - digits.size(), '0');
            out += digits;
        } else if (places == 0) {
            out += digits;
        } else {
            out += digits.substr(0, digits.size() - places);
            out += '.';
            out += digits.substr(digits.size() - places);
        }
        return out;
    }

private:
    struct already_normal {};
    Rat(i128 num, i128 den, already_normal) : num_(num), den_(den) {}

    void normalize() {
        if (den_ == 0) throw Error(Errc::ZeroDenominator, "zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        i128 g = gcd_i128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    i128 num_;
    i128 den_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

struct Rvec3 {
    Rat v[3];
    Rat operator[](int i) const { return v[i]; }
    bool operator==(const Rvec3& o) const {
        return v[0] == o.v[0] && v[1] == o.v[1] && v[2] == o.v[2];
    }
};

inline Rat dot(const Ivec3& a, const Rvec3& b) {
    Rat acc = 0;
    for (int i = 0; i < 3; ++i) acc += Rat(a[i]) * b.v[i];
    return acc;
}

}  // namespace factorlen
