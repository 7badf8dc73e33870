#pragma once

// Exact computation of factorization sets, the weighted-length multiset,
// per-value counts |Z(m,n)| by the lattice-segment method, and windowed
// counts. The segment method and the brute-force enumeration are kept as
// independent routes; tests hold them against each other.

#include <optional>
#include <vector>

#include "factorlen/semigroup.hpp"

namespace factorlen {

struct Factorization {
    i64 x1, x2, x3;
    bool operator==(const Factorization& o) const {
        return x1 == o.x1 && x2 == o.x2 && x3 == o.x3;
    }
};

// Canonical enumeration order: x3 outer, x2 inner, x1 from the remainder
// divisibility test.
template <typename Fn>
void for_each_factorization(const Triple& gens, i64 n, Fn&& fn) {
    if (n < 0) return;
    const i64 n1 = gens[0], n2 = gens[1], n3 = gens[2];
    for (i64 x3 = 0; x3 <= n / n3; ++x3) {
        const i64 rem3 = n - n3 * x3;
        for (i64 x2 = 0; x2 <= rem3 / n2; ++x2) {
            const i64 rem = rem3 - n2 * x2;
            if (rem % n1 == 0) fn(Factorization{rem / n1, x2, x3});
        }
    }
}

inline Triple generator_triple(const WeightSystem& ws) {
    return {static_cast<i64>(ws.n1()), static_cast<i64>(ws.n2()),
            static_cast<i64>(ws.n3())};
}

template <typename Fn>
void for_each_factorization(const WeightSystem& ws, i64 n, Fn&& fn) {
    for_each_factorization(generator_triple(ws), n, std::forward<Fn>(fn));
}

inline std::vector<Factorization> enumerate_factorizations(const WeightSystem& ws,
                                                           i64 n) {
    std::vector<Factorization> out;
    for_each_factorization(ws, n, [&](const Factorization& x) { out.push_back(x); });
    return out;
}

inline i128 weighted_length(const WeightSystem& ws, const Factorization& x) {
    return dot(ws.m(), Ivec3{x.x1, x.x2, x.x3});
}

// The multiset of weighted lengths over Z_S(n), stored as counts over the
// contiguous support window [ceil(t3 n), floor(t1 n)].
class LengthMultiset {
public:
    LengthMultiset(i64 n, i128 window_lo, i128 window_hi)
        : n_(n), lo_(window_lo), total_(0) {
        i128 width = checked_add(checked_sub(window_hi, window_lo), 1);
        if (width < 0) width = 0;
        if (width > (i128{1} << 33))
            throw Error(Errc::Resource, "support window too wide to materialize");
        counts_.assign(static_cast<std::size_t>(width), 0);
    }

    i64 n() const { return n_; }
    u64 total() const { return total_; }
    i128 window_lo() const { return lo_; }
    i128 window_hi() const { return lo_ + static_cast<i128>(counts_.size()) - 1; }

    void insert(i128 value) {
        i128 idx = value - lo_;
        if (idx < 0 || idx >= static_cast<i128>(counts_.size()))
            throw Error(Errc::Resource, "weighted length outside support window");
        ++counts_[static_cast<std::size_t>(idx)];
        ++total_;
    }

    u64 count_of(i128 value) const {
        i128 idx = value - lo_;
        if (idx < 0 || idx >= static_cast<i128>(counts_.size())) return 0;
        return counts_[static_cast<std::size_t>(idx)];
    }

    i128 min_value() const {
        for (std::size_t i = 0; i < counts_.size(); ++i)
            if (counts_[i] != 0) return lo_ + static_cast<i128>(i);
        throw Error(Errc::EmptyMultiset, "empty length multiset");
    }

    i128 max_value() const {
        for (std::size_t i = counts_.size(); i-- > 0;)
            if (counts_[i] != 0) return lo_ + static_cast<i128>(i);
        throw Error(Errc::EmptyMultiset, "empty length multiset");
    }

    // Nonzero entries in ascending value order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < counts_.size(); ++i)
            if (counts_[i] != 0) fn(lo_ + static_cast<i128>(i), counts_[i]);
    }

private:
    i64 n_;
    i128 lo_;
    std::vector<u64> counts_;
    u64 total_;
};

namespace detail {

inline i128 support_lo(const WeightSystem& ws, i64 n) {
    return (ws.t3() * Rat(n)).ceil();
}
inline i128 support_hi(const WeightSystem& ws, i64 n) {
    return (ws.t1() * Rat(n)).floor();
}

}  // namespace detail

inline LengthMultiset length_multiset(const WeightSystem& ws, i64 n) {
    if (n < 0) throw Error(Errc::BadInput, "n must be nonnegative");
    LengthMultiset ms(n, detail::support_lo(ws, n), detail::support_hi(ws, n));
    const i128 m1 = ws.m1(), m2 = ws.m2(), m3 = ws.m3();
    const Triple gens = generator_triple(ws);
    const i64 n1 = gens[0], n2 = gens[1], n3 = gens[2];
    for (i64 x3 = 0; x3 <= n / n3; ++x3) {
        const i64 rem3 = n - n3 * x3;
        const i128 base3 = m3 * static_cast<i128>(x3);
        for (i64 x2 = 0; x2 <= rem3 / n2; ++x2) {
            const i64 rem = rem3 - n2 * x2;
            if (rem % n1 == 0)
                ms.insert(base3 + m2 * static_cast<i128>(x2) +
                          m1 * static_cast<i128>(rem / n1));
        }
    }
    return ms;
}

// The integer points of the lattice line through a witness z in direction
// r/d, intersected with the nonnegative octant: a rational parameter
// interval [s_lo, s_hi] whose integer count is exactly |Z(m,n)|.
struct LatticeSegment {
    std::optional<Ivec3> witness;
    Rat s_lo{0};
    Rat s_hi{-1};  // empty interval convention when infeasible
    i128 count = 0;
};

// Reusable counter: the Bezout data depends only on the instance, not on
// (m, n), so batch callers amortize it.
class LineCounter {
public:
    LineCounter(const WeightSystem& ws, const DirectionData& dd) : ws_(ws), dd_(dd) {
        detail::require_coprime(ws);
        a_ = detail::bezout_for_generators(ws.n());
        v_ = detail::bezout_for_direction(dd);
        w_ = cross(ws.n(), v_);
    }

    LatticeSegment count(i128 m, i128 n) const {
        LatticeSegment seg;
        Ivec3 z0 = scale(n, a_);
        i128 s = dot(ws_.m(), z0);
        i128 diff = checked_sub(m, s);
        if (mod_nonneg(diff, dd_.d) != 0) return seg;
        Ivec3 z = add(z0, scale(diff / dd_.d, w_));
        seg.witness = z;

        std::optional<Rat> lo, hi;
        for (int i = 0; i < 3; ++i) {
            i128 u = dd_.r_primitive[i];
            if (u == 0) {
                if (z[i] < 0) return seg;  // constraint row unsatisfiable
                continue;
            }
            Rat bound(checked_neg(z[i]), u);
            if (u > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        // rho2 > 0 gives an upper bound and one of rho1, rho3 a lower bound.
        seg.s_lo = *lo;
        seg.s_hi = *hi;
        if (seg.s_hi < seg.s_lo) return seg;
        seg.count = checked_add(checked_sub(seg.s_hi.floor(), seg.s_lo.ceil()), 1);
        if (seg.count < 0) seg.count = 0;
        return seg;
    }

private:
    WeightSystem ws_;
    DirectionData dd_;
    Ivec3 a_, v_, w_;
};

inline LatticeSegment count_on_line(const WeightSystem& ws, const DirectionData& dd,
                                    i128 m, i128 n) {
    return LineCounter(ws, dd).count(m, n);
}

// Sum of |Z(m,n)| over the integer range [m_lo, m_hi]. Uses the segment
// method when the generators are coprime, otherwise the multiset.
inline i128 count_values_in_range(const WeightSystem& ws, i64 n, i128 m_lo,
                                  i128 m_hi) {
    // Counts vanish outside the support window.
    i128 lo = detail::support_lo(ws, n);
    i128 hi = detail::support_hi(ws, n);
    if (m_lo < lo) m_lo = lo;
    if (m_hi > hi) m_hi = hi;
    if (m_hi < m_lo) return 0;

    i128 total = 0;
    if (ws.generators_coprime()) {
        DirectionData dd = direction_data(ws);
        LineCounter counter(ws, dd);
        ResidueClass rc = residue_class(ws, dd, n);
        i128 m = checked_add(m_lo, mod_nonneg(rc.c - m_lo, dd.d));
        for (; m <= m_hi; m += dd.d)
            total = checked_add(total, counter.count(m, n).count);
    } else {
        LengthMultiset ms = length_multiset(ws, n);
        for (i128 m = m_lo; m <= m_hi; ++m)
            total = checked_add(total, ms.count_of(m));
    }
    return total;
}

// |Lambda[[n]] cap [alpha n, beta n]|.
inline i128 count_in_window(const WeightSystem& ws, i64 n, const Rat& alpha,
                            const Rat& beta) {
    if (!(alpha < beta)) throw Error(Errc::BadInput, "window requires alpha < beta");
    return count_values_in_range(ws, n, (alpha * Rat(n)).ceil(),
                                 (beta * Rat(n)).floor());
}

struct HistogramBin {
    i128 m;
    i128 count;
    Rat position;  // m / n
    Rat value;     // count / (d n / (2 n1 n2 n3))
};

// One bin per integer m across the support window, zeros included.
inline std::vector<HistogramBin> scaled_histogram(const WeightSystem& ws,
                                                  const DirectionData& dd, i64 n) {
    if (n <= 0) throw Error(Errc::BadInput, "scaled histogram requires n > 0");
    i128 lo = detail::support_lo(ws, n);
    i128 hi = detail::support_hi(ws, n);
    Rat unit = Rat(checked_mul(2, ws.generator_product()),
                   checked_mul(dd.d, static_cast<i128>(n)));
    std::vector<HistogramBin> bins;
    if (hi >= lo) bins.reserve(static_cast<std::size_t>(hi - lo + 1));

    auto emit = [&](i128 m, i128 count) {
        bins.push_back(HistogramBin{m, count, Rat(m, n), Rat(count) * unit});
    };
    if (ws.generators_coprime()) {
        LineCounter counter(ws, dd);
        for (i128 m = lo; m <= hi; ++m) emit(m, counter.count(m, n).count);
    } else {
        LengthMultiset ms = length_multiset(ws, n);
        for (i128 m = lo; m <= hi; ++m) emit(m, ms.count_of(m));
    }
    return bins;
}

}  // namespace factorlen
