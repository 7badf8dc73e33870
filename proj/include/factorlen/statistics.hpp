#pragma once

// Empirical statistics of the weighted-length multiset and the asymptotic
// predictions coming from the triangular limit density.

#include <cmath>

#include "factorlen/enumeration.hpp"
#include "factorlen/geometry.hpp"

namespace factorlen {

enum class StatsKind { Empirical, Predicted };

struct StatsReport {
    StatsKind kind;
    i64 n;
    u64 total;     // multiset size; 0 for predicted reports
    Rat mean;      // exact in both modes
    double median; // empirical: the lower median (an integer); predicted: root of the CDF
    Rat mode;      // empirical: integer; predicted: t2 * n
    Rat min;       // empirical: integer; predicted: t3 * n
    Rat max;       // empirical: integer; predicted: t1 * n
    Rat variance;  // exact population variance (empirical) or limit variance
    double stdev;
};

inline StatsReport empirical_stats(const LengthMultiset& lm) {
    if (lm.total() == 0)
        throw Error(Errc::EmptyMultiset, "no factorizations: statistics undefined");
    const i128 total = static_cast<i128>(lm.total());
    i128 sum = 0, sum_sq = 0;
    i128 mode_value = 0;
    u64 mode_count = 0;
    lm.for_each([&](i128 m, u64 c) {
        i128 cm = checked_mul(static_cast<i128>(c), m);
        sum = checked_add(sum, cm);
        sum_sq = checked_add(sum_sq, checked_mul(cm, m));
        if (c > mode_count) {  // ties break toward the smallest value
            mode_count = c;
            mode_value = m;
        }
    });

    // Lower median: the ceil(total/2)-th smallest element.
    const i128 rank = ceil_div(total, 2);
    i128 median = 0, seen = 0;
    lm.for_each([&](i128 m, u64 c) {
        if (seen < rank) {
            seen += static_cast<i128>(c);
            if (seen >= rank) median = m;
        }
    });

    Rat mean(sum, total);
    Rat variance = Rat(sum_sq, total) - mean * mean;

    StatsReport r;
    r.kind = StatsKind::Empirical;
    r.n = lm.n();
    r.total = lm.total();
    r.mean = mean;
    r.median = static_cast<double>(median);
    r.mode = Rat(mode_value);
    r.min = Rat(lm.min_value());
    r.max = Rat(lm.max_value());
    r.variance = variance;
    r.stdev = std::sqrt(variance.to_double());
    return r;
}

// Asymptotic predictions: mode/min/max are the density breakpoints scaled
// by n, mean and variance come from the first two moments of F, and the
// median solves the piecewise-quadratic CDF equation (two branches, chosen
// by comparing t2 against the midpoint of t1 and t3 exactly).
inline StatsReport predicted_stats(const WeightSystem& ws, i64 n) {
    const Rat t1 = ws.t1(), t2 = ws.t2(), t3 = ws.t3();
    const Rat nr(n);

    Rat mean = nr * (t1 + t2 + t3) / Rat(3);
    Rat variance = nr * nr *
                   (t1 * t1 + t2 * t2 + t3 * t3 - t1 * t2 - t2 * t3 - t3 * t1) /
                   Rat(18);

    Rat half(1, 2);
    double median_scale;
    if (t2 >= (t1 + t3) * half) {
        Rat inner = half * (t1 - t3) * (t2 - t3);
        median_scale = t3.to_double() + std::sqrt(inner.to_double());
    } else {
        Rat inner = half * (t1 - t3) * (t1 - t2);
        median_scale = t1.to_double() - std::sqrt(inner.to_double());
    }

    StatsReport r;
    r.kind = StatsKind::Predicted;
    r.n = n;
    r.total = 0;
    r.mean = mean;
    r.median = median_scale * static_cast<double>(n);
    r.mode = t2 * nr;
    r.min = t3 * nr;
    r.max = t1 * nr;
    r.variance = variance;
    r.stdev = std::sqrt(variance.to_double());
    return r;
}

}  // namespace factorlen
