#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace axivort {

// Order-independent float summation following the fixed-point superaccumulator
// idea: scale every addend by the unit 2^(emax-52) and add as 128-bit integers.
// Integer addition commutes exactly, so the result is invariant under any
// permutation or parallel partitioning of the input, and the truncation error
// is no worse than the worst-case sequential ordering.
class ReproAccumulator {
public:
    explicit ReproAccumulator(int max_exponent) : emax_(max_exponent) {}

    void add(double v) {
        // |v| <= 2^emax, so the scaled value fits in ~53 bits.
        sum_ += static_cast<__int128>(std::llrint(std::ldexp(v, 52 - emax_)));
    }

    void merge(const ReproAccumulator& other) { sum_ += other.sum_; }

    double value() const { return std::ldexp(static_cast<double>(sum_), emax_ - 52); }

private:
    int emax_;
    __int128 sum_ = 0;
};

inline int max_exponent(std::span<const double> values) {
    int emax = -1021;
    for (double v : values) {
        if (v == 0.0 || !std::isfinite(v)) continue;
        int e = 0;
        std::frexp(v, &e);
        if (e > emax) emax = e;
    }
    return emax;
}

/// Exactly permutation-invariant sum of a finite double sequence.
inline double repro_sum(std::span<const double> values) {
    if (values.empty()) return 0.0;
    ReproAccumulator acc(max_exponent(values));
    for (double v : values) acc.add(v);
    return acc.value();
}

/// Fixed-shape pairwise (tree) sum; deterministic for a fixed input order.
inline double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace axivort
