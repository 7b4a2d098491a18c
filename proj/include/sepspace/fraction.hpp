#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sepspace/error.hpp"

namespace sepspace {

/// Exact rational on 64-bit words. Intermediates run through __int128 and
/// anything that would not reduce back into int64 throws FRACTION_OVERFLOW,
/// so results are exact or loud, never silently rounded.
class Frac {
public:
    constexpr Frac() : num_(0), den_(1) {}
    Frac(std::int64_t num, std::int64_t den);

    static Frac zero() { return Frac(); }
    static Frac one() { return Frac(1, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator/(const Frac& o) const;
    Frac& operator+=(const Frac& o) { return *this = *this + o; }

    bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Frac& o) const { return !(*this == o); }
    bool operator<(const Frac& o) const;
    bool operator<=(const Frac& o) const { return *this < o || *this == o; }
    bool operator>(const Frac& o) const { return o < *this; }
    bool operator>=(const Frac& o) const { return o <= *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    static Frac parse(const std::string& text); // "p/q" or "p"

private:
    std::int64_t num_; // sign lives here
    std::int64_t den_; // > 0
};

/// Vertex (or region) weight function over dense ids [0, n). All weights share
/// one denominator, so sums and the 1/3–2/3 comparisons stay in integer
/// arithmetic. The numerators always add up to exactly the denominator.
class WeightFn {
public:
    WeightFn() = default;

    /// w(v) = 1/n for every vertex.
    static WeightFn uniform(std::size_t n);

    /// Build from per-vertex fractions; they must sum to exactly 1.
    /// If the least common denominator does not fit in int64, weights are
    /// redistributed onto a 2^62 grid by largest remainder (sum stays exact,
    /// individual weights move by < 2^-62) and rescaled() reports true.
    static WeightFn from_fractions(const std::vector<Frac>& weights);

    /// Same construction but the mass may sum to less than 1 (derived
    /// weightings whose leftover mass lives outside the graph).
    static WeightFn from_fractions_subunit(const std::vector<Frac>& weights);

    /// Sum of all numerators; equals denominator() iff the mass is exactly 1.
    std::int64_t total_numerator() const;

    /// All mass on the given vertices, split evenly; others get zero.
    static WeightFn concentrated(std::size_t n, const std::vector<std::size_t>& support);

    std::size_t size() const { return nums_.size(); }
    bool rescaled() const { return rescaled_; }
    std::int64_t denominator() const { return den_; }
    std::int64_t numerator(std::size_t v) const { return nums_[v]; }

    Frac weight(std::size_t v) const { return Frac(nums_[v], den_); }

    template <typename Iterable>
    Frac weight_of(const Iterable& vertices) const {
        std::int64_t s = 0;
        for (auto v : vertices) s += nums_[static_cast<std::size_t>(v)];
        return Frac(s, den_);
    }

    /// sum(numerators over set) <= frac, exactly.
    bool sum_le(std::int64_t numerator_sum, const Frac& bound) const;

private:
    static WeightFn build(const std::vector<Frac>& weights, bool unit_sum);

    std::vector<std::int64_t> nums_;
    std::int64_t den_ = 1;
    bool rescaled_ = false;
};

} // namespace sepspace
