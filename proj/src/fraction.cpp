#include "sepspace/fraction.hpp"

#include <algorithm>
#include <cstdlib>

namespace sepspace {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 x) {
    if (x > INT64_MAX || x < INT64_MIN)
        raise("FRACTION_OVERFLOW", "rational does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

} // namespace

Frac::Frac(std::int64_t num, std::int64_t den) {
    require(den != 0, "FRACTION_OVERFLOW", "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = gcd64(num, den);
    if (g > 1) { num /= g; den /= g; }
    num_ = num;
    den_ = den;
}

Frac Frac::operator+(const Frac& o) const {
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    // reduce in 128 bits before narrowing
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    return Frac(checked_narrow(n), checked_narrow(d));
}

Frac Frac::operator-(const Frac& o) const { return *this + Frac(-o.num_, o.den_); }

Frac Frac::operator*(const Frac& o) const {
    std::int64_t g1 = gcd64(num_, o.den_);
    std::int64_t g2 = gcd64(o.num_, den_);
    i128 n = i128(num_ / g1) * (o.num_ / g2);
    i128 d = i128(den_ / g2) * (o.den_ / g1);
    return Frac(checked_narrow(n), checked_narrow(d));
}

Frac Frac::operator/(const Frac& o) const {
    require(o.num_ != 0, "FRACTION_OVERFLOW", "division by zero rational");
    return *this * Frac(o.den_, o.num_);
}

bool Frac::operator<(const Frac& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::string Frac::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Frac Frac::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Frac(std::stoll(text), 1);
        return Frac(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        raise("PARSE_ERROR", "bad fraction literal '" + text + "'");
    }
}

WeightFn WeightFn::uniform(std::size_t n) {
    WeightFn w;
    w.den_ = static_cast<std::int64_t>(n == 0 ? 1 : n);
    w.nums_.assign(n, 1);
    return w;
}

WeightFn WeightFn::concentrated(std::size_t n, const std::vector<std::size_t>& support) {
    require(!support.empty(), "EMPTY_SUPPORT", "weight support must be non-empty");
    WeightFn w;
    w.den_ = static_cast<std::int64_t>(support.size());
    w.nums_.assign(n, 0);
    for (std::size_t v : support) w.nums_[v] += 1;
    return w;
}

WeightFn WeightFn::build(const std::vector<Frac>& weights, bool unit_sum) {
    WeightFn w;
    // exact path: least common denominator, if it fits comfortably
    i128 lcm = 1;
    bool fits = true;
    for (const Frac& f : weights) {
        require(f.num() >= 0, "NEGATIVE_WEIGHT", "weights must be non-negative");
        i128 g = std::gcd(static_cast<std::int64_t>(lcm), f.den());
        lcm = lcm / g * f.den();
        if (lcm > INT64_MAX / 4) { fits = false; break; }
    }
    if (fits) {
        w.den_ = static_cast<std::int64_t>(lcm);
        i128 total = 0;
        w.nums_.reserve(weights.size());
        for (const Frac& f : weights) {
            i128 num = i128(f.num()) * (w.den_ / f.den());
            w.nums_.push_back(checked_narrow(num));
            total += num;
        }
        if (unit_sum)
            require(total == w.den_, "WEIGHT_SUM", "weights must sum to exactly 1");
        else
            require(total <= w.den_, "WEIGHT_SUM", "weights must sum to at most 1");
        return w;
    }
    // largest-remainder redistribution on a fixed power-of-two grid: the total
    // is preserved exactly, individual weights move by less than 2^-62
    const std::int64_t grid = std::int64_t(1) << 62;
    struct Part { std::size_t idx; i128 floor_val; i128 rem_num; std::int64_t rem_den; };
    std::vector<Part> parts;
    parts.reserve(weights.size());
    i128 floor_total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        i128 scaled = i128(weights[i].num()) * grid;
        i128 fl = scaled / weights[i].den();
        parts.push_back({i, fl, scaled % weights[i].den(), weights[i].den()});
        floor_total += fl;
    }
    i128 leftover = i128(grid) - floor_total;
    if (unit_sum)
        require(leftover >= 0 && leftover <= static_cast<i128>(parts.size()),
                "WEIGHT_SUM", "weights must sum to exactly 1");
    else
        leftover = std::max<i128>(std::min<i128>(leftover, static_cast<i128>(parts.size())), 0);
    std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
        i128 lhs = a.rem_num * b.rem_den;
        i128 rhs = b.rem_num * a.rem_den;
        if (lhs != rhs) return lhs > rhs;
        return a.idx < b.idx;
    });
    w.den_ = grid;
    w.nums_.assign(weights.size(), 0);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        i128 v = parts[k].floor_val +
                 (unit_sum && static_cast<i128>(k) < leftover ? 1 : 0);
        w.nums_[parts[k].idx] = checked_narrow(v);
    }
    w.rescaled_ = true;
    return w;
}

WeightFn WeightFn::from_fractions(const std::vector<Frac>& weights) {
    return build(weights, true);
}

WeightFn WeightFn::from_fractions_subunit(const std::vector<Frac>& weights) {
    return build(weights, false);
}

std::int64_t WeightFn::total_numerator() const {
    std::int64_t s = 0;
    for (std::int64_t x : nums_) s += x;
    return s;
}

bool WeightFn::sum_le(std::int64_t numerator_sum, const Frac& bound) const {
    return i128(numerator_sum) * bound.den() <= i128(bound.num()) * den_;
}

} // namespace sepspace
