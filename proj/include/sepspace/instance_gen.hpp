#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepspace/chordal.hpp"
#include "sepspace/jordan.hpp"
#include "sepspace/penny.hpp"

namespace sepspace {

/// splitmix64-based generator: identical sequences on every platform, unlike
/// the distributions in <random>.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);            // uniform in [0, bound)
    double unit();                                       // uniform in [0, 1)
    double between(double lo, double hi);

private:
    std::uint64_t state_;
};

enum class ArcPolicy { Random, Dag, Bidirected };

ArcPolicy parse_arc_policy(const std::string& name);

struct GenSpec {
    std::string family;         // penny | chordal | jordan
    std::size_t n = 10;
    std::uint64_t seed = 1;
    std::string style = "grid"; // penny: grid | tri | random
    std::size_t k = 2;          // chordal tree width
    double density = 1.0;       // jordan crowding factor
    bool nested = false;        // jordan: add a containment-heavy hub
    ArcPolicy orient = ArcPolicy::Random;
};

DiskSet gen_penny(const GenSpec& spec);
ChordalInstance gen_chordal(const GenSpec& spec);
RegionSet gen_jordan(const GenSpec& spec);

} // namespace sepspace
