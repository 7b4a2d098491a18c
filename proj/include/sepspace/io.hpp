#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sepspace/chordal.hpp"
#include "sepspace/jordan.hpp"
#include "sepspace/penny.hpp"

namespace sepspace::io {

enum class Family { Penny, Chordal, Jordan };

/// Reads the header line of a file to decide which parser applies.
Family sniff_family(const std::string& text);

// Line-oriented text formats with '#' comments. Numbers are plain decimal,
// weights are p/q fractions; serialization round-trips exactly.
DiskSet parse_penny(const std::string& text);
std::string serialize_penny(const DiskSet& ds);

ChordalInstance parse_chordal(const std::string& text);
std::string serialize_chordal(const ChordalInstance& inst);

RegionSet parse_jordan(const std::string& text);
std::string serialize_jordan(const RegionSet& rs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// One pipeline run, serializable as JSON.
struct BenchRecord {
    std::string family;
    std::string instance;      // descriptor (style, params, seed)
    std::size_t n = 0;
    std::size_t m = 0;
    std::string pipeline;      // e.g. "separator", "reach"
    std::string answer;        // "yes"/"no"/separator size
    std::size_t separator_size = 0;
    std::int64_t peak_words = 0;
    double wall_ms = 0;
    double epsilon = 0, beta = 0, sweep_constant = 0;
};

struct BenchReport {
    std::vector<BenchRecord> records;
    // least-squares log-log fits: label -> slope
    std::vector<std::pair<std::string, double>> exponents;
};

std::string to_json(const BenchReport& report);

/// slope of log(y) against log(x) by least squares; pairs with nonpositive
/// coordinates are skipped
double loglog_slope(const std::vector<std::pair<double, double>>& xy);

// ---- SVG figures ----

struct SvgOptions {
    std::string overlay; // "", "sep", "subdiv", "aux"
};

std::string svg_penny(const DiskSet& ds, const RectSubdivision* subdiv,
                      const AuxiliaryGraph* aux, const SvgOptions& opts);
std::string svg_jordan(const RegionSet& rs, const std::vector<Vertex>* separator,
                       const SvgOptions& opts);

} // namespace sepspace::io
