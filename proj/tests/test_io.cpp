#include <doctest.h>

#include "sepspace/instance_gen.hpp"
#include "sepspace/io.hpp"

using namespace sepspace;

TEST_CASE("penny round trip") {
    GenSpec spec;
    spec.family = "penny";
    spec.n = 30;
    spec.style = "random";
    spec.seed = 5;
    spec.orient = ArcPolicy::Random;
    DiskSet ds = gen_penny(spec);
    std::string text = io::serialize_penny(ds);
    DiskSet back = io::parse_penny(text);
    CHECK(io::serialize_penny(back) == text);
    CHECK(back.size() == ds.size());
    CHECK(back.arcs.arc_count() == ds.arcs.arc_count());
}

TEST_CASE("penny biarcs survive the round trip") {
    GenSpec spec;
    spec.family = "penny";
    spec.n = 16;
    spec.seed = 9;
    spec.orient = ArcPolicy::Bidirected;
    DiskSet ds = gen_penny(spec);
    std::string text = io::serialize_penny(ds);
    CHECK(text.find("biarc") != std::string::npos);
    CHECK(io::serialize_penny(io::parse_penny(text)) == text);
}

TEST_CASE("chordal round trip with weights") {
    std::string text = "chordal v1\narc 0 1\narc 1 2\nweight 0 1/2\nweight 1 1/4\nweight 2 1/4\n";
    ChordalInstance inst = io::parse_chordal(text);
    CHECK(inst.g.order() == 3);
    CHECK(inst.w.weight(0) == Frac(1, 2));
    CHECK(io::serialize_chordal(io::parse_chordal(io::serialize_chordal(inst))) ==
          io::serialize_chordal(inst));
}

TEST_CASE("jordan round trip with polygons") {
    std::string text =
        "jordan v1\n"
        "region 0 disk 0 0 2\n"
        "region 1 poly -1 -1 1 -1 1 1 -1 4\n"
        "arc 0 1\n";
    RegionSet rs = io::parse_jordan(text);
    CHECK(rs.size() == 2);
    CHECK(rs.m == 2);
    std::string out = io::serialize_jordan(rs);
    CHECK(io::serialize_jordan(io::parse_jordan(out)) == out);
}

TEST_CASE("comments and malformed lines") {
    std::string good = "penny v1\n# a comment\ndisk 0 0 0\n";
    CHECK(io::parse_penny(good).size() == 1);
    CHECK_THROWS_AS(io::parse_penny("penny v2\n"), Error);
    CHECK_THROWS_AS(io::parse_penny("penny v1\ndisk 0 zero 0\n"), Error);
    CHECK_THROWS_AS(io::parse_penny("penny v1\ndisc 0 0 0\n"), Error);
    CHECK_THROWS_AS(io::sniff_family("nothing here"), Error);
}

TEST_CASE("family sniffing") {
    CHECK(io::sniff_family("penny v1\n") == io::Family::Penny);
    CHECK(io::sniff_family("chordal v1\narc 0 1\n") == io::Family::Chordal);
    CHECK(io::sniff_family("# hi\njordan v1\n") == io::Family::Jordan);
}

TEST_CASE("log-log slope fits a clean power law") {
    std::vector<std::pair<double, double>> xy;
    for (double x : {10.0, 100.0, 1000.0, 10000.0}) xy.emplace_back(x, 3 * std::pow(x, 0.5));
    CHECK(io::loglog_slope(xy) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("bench report serializes as json") {
    io::BenchReport report;
    io::BenchRecord rec;
    rec.family = "chordal";
    rec.instance = "demo";
    rec.n = 10;
    rec.m = 17;
    rec.pipeline = "separator";
    rec.answer = "3";
    rec.separator_size = 3;
    rec.peak_words = 12;
    report.records.push_back(rec);
    report.exponents.emplace_back("peak_words_vs_m", 0.5);
    std::string json = io::to_json(report);
    CHECK(json.find("\"schema\": \"sepspace-bench-1\"") != std::string::npos);
    CHECK(json.find("\"peak_words\": 12") != std::string::npos);
    CHECK(json.find("\"peak_words_vs_m\": 0.5") != std::string::npos);
}

TEST_CASE("svg output is well-formed and shows subdivision lines") {
    GenSpec spec;
    spec.family = "penny";
    spec.n = 49;
    spec.style = "grid";
    spec.seed = 2;
    DiskSet ds = gen_penny(spec);
    WorkspaceMeter m;
    RectSubdivision sd = build_subdivision(ds, 0.5, 4.0, m);
    io::SvgOptions opts{"subdiv"};
    std::string svg = io::svg_penny(ds, &sd, nullptr, opts);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    // one line element per stored separator line plus one per tangency arc
    std::size_t lines = 0;
    for (std::size_t at = svg.find("<line"); at != std::string::npos;
         at = svg.find("<line", at + 1))
        ++lines;
    CHECK(lines == sd.lines.size() + ds.arcs.arc_count());
}
