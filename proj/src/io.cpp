#include "sepspace/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sepspace::io {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct LineReader {
    std::istringstream in;
    std::string line;
    std::size_t lineno = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    bool next(std::vector<std::string>& tokens) {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            tokens.clear();
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        raise("PARSE_ERROR", what + " at line " + std::to_string(lineno));
    }
};

double to_double(LineReader& r, const std::string& tok) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) r.fail("bad number '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        r.fail("bad number '" + tok + "'");
    }
}

std::uint32_t to_id(LineReader& r, const std::string& tok) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(tok, &used);
        if (used != tok.size()) r.fail("bad id '" + tok + "'");
        return static_cast<std::uint32_t>(v);
    } catch (const std::logic_error&) {
        r.fail("bad id '" + tok + "'");
    }
}

} // namespace

Family sniff_family(const std::string& text) {
    LineReader r(text);
    std::vector<std::string> tok;
    require(r.next(tok) && tok.size() >= 2 && tok[1] == "v1", "PARSE_ERROR",
            "missing format header");
    if (tok[0] == "penny") return Family::Penny;
    if (tok[0] == "chordal") return Family::Chordal;
    if (tok[0] == "jordan") return Family::Jordan;
    raise("PARSE_ERROR", "unknown family '" + tok[0] + "'");
}

DiskSet parse_penny(const std::string& text) {
    LineReader r(text);
    std::vector<std::string> tok;
    require(r.next(tok) && tok.size() == 2 && tok[0] == "penny" && tok[1] == "v1",
            "PARSE_ERROR", "expected 'penny v1' header");
    std::vector<double> xs, ys;
    std::vector<Arc> arcs, biarcs;
    while (r.next(tok)) {
        if (tok[0] == "disk") {
            if (tok.size() != 4) r.fail("disk expects: disk <id> <x> <y>");
            if (to_id(r, tok[1]) != xs.size()) r.fail("disk ids must be dense and in order");
            xs.push_back(to_double(r, tok[2]));
            ys.push_back(to_double(r, tok[3]));
        } else if (tok[0] == "arc") {
            if (tok.size() != 3) r.fail("arc expects: arc <u> <v>");
            arcs.emplace_back(to_id(r, tok[1]), to_id(r, tok[2]));
        } else if (tok[0] == "biarc") {
            if (tok.size() != 3) r.fail("biarc expects: biarc <u> <v>");
            biarcs.emplace_back(to_id(r, tok[1]), to_id(r, tok[2]));
        } else {
            r.fail("unknown directive '" + tok[0] + "'");
        }
    }
    return DiskSet::build(std::move(xs), std::move(ys), arcs, biarcs);
}

std::string serialize_penny(const DiskSet& ds) {
    std::ostringstream os;
    os << "penny v1\n";
    for (std::size_t i = 0; i < ds.size(); ++i)
        os << "disk " << i << " " << fmt_double(ds.x[i]) << " " << fmt_double(ds.y[i])
           << "\n";
    // split the arc set back into biarc pairs and single arcs
    for (Vertex u = 0; u < ds.size(); ++u)
        for (Vertex v : ds.arcs.out(u)) {
            if (ds.arcs.has_arc(v, u)) {
                if (u < v) os << "biarc " << u << " " << v << "\n";
            } else {
                os << "arc " << u << " " << v << "\n";
            }
        }
    return os.str();
}

ChordalInstance parse_chordal(const std::string& text) {
    LineReader r(text);
    std::vector<std::string> tok;
    require(r.next(tok) && tok.size() == 2 && tok[0] == "chordal" && tok[1] == "v1",
            "PARSE_ERROR", "expected 'chordal v1' header");
    std::vector<Arc> arcs;
    std::vector<std::pair<std::uint32_t, Frac>> weights;
    std::uint32_t n = 0;
    while (r.next(tok)) {
        if (tok[0] == "arc") {
            if (tok.size() != 3) r.fail("arc expects: arc <u> <v>");
            Arc a{to_id(r, tok[1]), to_id(r, tok[2])};
            n = std::max({n, a.first + 1, a.second + 1});
            arcs.push_back(a);
        } else if (tok[0] == "weight") {
            if (tok.size() != 3) r.fail("weight expects: weight <id> <p>/<q>");
            weights.emplace_back(to_id(r, tok[1]), Frac::parse(tok[2]));
        } else {
            r.fail("unknown directive '" + tok[0] + "'");
        }
    }
    WeightFn w;
    if (weights.empty()) {
        w = WeightFn::uniform(n);
    } else {
        std::vector<Frac> per(n, Frac::zero());
        for (auto& [id, f] : weights) {
            require(id < n, "UNKNOWN_VERTEX", "weight for vertex beyond arc range");
            per[id] = f;
        }
        w = WeightFn::from_fractions(per);
    }
    return ChordalInstance::validate(DirectedGraph::from_arcs(n, arcs), std::move(w));
}

std::string serialize_chordal(const ChordalInstance& inst) {
    std::ostringstream os;
    os << "chordal v1\n";
    for (auto [u, v] : inst.g.arcs()) os << "arc " << u << " " << v << "\n";
    bool uniform = true;
    for (Vertex v = 0; v < inst.g.order() && uniform; ++v)
        uniform = inst.w.weight(v) == Frac(1, static_cast<std::int64_t>(inst.g.order()));
    if (!uniform)
        for (Vertex v = 0; v < inst.g.order(); ++v)
            os << "weight " << v << " " << inst.w.weight(v).str() << "\n";
    return os.str();
}

RegionSet parse_jordan(const std::string& text) {
    LineReader r(text);
    std::vector<std::string> tok;
    require(r.next(tok) && tok.size() == 2 && tok[0] == "jordan" && tok[1] == "v1",
            "PARSE_ERROR", "expected 'jordan v1' header");
    std::vector<geom::Shape> shapes;
    std::vector<std::pair<std::uint32_t, Frac>> weights;
    std::vector<Arc> arcs;
    while (r.next(tok)) {
        if (tok[0] == "region") {
            if (tok.size() < 3) r.fail("region expects a shape");
            if (to_id(r, tok[1]) != shapes.size()) r.fail("region ids must be dense and in order");
            if (tok[2] == "disk") {
                if (tok.size() != 6) r.fail("disk region expects: region <id> disk <x> <y> <r>");
                shapes.emplace_back(geom::Disk{{to_double(r, tok[3]), to_double(r, tok[4])},
                                               to_double(r, tok[5])});
            } else if (tok[2] == "poly") {
                if (tok.size() < 9 || (tok.size() - 3) % 2 != 0)
                    r.fail("poly region expects at least three x y pairs");
                geom::Poly p;
                for (std::size_t i = 3; i + 1 < tok.size(); i += 2)
                    p.pts.push_back({to_double(r, tok[i]), to_double(r, tok[i + 1])});
                shapes.emplace_back(std::move(p));
            } else {
                r.fail("unknown shape '" + tok[2] + "'");
            }
        } else if (tok[0] == "weight") {
            if (tok.size() != 3) r.fail("weight expects: weight <id> <p>/<q>");
            weights.emplace_back(to_id(r, tok[1]), Frac::parse(tok[2]));
        } else if (tok[0] == "arc") {
            if (tok.size() != 3) r.fail("arc expects: arc <u> <v>");
            arcs.emplace_back(to_id(r, tok[1]), to_id(r, tok[2]));
        } else {
            r.fail("unknown directive '" + tok[0] + "'");
        }
    }
    WeightFn w;
    if (weights.empty()) {
        w = WeightFn::uniform(shapes.size());
    } else {
        std::vector<Frac> per(shapes.size(), Frac::zero());
        for (auto& [id, f] : weights) {
            require(id < shapes.size(), "UNKNOWN_VERTEX", "weight for unknown region");
            per[id] = f;
        }
        w = WeightFn::from_fractions(per);
    }
    return RegionSet::build(std::move(shapes), std::move(w), std::move(arcs));
}

std::string serialize_jordan(const RegionSet& rs) {
    std::ostringstream os;
    os << "jordan v1\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (const geom::Disk* d = std::get_if<geom::Disk>(&rs.shapes[i])) {
            os << "region " << i << " disk " << fmt_double(d->c.x) << " "
               << fmt_double(d->c.y) << " " << fmt_double(d->r) << "\n";
        } else {
            os << "region " << i << " poly";
            for (geom::Vec2 p : std::get<geom::Poly>(rs.shapes[i]).pts)
                os << " " << fmt_double(p.x) << " " << fmt_double(p.y);
            os << "\n";
        }
    }
    bool uniform = true;
    for (std::size_t v = 0; v < rs.size() && uniform; ++v)
        uniform = rs.weights.weight(v) == Frac(1, static_cast<std::int64_t>(rs.size()));
    if (!uniform)
        for (std::size_t v = 0; v < rs.size(); ++v)
            os << "weight " << v << " " << rs.weights.weight(v).str() << "\n";
    for (auto [u, v] : rs.arcs) os << "arc " << u << " " << v << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "IO_ERROR", "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "IO_ERROR", "cannot write '" + path + "'");
    out << content;
}

double loglog_slope(const std::vector<std::pair<double, double>>& xy) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t k = 0;
    for (auto [x, y] : xy) {
        if (x <= 0 || y <= 0) continue;
        double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++k;
    }
    if (k < 2) return 0;
    double denom = double(k) * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) return 0;
    return (double(k) * sxy - sx * sy) / denom;
}

std::string to_json(const BenchReport& report) {
    nlohmann::json j;
    j["schema"] = "sepspace-bench-1";
    j["records"] = nlohmann::json::array();
    for (const BenchRecord& r : report.records) {
        nlohmann::json jr;
        jr["family"] = r.family;
        jr["instance"] = r.instance;
        jr["n"] = r.n;
        jr["m"] = r.m;
        jr["pipeline"] = r.pipeline;
        jr["answer"] = r.answer;
        jr["separator_size"] = r.separator_size;
        jr["peak_words"] = r.peak_words;
        jr["wall_ms"] = r.wall_ms;
        jr["epsilon"] = r.epsilon;
        jr["beta"] = r.beta;
        jr["sweep_constant"] = r.sweep_constant;
        j["records"].push_back(std::move(jr));
    }
    j["exponents"] = nlohmann::json::object();
    for (auto& [label, slope] : report.exponents) j["exponents"][label] = slope;
    return j.dump(2) + "\n";
}

namespace {

struct SvgCanvas {
    std::ostringstream body;
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;

    void grow(double x, double y, double pad) {
        min_x = std::min(min_x, x - pad);
        min_y = std::min(min_y, y - pad);
        max_x = std::max(max_x, x + pad);
        max_y = std::max(max_y, y + pad);
    }

    std::string finish() {
        if (min_x > max_x) { min_x = min_y = 0; max_x = max_y = 1; }
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt_double(min_x)
           << " " << fmt_double(min_y) << " " << fmt_double(max_x - min_x) << " "
           << fmt_double(max_y - min_y) << "\">\n";
        os << body.str();
        os << "</svg>\n";
        return os.str();
    }
};

} // namespace

std::string svg_penny(const DiskSet& ds, const RectSubdivision* subdiv,
                      const AuxiliaryGraph* aux, const SvgOptions& opts) {
    SvgCanvas svg;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        svg.grow(ds.x[i], ds.y[i], 2.0);
        svg.body << "<circle cx=\"" << fmt_double(ds.x[i]) << "\" cy=\""
                 << fmt_double(ds.y[i])
                 << "\" r=\"1\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"0.08\"/>\n";
    }
    for (auto [u, v] : ds.arcs.arcs()) {
        svg.body << "<line x1=\"" << fmt_double(ds.x[u]) << "\" y1=\"" << fmt_double(ds.y[u])
                 << "\" x2=\"" << fmt_double(ds.x[v]) << "\" y2=\"" << fmt_double(ds.y[v])
                 << "\" stroke=\"gray\" stroke-width=\"0.05\"/>\n";
    }
    if (opts.overlay == "subdiv" && subdiv) {
        for (const SweepLine& line : subdiv->lines) {
            double x1 = line.axis == 0 ? line.coord : line.span_lo;
            double x2 = line.axis == 0 ? line.coord : line.span_hi;
            double y1 = line.axis == 0 ? line.span_lo : line.coord;
            double y2 = line.axis == 0 ? line.span_hi : line.coord;
            svg.body << "<line x1=\"" << fmt_double(x1) << "\" y1=\"" << fmt_double(y1)
                     << "\" x2=\"" << fmt_double(x2) << "\" y2=\"" << fmt_double(y2)
                     << "\" stroke=\"crimson\" stroke-width=\"0.12\"/>\n";
        }
    }
    if (opts.overlay == "aux" && aux && subdiv) {
        for (const AuxVertex& v : aux->vertices) {
            const SweepLine& line = subdiv->lines[v.line];
            double px = line.axis == 0 ? line.coord : v.along;
            double py = line.axis == 0 ? v.along : line.coord;
            svg.body << "<circle cx=\"" << fmt_double(px) << "\" cy=\"" << fmt_double(py)
                     << "\" r=\"0.22\" fill=\"darkorange\"/>\n";
        }
    }
    return svg.finish();
}

std::string svg_jordan(const RegionSet& rs, const std::vector<Vertex>* separator,
                       const SvgOptions& opts) {
    SvgCanvas svg;
    std::vector<char> in_sep(rs.size(), 0);
    if (opts.overlay == "sep" && separator)
        for (Vertex v : *separator) in_sep[v] = 1;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const char* color = in_sep[i] ? "crimson" : "steelblue";
        if (const geom::Disk* d = std::get_if<geom::Disk>(&rs.shapes[i])) {
            svg.grow(d->c.x, d->c.y, d->r + 1);
            svg.body << "<circle cx=\"" << fmt_double(d->c.x) << "\" cy=\""
                     << fmt_double(d->c.y) << "\" r=\"" << fmt_double(d->r)
                     << "\" fill=\"none\" stroke=\"" << color
                     << "\" stroke-width=\"0.1\"/>\n";
        } else {
            const geom::Poly& p = std::get<geom::Poly>(rs.shapes[i]);
            svg.body << "<polygon points=\"";
            for (geom::Vec2 q : p.pts) {
                svg.grow(q.x, q.y, 1);
                svg.body << fmt_double(q.x) << "," << fmt_double(q.y) << " ";
            }
            svg.body << "\" fill=\"none\" stroke=\"" << color
                     << "\" stroke-width=\"0.1\"/>\n";
        }
    }
    return svg.finish();
}

} // namespace sepspace::io
