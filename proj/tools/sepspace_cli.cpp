#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepspace/framework.hpp"
#include "sepspace/instance_gen.hpp"
#include "sepspace/io.hpp"

using namespace sepspace;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

std::uint64_t seed_or_env(std::uint64_t seed, bool seed_set) {
    if (seed_set) return seed;
    if (const char* env = std::getenv("SEPSPACE_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

WorkspaceMeter make_meter(std::size_t n) {
    return WorkspaceMeter(ChargePolicy::for_instance(n), /*keep_log=*/false);
}

SeparatorOracle chordal_oracle() {
    return [](const DirectedGraph& g, const std::vector<Vertex>& subset,
              WorkspaceMeter& meter) {
        std::vector<std::uint32_t> local(g.order(), UINT32_MAX);
        for (std::size_t i = 0; i < subset.size(); ++i)
            local[subset[i]] = static_cast<std::uint32_t>(i);
        DirectedGraph sub(subset.size());
        for (Vertex v : subset)
            for (Vertex u : g.out(v))
                if (local[u] != UINT32_MAX) sub.add_arc(local[v], local[u]);
        ChordalInstance inst =
            ChordalInstance::validate(std::move(sub), WeightFn::uniform(subset.size()));
        CliqueSeparator cs = chordal_separator(inst, meter);
        std::vector<Vertex> out;
        for (Vertex v : cs.s) out.push_back(subset[v]);
        return out;
    };
}

SeparatorOracle jordan_oracle(const RegionSet& rs) {
    return [&rs](const DirectedGraph&, const std::vector<Vertex>& subset,
                 WorkspaceMeter& meter) {
        // rebuild the sub-family and run the geometric pipeline on it
        std::vector<geom::Shape> shapes;
        std::vector<Frac> weights;
        std::vector<std::uint32_t> local(rs.size(), UINT32_MAX);
        for (std::size_t i = 0; i < subset.size(); ++i) {
            local[subset[i]] = static_cast<std::uint32_t>(i);
            shapes.push_back(rs.shapes[subset[i]]);
            weights.push_back(Frac(1, static_cast<std::int64_t>(subset.size())));
        }
        std::vector<Arc> arcs;
        for (auto [u, v] : rs.arcs)
            if (local[u] != UINT32_MAX && local[v] != UINT32_MAX)
                arcs.emplace_back(local[u], local[v]);
        // members of the subset may have lost every neighbor; such regions are
        // isolated vertices and can go straight into the separator
        std::vector<Vertex> out;
        try {
            RegionSet sub = RegionSet::build(std::move(shapes),
                                             WeightFn::from_fractions(weights),
                                             std::move(arcs), /*allow_isolated=*/true);
            JordanSeparatorResult res = jordan_separator(sub, meter);
            for (Vertex v : res.separator) out.push_back(subset[v]);
        } catch (const Error&) {
            out = subset; // degraded: everything
        }
        return out;
    };
}

int run_reach(const std::string& file, Vertex from, Vertex to, double epsilon,
              double beta, double sweep_constant) {
    std::string text = io::read_file(file);
    bool reachable = false;
    switch (io::sniff_family(text)) {
    case io::Family::Penny: {
        DiskSet ds = io::parse_penny(text);
        WorkspaceMeter meter = make_meter(ds.size());
        PennyReachOptions opts;
        opts.epsilon = epsilon;
        opts.beta = beta;
        opts.sweep_constant = sweep_constant;
        reachable = penny_reach(ds, from, to, opts, meter);
        break;
    }
    case io::Family::Chordal: {
        ChordalInstance inst = io::parse_chordal(text);
        WorkspaceMeter meter = make_meter(inst.g.order());
        reachable = reach_via_separator(inst.g, from, to, chordal_oracle(), meter);
        break;
    }
    case io::Family::Jordan: {
        RegionSet rs = io::parse_jordan(text);
        WorkspaceMeter meter = make_meter(rs.size());
        reachable = reach_via_separator(rs.digraph, from, to, jordan_oracle(rs), meter);
        break;
    }
    }
    return reachable ? 0 : 1;
}

io::BenchRecord run_sep(const std::string& text, const std::string& name, double epsilon,
                        double beta, double sweep_constant) {
    io::BenchRecord rec;
    rec.instance = name;
    rec.epsilon = epsilon;
    rec.beta = beta;
    rec.sweep_constant = sweep_constant;
    rec.pipeline = "separator";
    double t0 = now_ms();
    switch (io::sniff_family(text)) {
    case io::Family::Penny: {
        DiskSet ds = io::parse_penny(text);
        rec.family = "penny";
        rec.n = ds.size();
        rec.m = ds.arcs.arc_count();
        WorkspaceMeter meter = make_meter(ds.size());
        PennyReachOptions opts;
        opts.epsilon = epsilon;
        opts.beta = beta;
        opts.sweep_constant = sweep_constant;
        PennyPipeline pipe(ds, opts, meter);
        std::vector<std::uint32_t> all(pipe.aux.vertices.size());
        for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
        PseudoSeparator ps =
            build_pseudo_separator(pipe.aux, pipe.subdiv, all, beta, meter);
        rec.separator_size = ps.size();
        rec.answer = std::to_string(ps.size());
        rec.peak_words = meter.peak_words();
        break;
    }
    case io::Family::Chordal: {
        ChordalInstance inst = io::parse_chordal(text);
        rec.family = "chordal";
        rec.n = inst.g.order();
        rec.m = underlying_undirected(inst.g).edge_count();
        WorkspaceMeter meter = make_meter(inst.g.order());
        CliqueSeparator cs = chordal_separator(inst, meter);
        rec.separator_size = cs.s.size();
        rec.answer = std::to_string(cs.s.size());
        rec.peak_words = meter.peak_words();
        break;
    }
    case io::Family::Jordan: {
        RegionSet rs = io::parse_jordan(text);
        rec.family = "jordan";
        rec.n = rs.size();
        rec.m = rs.m;
        WorkspaceMeter meter = make_meter(rs.size());
        JordanSeparatorResult res = jordan_separator(rs, meter);
        rec.separator_size = res.separator.size();
        rec.answer = std::to_string(res.separator.size());
        rec.peak_words = meter.peak_words();
        break;
    }
    }
    rec.wall_ms = now_ms() - t0;
    return rec;
}

GenSpec make_spec(const std::string& family, std::size_t n, std::uint64_t seed,
                  const std::string& style, std::size_t k, double density, bool nested,
                  const std::string& orient) {
    GenSpec spec;
    spec.family = family;
    spec.n = n;
    spec.seed = seed;
    spec.style = style;
    spec.k = k;
    spec.density = density;
    spec.nested = nested;
    spec.orient = parse_arc_policy(orient);
    return spec;
}

std::string generate_text(const GenSpec& spec) {
    if (spec.family == "penny") return io::serialize_penny(gen_penny(spec));
    if (spec.family == "chordal") return io::serialize_chordal(gen_chordal(spec));
    if (spec.family == "jordan") return io::serialize_jordan(gen_jordan(spec));
    raise("PARSE_ERROR", "unknown family '" + spec.family + "'");
}

int run_bench(const std::string& family, const std::vector<std::size_t>& sizes,
              std::size_t trials, std::uint64_t seed, double epsilon, double beta,
              double sweep_constant, const std::string& out_path) {
    io::BenchReport report;
    std::vector<std::pair<double, double>> peak_fit;
    for (std::size_t n : sizes) {
        for (std::size_t trial = 0; trial < trials; ++trial) {
            GenSpec spec = make_spec(family, n, seed + trial * 7919 + n, "grid",
                                     2, 1.0, false, "random");
            if (family == "penny") spec.style = trial % 2 ? "tri" : "grid";
            std::string text = generate_text(spec);
            io::BenchRecord rec = run_sep(
                text,
                family + "/n=" + std::to_string(n) + "/t=" + std::to_string(trial),
                epsilon, beta, sweep_constant);
            // the fitted variable follows the pipeline's own bound
            double xvar = family == "penny" ? double(rec.n) : double(rec.m);
            peak_fit.emplace_back(xvar, double(rec.peak_words));
            report.records.push_back(std::move(rec));
        }
    }
    report.exponents.emplace_back(
        family == "penny" ? "peak_words_vs_n" : "peak_words_vs_m",
        io::loglog_slope(peak_fit));
    io::write_file(out_path, io::to_json(report));
    std::cout << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-frugal separators and reachability on geometric graph classes"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string g_family, g_style = "grid", g_orient = "random", g_out;
    std::size_t g_n = 10, g_k = 2;
    std::uint64_t g_seed = 0;
    bool g_nested = false;
    double g_density = 1.0;
    gen->add_option("family", g_family, "penny | chordal | jordan")->required();
    gen->add_option("--n", g_n, "instance size")->required();
    gen->add_option("--seed", g_seed);
    gen->add_option("--style", g_style, "penny: grid | tri | random");
    gen->add_option("--k", g_k, "chordal: clique width of the k-tree");
    gen->add_option("--density", g_density, "jordan: crowding factor");
    gen->add_flag("--nested", g_nested, "jordan: containment-heavy hub family");
    gen->add_option("--orient", g_orient, "random | dag | bidirected");
    gen->add_option("-o,--output", g_out, "output file")->required();

    // ---- sep ----
    auto* sep = app.add_subcommand("sep", "compute a separator and report it");
    std::string s_file, s_out = "report.json";
    double s_eps = 0.5, s_beta = 0.5, s_sweep = 4.0;
    sep->add_option("file", s_file)->required();
    sep->add_option("--epsilon", s_eps);
    sep->add_option("--beta", s_beta);
    sep->add_option("--sweep-constant", s_sweep);
    sep->add_option("-o,--output", s_out);

    // ---- reach ----
    auto* reach = app.add_subcommand("reach", "decide reachability (exit 0 yes, 1 no)");
    std::string r_file;
    Vertex r_from = 0, r_to = 0;
    double r_eps = 0.5, r_beta = 0.5, r_sweep = 4.0;
    reach->add_option("file", r_file)->required();
    reach->add_option("--from", r_from)->required();
    reach->add_option("--to", r_to)->required();
    reach->add_option("--epsilon", r_eps);
    reach->add_option("--beta", r_beta);
    reach->add_option("--sweep-constant", r_sweep);

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "seeded pipeline sweeps with exponent fits");
    std::string b_family, b_sizes = "100,200,400", b_out = "bench.json";
    std::size_t b_trials = 3;
    std::uint64_t b_seed = 0;
    double b_eps = 0.5, b_beta = 0.5, b_sweep = 4.0;
    bench->add_option("--family", b_family, "penny | chordal | jordan")->required();
    bench->add_option("--sizes", b_sizes, "comma-separated instance sizes");
    bench->add_option("--trials", b_trials);
    bench->add_option("--seed", b_seed);
    bench->add_option("--epsilon", b_eps);
    bench->add_option("--beta", b_beta);
    bench->add_option("--sweep-constant", b_sweep);
    bench->add_option("-o,--output", b_out);

    // ---- viz ----
    auto* viz = app.add_subcommand("viz", "emit an SVG figure");
    std::string v_file, v_overlay, v_out = "out.svg";
    double v_eps = 0.5, v_sweep = 4.0;
    viz->add_option("file", v_file)->required();
    viz->add_option("--overlay", v_overlay, "sep | subdiv | aux");
    viz->add_option("--epsilon", v_eps);
    viz->add_option("--sweep-constant", v_sweep);
    viz->add_option("-o,--output", v_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            GenSpec spec = make_spec(g_family, g_n, seed_or_env(g_seed, gen->count("--seed") > 0),
                                     g_style, g_k, g_density, g_nested, g_orient);
            io::write_file(g_out, generate_text(spec));
            return 0;
        }
        if (sep->parsed()) {
            io::BenchReport report;
            report.records.push_back(
                run_sep(io::read_file(s_file), s_file, s_eps, s_beta, s_sweep));
            io::write_file(s_out, io::to_json(report));
            return 0;
        }
        if (reach->parsed()) return run_reach(r_file, r_from, r_to, r_eps, r_beta, r_sweep);
        if (bench->parsed()) {
            std::vector<std::size_t> sizes;
            std::stringstream ss(b_sizes);
            std::string item;
            while (std::getline(ss, item, ',')) sizes.push_back(std::stoul(item));
            return run_bench(b_family, sizes, b_trials,
                             seed_or_env(b_seed, bench->count("--seed") > 0), b_eps,
                             b_beta, b_sweep, b_out);
        }
        if (viz->parsed()) {
            std::string text = io::read_file(v_file);
            io::SvgOptions opts{v_overlay};
            std::string svg;
            switch (io::sniff_family(text)) {
            case io::Family::Penny: {
                DiskSet ds = io::parse_penny(text);
                WorkspaceMeter meter = make_meter(ds.size());
                if (opts.overlay == "subdiv" || opts.overlay == "aux") {
                    RectSubdivision sd = build_subdivision(ds, v_eps, v_sweep, meter);
                    AuxiliaryGraph aux = build_aux_graph(ds, sd, meter);
                    svg = io::svg_penny(ds, &sd, &aux, opts);
                } else {
                    svg = io::svg_penny(ds, nullptr, nullptr, opts);
                }
                break;
            }
            case io::Family::Chordal:
                raise("PARSE_ERROR", "no figure for chordal instances");
            case io::Family::Jordan: {
                RegionSet rs = io::parse_jordan(text);
                if (opts.overlay == "sep") {
                    WorkspaceMeter meter = make_meter(rs.size());
                    JordanSeparatorResult res = jordan_separator(rs, meter);
                    svg = io::svg_jordan(rs, &res.separator, opts);
                } else {
                    svg = io::svg_jordan(rs, nullptr, opts);
                }
                break;
            }
            }
            io::write_file(v_out, svg);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
