// Command-line front end: orbit inspection, full generation pipeline,
// SVG rendering and the oracle cross-check.
//
// Exit codes: 0 success, 1 validation or parse error, 2 enumeration limit
// reached (partial output written), 3 internal invariant violation.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quasipack/quasipack.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPartial = 2;
constexpr int kExitInternal = 3;

quasipack::Vector parse_seed(const std::string& text) {
    quasipack::Vector seed;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            seed.push_back(std::stod(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) seed.push_back(std::stod(cur));
    return seed;
}

int run_orbit(const std::string& group, int m, const std::string& seed_text) {
    using namespace quasipack;
    GeneratorSet gens;
    if (group == "dihedral") {
        gens = dihedral_generators(m);
    } else if (group == "icosahedral") {
        gens = icosahedral_generators();
    } else {
        throw ValidationError("--group must be dihedral or icosahedral");
    }
    const Vector seed = parse_seed(seed_text);
    const OrbitPoints o = orbit(gens, seed);
    for (const Vector& p : o.points) {
        for (std::size_t i = 0; i < p.size(); ++i)
            std::cout << (i ? " " : "") << detail::format_double(p[i]);
        std::cout << "\n";
    }
    std::cout << "cardinality: " << o.points.size() << "\n";
    return kExitOk;
}

int run_generate(const std::string& config_path, std::string out_path, std::string format_text,
                 std::optional<std::size_t> max_points, std::optional<double> radius,
                 unsigned threads) {
    using namespace quasipack;
    ClusterSpec spec = load_config(config_path);
    if (max_points) spec.limits.max_points = *max_points;
    if (radius) spec.limits.max_physical_radius = *radius;
    spec.limits.validate();
    if (out_path.empty()) out_path = spec.output.path;
    if (out_path.empty()) throw ValidationError("no output path: pass --out or set output.path");
    ExportFormat fmt = spec.output.format;
    if (!format_text.empty()) fmt = parse_format(format_text);

    Pipeline pipe = build_pipeline(spec);
    std::cerr << "cluster: n=" << pipe.emb.n << " k=" << pipe.emb.k
              << " constraints=" << pipe.cs.constraints.size() << "\n";
    Packing packing = enumerate_packing(pipe.cs, pipe.emb, spec.limits, threads);
    export_packing(packing, std::filesystem::path(out_path), fmt);
    std::cerr << "points: " << packing.points.size() << " -> " << out_path << "\n";
    if (!packing.complete()) {
        std::cerr << "warning: enumeration stopped at "
                  << (packing.limit_hit == LimitHit::max_points ? "max_points" : "max_coordinate")
                  << "; output is a partial fragment\n";
        return kExitPartial;
    }
    return kExitOk;
}

int run_render(const std::string& in_path, const std::string& out_path, const std::string& axis,
               double scale, double point_radius) {
    using namespace quasipack;
    const PackingFile file = read_packing_file(in_path);
    Packing p;
    p.n = file.n;
    p.k = file.k;
    p.emb_fingerprint = file.fingerprint;
    for (std::size_t i = 0; i < file.physical.size(); ++i) {
        PackingPoint pt;
        pt.physical = file.physical[i];
        pt.lattice = file.lattice[i];
        p.points.push_back(std::move(pt));
    }

    RenderView view;
    view.scale = scale;
    view.point_radius = point_radius;
    if (!axis.empty()) {
        if (axis != "fivefold") throw ValidationError("--axis supports only \"fivefold\"");
        view.projection = RenderView::Projection::axis;
        view.axis = fivefold_axis(icosahedral_generators());
    }
    render_svg(p, view, std::filesystem::path(out_path));
    std::cerr << p.points.size() << " points -> " << out_path << "\n";
    return kExitOk;
}

int run_check(const std::string& config_path, std::size_t samples, int range,
              std::uint64_t seed) {
    using namespace quasipack;
    const ClusterSpec spec = load_config(config_path);
    Pipeline pipe = build_pipeline(spec);
    const AgreementReport rep = agreement_report(pipe.cs, pipe.emb, samples, range, seed);
    std::cout << "n=" << pipe.emb.n << " k=" << pipe.emb.k
              << " constraints=" << pipe.cs.constraints.size() << "\n";
    std::cout << rep.to_string();
    if (rep.out_of_band_disagreements > 0) {
        std::cerr << "error: determinant membership disagrees with the feasibility oracle\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasiperiodic packings of multi-shell clusters by strip projection"};
    app.require_subcommand(1);

    std::string orbit_group, orbit_seed;
    int orbit_m = 0;
    CLI::App* orbit_cmd = app.add_subcommand("orbit", "print a group orbit and its cardinality");
    orbit_cmd->add_option("--group", orbit_group, "dihedral | icosahedral")->required();
    orbit_cmd->add_option("--m", orbit_m, "dihedral order parameter");
    orbit_cmd->add_option("--seed", orbit_seed, "seed point a,b[,c]")->required();

    std::string gen_config, gen_out, gen_format;
    std::optional<std::size_t> gen_max_points;
    std::optional<double> gen_radius;
    unsigned gen_threads = 1;
    CLI::App* gen_cmd = app.add_subcommand("generate", "run the full pipeline and export points");
    gen_cmd->add_option("--config", gen_config, "cluster configuration file")->required();
    gen_cmd->add_option("--out", gen_out, "output file");
    gen_cmd->add_option("--format", gen_format, "csv | json");
    gen_cmd->add_option("--max-points", gen_max_points, "override point cap");
    gen_cmd->add_option("--radius", gen_radius, "override physical radius limit");
    gen_cmd->add_option("--threads", gen_threads, "worker threads for membership tests");

    std::string render_in, render_out, render_axis;
    double render_scale = 0.0, render_point_radius = 2.5;
    CLI::App* render_cmd = app.add_subcommand("render", "draw an exported packing as SVG");
    render_cmd->add_option("--in", render_in, "packing file (csv or json)")->required();
    render_cmd->add_option("--out", render_out, "output .svg file")->required();
    render_cmd->add_option("--axis", render_axis, "fivefold: project along the fivefold axis");
    render_cmd->add_option("--scale", render_scale, "pixels per unit (default: auto fit)");
    render_cmd->add_option("--point-radius", render_point_radius, "circle radius in pixels");

    std::string check_config;
    std::size_t check_samples = 10000;
    int check_range = 10;
    std::uint64_t check_seed = 1;
    CLI::App* check_cmd =
        app.add_subcommand("check", "cross-validate membership against the feasibility oracle");
    check_cmd->add_option("--config", check_config, "cluster configuration file")->required();
    check_cmd->add_option("--samples", check_samples, "number of sampled lattice vectors");
    check_cmd->add_option("--range", check_range, "coordinate range of samples");
    check_cmd->add_option("--seed", check_seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (orbit_cmd->parsed()) return run_orbit(orbit_group, orbit_m, orbit_seed);
        if (gen_cmd->parsed())
            return run_generate(gen_config, gen_out, gen_format, gen_max_points, gen_radius,
                                gen_threads);
        if (render_cmd->parsed())
            return run_render(render_in, render_out, render_axis, render_scale,
                              render_point_radius);
        if (check_cmd->parsed()) return run_check(check_config, check_samples, check_range, check_seed);
    } catch (const quasipack::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const quasipack::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
