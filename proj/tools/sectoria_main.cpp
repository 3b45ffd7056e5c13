#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sectoria/io.hpp"
#include "sectoria/regions.hpp"
#include "sectoria/verify.hpp"

namespace {

using namespace sectoria;

RegionFamily parse_family(const std::string& token) {
    if (token == "Sector") return RegionFamily::Sector;
    if (token == "C" || token == "Cset") return RegionFamily::Cset;
    if (token == "Omega") return RegionFamily::Omega;
    if (token == "Q" || token == "Qset") return RegionFamily::Qset;
    if (token == "L" || token == "Lset") return RegionFamily::Lset;
    if (token == "D" || token == "Dset") return RegionFamily::Dset;
    if (token == "B" || token == "Bset") return RegionFamily::Bset;
    if (token == "UnitDisk" || token == "Disk") return RegionFamily::UnitDisk;
    throw std::runtime_error("unknown region family: " + token);
}

std::vector<RegionFamily> parse_family_list(const std::string& csv) {
    std::vector<RegionFamily> out;
    std::istringstream is(csv);
    std::string token;
    while (std::getline(is, token, ',')) {
        if (!token.empty()) out.push_back(parse_family(token));
    }
    if (out.empty()) throw std::runtime_error("empty family list");
    return out;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

struct AlphaFlags {
    double radians = 0.0;
    double degrees = 0.0;
    CLI::Option* rad_opt = nullptr;
    CLI::Option* deg_opt = nullptr;

    void attach(CLI::App* cmd) {
        rad_opt = cmd->add_option("--alpha", radians, "opening half-angle in radians");
        deg_opt = cmd->add_option("--alpha-deg", degrees, "opening half-angle in degrees");
        rad_opt->excludes(deg_opt);
    }
    bool given() const { return rad_opt->count() > 0 || deg_opt->count() > 0; }
    Angle value() const {
        const double r =
            deg_opt->count() > 0 ? degrees * std::numbers::pi / 180.0 : radians;
        return Angle(r); // throws std::invalid_argument outside [0, pi/2)
    }
};

int cmd_regions(const Angle angle, const std::string& families, int m,
                const std::string& out_csv, const std::string& svg_path) {
    const std::vector<RegionFamily> fams = parse_family_list(families);
    std::ostringstream csv;
    csv << "family,alpha,param,re,im\n";
    SvgBuilder svg;

    int color = 0;
    for (const RegionFamily fam : fams) {
        const RegionSpec spec{fam, angle};
        const BoundarySamples bs = boundary_samples(spec, m);
        for (std::size_t i = 0; i < bs.points.size(); ++i) {
            const cplx z = bs.points[i];
            if (!contains(spec, z, 1e-9)) {
                std::cerr << "regions: emitted point failed membership revalidation ("
                          << family_name(fam) << ")\n";
                return 1;
            }
            csv << family_name(fam) << ',' << g17(angle.radians()) << ',' << g17(bs.params[i])
                << ',' << g17(z.real()) << ',' << g17(z.imag()) << '\n';
        }
        svg.polyline(family_name(fam), bs.points, kPalette[color++ % 8]);
    }
    write_file_atomic(out_csv, csv.str());
    if (!svg_path.empty()) write_file_atomic(svg_path, svg.finish());
    std::cout << "regions: wrote " << out_csv
              << (svg_path.empty() ? "" : " and " + svg_path) << "\n";
    return 0;
}

int cmd_numrange(const std::string& matrix_path, int m, const std::string& region_token,
                 const AlphaFlags& alpha, const std::string& out_path) {
    const CMatrix a = load_matrix_file(matrix_path);
    const RangeHull hull = compute_hull(a, m);

    double scale = 1.0;
    for (const cplx p : hull.support_points) scale = std::max(scale, std::abs(p));
    for (const cplx p : hull.support_points) {
        if (planar::polygon_signed_margin(p, hull.outer_vertices) < -1e-8 * scale) {
            std::cerr << "numrange: support point escaped the outer polygon\n";
            return 1;
        }
    }

    nlohmann::ordered_json out;
    out["n"] = a.dim();
    out["angles"] = m;
    out["gap"] = hull.gap;
    nlohmann::ordered_json sp = nlohmann::ordered_json::array();
    for (const cplx p : hull.support_points) sp.push_back(point_json(p));
    out["support_points"] = std::move(sp);
    nlohmann::ordered_json ov = nlohmann::ordered_json::array();
    for (const cplx p : hull.outer_vertices) ov.push_back(point_json(p));
    out["outer_vertices"] = std::move(ov);

    bool contained = true;
    if (!region_token.empty()) {
        const RegionFamily fam = parse_family(region_token);
        if (fam != RegionFamily::UnitDisk && !alpha.given())
            throw std::runtime_error("--region " + region_token + " requires --alpha");
        const RegionSpec spec{fam, fam == RegionFamily::UnitDisk && !alpha.given()
                                       ? Angle(0.0)
                                       : alpha.value()};
        const HullContainmentReport rep = hull_in_region(hull, spec, 1e-8);
        contained = rep.pass;
        out["containment"] = {{"region", family_name(fam)},
                              {"alpha", spec.angle.radians()},
                              {"pass", rep.pass},
                              {"worst_dist", rep.worst_dist},
                              {"allowance", rep.allowance},
                              {"witness", point_json(rep.witness)}};
    }
    write_file_atomic(out_path, out.dump(2) + "\n");
    std::cout << "numrange: wrote " << out_path << "\n";
    return contained ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const std::string& out_path) {
    for (const double al : cfg.alphas) (void)Angle(al);
    if (cfg.dims.empty() || cfg.trials < 1 || cfg.m < 16 || cfg.instances < 1)
        throw std::runtime_error("verify: invalid configuration");
    for (const int d : cfg.dims)
        if (d < 1) throw std::runtime_error("verify: dims must be positive");

    const VerifyReport rep = run_verification(cfg);

    nlohmann::ordered_json out;
    out["config"] = {{"seed", cfg.seed},         {"dims", cfg.dims},
                     {"alphas", cfg.alphas},     {"trials", cfg.trials},
                     {"angles", cfg.m},          {"instances", cfg.instances}};
    nlohmann::ordered_json body = report_json(rep);
    for (auto& [key, value] : body.items()) out[key] = std::move(value);

    const std::string text = out.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file_atomic(out_path, text);
        int passed = 0, vacuous = 0;
        for (const CheckItem& c : rep.checks) {
            if (c.vacuous)
                ++vacuous;
            else if (c.pass)
                ++passed;
        }
        std::cout << "verify: " << passed << "/" << rep.checks.size() - vacuous
                  << " checks passed, " << vacuous << " vacuous -> " << out_path << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_euler(int dim, const Angle angle, double t, std::uint64_t nmin, std::uint64_t nmax,
              std::uint64_t seed, const std::string& out_path) {
    if (t < 0.0) throw std::runtime_error("euler: --t must be nonnegative");
    if (nmin < 1 || nmax < nmin) throw std::runtime_error("euler: need 1 <= nmin <= nmax");

    // dim 1 is the deterministic unit-scalar reference case; larger
    // dimensions draw a seeded certified instance.
    CMatrix unit(1);
    unit(0, 0) = 1.0;
    const SectorialMatrix sm =
        dim == 1 ? make_sectorial(unit, angle) : random_sectorial(dim, angle, seed);

    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = nmin; n <= nmax; n *= 2) ns.push_back(n);
    const EulerReport rep = euler_error_table(sm, t, ns);

    std::ostringstream csv;
    csv << "n,error,bound,ratio\n";
    bool hard_fail = false;
    for (const EulerRow& row : rep.rows) {
        if (!(std::isfinite(row.error) && row.error >= 0.0 && std::isfinite(row.bound) &&
              row.bound > 0.0)) {
            std::cerr << "euler: non-finite table row\n";
            return 1;
        }
        csv << row.n << ',' << g17(row.error) << ',' << g17(row.bound) << ','
            << g17(row.ratio) << '\n';
        hard_fail = hard_fail || (!row.vacuous && row.ratio > 1.0);
    }
    csv << "slope," << g17(rep.slope) << '\n';
    write_file_atomic(out_path, csv.str());
    std::cout << "euler: wrote " << out_path << "\n";
    return hard_fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical ranges of sectorial matrices: regions, hulls, and convergence checks"};
    app.require_subcommand(1);

    // regions
    CLI::App* regions = app.add_subcommand("regions", "sample region boundaries to CSV/SVG");
    AlphaFlags reg_alpha;
    reg_alpha.attach(regions);
    std::string reg_families = "L,Omega,Q,D,C";
    int reg_m = 512;
    std::string reg_csv, reg_svg;
    regions->add_option("--families", reg_families, "comma list: Sector,C,Omega,Q,L,D,B,UnitDisk");
    regions->add_option("--samples", reg_m, "boundary samples per family")
        ->check(CLI::Range(4, 1000000));
    regions->add_option("--out-csv", reg_csv, "output CSV path")->required();
    regions->add_option("--svg", reg_svg, "optional overlay SVG path");

    // numrange
    CLI::App* numrange = app.add_subcommand("numrange", "numerical-range hull report for a matrix");
    AlphaFlags num_alpha;
    std::string num_matrix, num_region, num_out;
    int num_m = 720;
    numrange->add_option("--matrix", num_matrix, "matrix JSON file")->required();
    numrange->add_option("--angles", num_m, "support directions")->check(CLI::Range(16, 1000000));
    numrange->add_option("--region", num_region, "containment region family");
    num_alpha.attach(numrange);
    numrange->add_option("--out", num_out, "output report JSON path")->required();

    // verify
    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    std::string ver_config, ver_out;
    RunConfig cfg;
    std::uint64_t ver_seed = cfg.seed;
    std::vector<int> ver_dims;
    std::vector<double> ver_alphas;
    int ver_trials = cfg.trials, ver_m = cfg.m, ver_instances = cfg.instances;
    verify->add_option("--config", ver_config, "JSON config file");
    CLI::Option* seed_opt = verify->add_option("--seed", ver_seed, "root seed");
    CLI::Option* dims_opt =
        verify->add_option("--dims", ver_dims, "matrix dimensions")->delimiter(',');
    CLI::Option* alphas_opt =
        verify->add_option("--alphas", ver_alphas, "angle grid (radians)")->delimiter(',');
    CLI::Option* trials_opt = verify->add_option("--trials", ver_trials, "closure trials");
    CLI::Option* m_opt = verify->add_option("--angles", ver_m, "support directions per hull");
    CLI::Option* inst_opt =
        verify->add_option("--instances", ver_instances, "instances per (dim, angle) cell");
    verify->add_option("--out", ver_out, "report JSON path (stdout when omitted)");

    // euler
    CLI::App* euler = app.add_subcommand("euler", "Euler approximation error table");
    AlphaFlags eul_alpha;
    int eul_dim = 1;
    double eul_t = 1.0;
    std::uint64_t eul_nmin = 1, eul_nmax = 1024, eul_seed = 1;
    std::string eul_out;
    euler->add_option("--dim", eul_dim, "matrix dimension (1 = unit scalar)")
        ->check(CLI::Range(1, 64));
    eul_alpha.attach(euler);
    euler->add_option("--t", eul_t, "time argument")->required();
    euler->add_option("--nmin", eul_nmin, "first step count (doubles up to nmax)");
    euler->add_option("--nmax", eul_nmax, "last step count");
    euler->add_option("--seed", eul_seed, "instance seed for dim > 1");
    euler->add_option("--out", eul_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (regions->parsed()) {
            if (!reg_alpha.given()) throw std::runtime_error("regions: --alpha is required");
            return cmd_regions(reg_alpha.value(), reg_families, reg_m, reg_csv, reg_svg);
        }
        if (numrange->parsed())
            return cmd_numrange(num_matrix, num_m, num_region, num_alpha, num_out);
        if (verify->parsed()) {
            if (!ver_config.empty()) {
                std::ifstream is(ver_config, std::ios::binary);
                if (!is) throw std::runtime_error("cannot read config: " + ver_config);
                nlohmann::json j;
                try {
                    j = nlohmann::json::parse(is);
                } catch (const nlohmann::json::parse_error& e) {
                    throw std::runtime_error(std::string("config: ") + e.what());
                }
                for (const auto& [key, value] : j.items()) {
                    if (key == "seed")
                        cfg.seed = value.get<std::uint64_t>();
                    else if (key == "dims")
                        cfg.dims = value.get<std::vector<int>>();
                    else if (key == "alphas")
                        cfg.alphas = value.get<std::vector<double>>();
                    else if (key == "trials")
                        cfg.trials = value.get<int>();
                    else if (key == "angles")
                        cfg.m = value.get<int>();
                    else if (key == "instances")
                        cfg.instances = value.get<int>();
                    else
                        throw std::runtime_error("config: unknown key \"" + key + "\"");
                }
            }
            if (seed_opt->count()) cfg.seed = ver_seed;
            if (dims_opt->count()) cfg.dims = ver_dims;
            if (alphas_opt->count()) cfg.alphas = ver_alphas;
            if (trials_opt->count()) cfg.trials = ver_trials;
            if (m_opt->count()) cfg.m = ver_m;
            if (inst_opt->count()) cfg.instances = ver_instances;
            return cmd_verify(cfg, ver_out);
        }
        if (euler->parsed()) {
            if (!eul_alpha.given()) throw std::runtime_error("euler: --alpha is required");
            return cmd_euler(eul_dim, eul_alpha.value(), eul_t, eul_nmin, eul_nmax, eul_seed,
                             eul_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
