#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "solitonlab/check/acceptance.hpp"
#include "solitonlab/errors.hpp"
#include "solitonlab/format.hpp"
#include "solitonlab/geometry/catalog.hpp"
#include "solitonlab/geometry/export.hpp"
#include "solitonlab/geometry/residual_grid.hpp"
#include "solitonlab/profiles/closed_form.hpp"
#include "solitonlab/profiles/integrate.hpp"
#include "solitonlab/profiles/trajectory_io.hpp"
#include "solitonlab/symbolic/cases.hpp"
#include "solitonlab/symbolic/json_dump.hpp"

namespace {

using namespace solitonlab;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kTolerance = 3;
constexpr int kNumeric = 4;

constexpr double kCompareSlope = 1e3;

/// Raised for I/O problems; reported verbatim with the numeric-failure exit code.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

double parse_real(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value)) {
        throw InvalidInput("invalid number '" + text + "' in " + what);
    }
    return value;
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
    const auto parts = split(text, 'x');
    if (parts.size() != 2) throw InvalidInput("grid must look like WxH, got '" + text + "'");
    std::size_t dims[2];
    for (int i = 0; i < 2; ++i) {
        const double v = parse_real(parts[i], "--grid");
        if (v < 1 || v != std::floor(v) || v > 1e6) throw InvalidInput("grid sizes must be positive integers");
        dims[i] = static_cast<std::size_t>(v);
    }
    return {dims[0], dims[1]};
}

std::pair<double, double> parse_span(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw InvalidInput("span must look like LO:HI, got '" + text + "'");
    return {parse_real(parts[0], "--span"), parse_real(parts[1], "--span")};
}

geo::Density parse_numeric_density(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw InvalidInput("density needs three comma-separated values");
    return {parse_real(parts[0], "--density"), parse_real(parts[1], "--density"), parse_real(parts[2], "--density")};
}

// Each entry is an expression in the parameters; a bare a, b or g names alpha, beta or gamma.
sym::SymbolicDensity parse_symbolic_density(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw InvalidInput("density needs three comma-separated entries");
    sym::DiffPoly out[3];
    for (int i = 0; i < 3; ++i) {
        const std::string& e = parts[i];
        if (e == "a") {
            out[i] = sym::DiffPoly::of(sym::Base::alpha);
        } else if (e == "b") {
            out[i] = sym::DiffPoly::of(sym::Base::beta);
        } else if (e == "g") {
            out[i] = sym::DiffPoly::of(sym::Base::gamma);
        } else {
            out[i] = sym::DiffPoly::parse(e);
            for (const auto& s : out[i].symbols()) {
                if (!s.is_parameter()) throw InvalidInput("density entry '" + e + "' uses non-parameter " + s.name());
            }
        }
    }
    return {out[0], out[1], out[2]};
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw IoError("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void close(const std::string& path) {
        if (file_.is_open()) {
            file_.close();
            if (!file_) throw IoError("failed writing '" + path + "'");
        }
    }

private:
    std::ofstream file_;
};

struct ChartOptions {
    std::string family;
    geo::ChartParams params;
    std::string span;

    void add(CLI::App* cmd) {
        cmd->add_option("--family", family, "surface family")->required()->check(
            CLI::IsMember(geo::chart_family_names()));
        cmd->add_option("--alpha", params.alpha, "family parameter alpha");
        cmd->add_option("--beta", params.beta, "family parameter beta");
        cmd->add_option("--gamma", params.gamma, "family parameter gamma");
        cmd->add_option("--a0", params.a0);
        cmd->add_option("--a1", params.a1);
        cmd->add_option("--b0", params.b0);
        cmd->add_option("--b1", params.b1);
        cmd->add_option("--b2", params.b2);
        cmd->add_option("--radius", params.radius, "cylinder radius");
        cmd->add_option("--r0", params.r0, "rotational: r at the span start");
        cmd->add_option("--dr0", params.dr0, "rotational: r' at the span start");
        cmd->add_option("--span", span, "rotational: s-range LO:HI (default 0:2)");
    }

    geo::SurfaceChart build() {
        if (!span.empty()) std::tie(params.s_lo, params.s_hi) = parse_span(span);
        return geo::chart_from_name(family, params);
    }
};

struct ExpandOptions {
    std::string case_name;
    std::string target = "riemann";
    std::string density;
    std::string c;
    std::optional<unsigned> degree;
};

int run_expand(const ExpandOptions& o) {
    sym::TrigPoly result;
    if (!o.case_name.empty()) {
        if (!o.density.empty() || !o.c.empty()) throw InvalidInput("--case fixes the density; drop --density/--c");
        result = sym::expand_case(sym::find_case(o.case_name));
    } else {
        const sym::Target target = sym::parse_target(o.target);
        const sym::SymbolicDensity density =
            o.density.empty() ? sym::SymbolicDensity::generic() : parse_symbolic_density(o.density);
        if (target == sym::Target::cmc || target == sym::Target::frenet) {
            if (!o.density.empty()) throw InvalidInput("target '" + o.target + "' has a fixed density");
        }
        if (!o.c.empty() && target != sym::Target::cmc) throw InvalidInput("--c applies to --target cmc only");
        switch (target) {
            case sym::Target::riemann: result = sym::build_riemann_residual(density); break;
            case sym::Target::general: result = sym::build_general_cleared_residual(density); break;
            case sym::Target::frenet: result = sym::build_frenet_residual(); break;
            case sym::Target::cmc:
                result = o.c.empty() ? sym::build_cmc_squared_residual()
                                     : sym::build_cmc_squared_residual(sym::DiffPoly::parse(o.c));
                break;
        }
    }
    const auto json = o.degree ? sym::degree_to_json(result, *o.degree) : sym::to_json(result);
    std::cout << json.dump(2) << '\n';
    return kOk;
}

struct ResidualOptions {
    ChartOptions chart;
    std::string density = "0,0,0";
    std::string grid = "50x50";
    double tol = 1e-6;
    std::string out;
    std::string format = "csv";
};

int run_residual(ResidualOptions& o) {
    const geo::Density density = parse_numeric_density(o.density);
    const auto [ns, nt] = parse_grid(o.grid);
    geo::SurfaceChart chart = o.chart.build();
    const geo::GridResidual res = geo::residual_grid(chart, density, geo::grid_over(chart, ns, nt));

    Output out(o.out);
    if (o.format == "csv") {
        geo::write_residual_csv(out.stream(), res);
    } else {
        nlohmann::ordered_json j;
        j["family"] = o.chart.family;
        j["density"] = {density.alpha, density.beta, density.gamma};
        j["grid"] = {ns, nt};
        j["max"] = res.max;
        j["mean"] = res.mean;
        nlohmann::ordered_json samples = nlohmann::ordered_json::array();
        for (const auto& p : res.samples) {
            samples.push_back({p.s, p.t, p.position.x, p.position.y, p.position.z, p.H, p.Hphi});
        }
        j["samples"] = std::move(samples);
        out.stream() << j.dump() << '\n';
    }
    out.close(o.out);
    std::cout << "max=" << format_double(res.max) << " mean=" << format_double(res.mean) << '\n';
    return res.max < o.tol ? kOk : kTolerance;
}

struct ProfileOptions {
    std::string family;
    profiles::OdeSpec spec;
    std::optional<double> value0;
    std::optional<double> deriv0;
    std::string span = "0:3";
    std::string compare;
    double b0 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double tol = 1e-7;
    std::string out;
    std::string format = "csv";
};

int run_profile(ProfileOptions& o) {
    profiles::OdeSpec spec = o.spec;
    spec.family = profiles::parse_family(o.family);
    std::tie(spec.start, spec.end) = parse_span(o.span);

    std::optional<profiles::Profile1D> reference;
    if (!o.compare.empty()) {
        const auto cf = profiles::parse_closed_form(o.compare);
        const profiles::ClosedFormParams p{spec.alpha, spec.beta, spec.gamma, 0.0, spec.a1, o.b0, o.b1, o.b2};
        const profiles::OdeSpec matched = profiles::matching_ode(cf, p, spec.start, spec.end);
        if (matched.family != spec.family) {
            throw InvalidInput("'" + o.compare + "' solves the " + std::string(profiles::family_name(matched.family)) +
                               " equation");
        }
        reference = profiles::closed_form(cf, p);
        spec.value0 = matched.value0;
        spec.deriv0 = matched.deriv0;
    } else if (spec.family != profiles::OdeFamily::rotational) {
        spec.value0 = 0.0;
    }
    if (o.value0) spec.value0 = *o.value0;
    if (o.deriv0) spec.deriv0 = *o.deriv0;

    const profiles::ProfileTrajectory tr = profiles::integrate(spec);
    const auto meta = profiles::trajectory_metadata(tr);
    if (o.out.empty()) {
        if (o.format == "csv") {
            profiles::write_trajectory_csv(std::cout, tr);
        } else {
            std::cout << meta.dump(2) << '\n';
        }
    } else {
        Output csv(o.out + ".csv");
        profiles::write_trajectory_csv(csv.stream(), tr);
        csv.close(o.out + ".csv");
        Output json(o.out + ".json");
        json.stream() << meta.dump(2) << '\n';
        json.close(o.out + ".json");
    }

    const auto& last = tr.last();
    std::cout << "stop_reason=" << profiles::stop_reason_name(tr.stop_reason()) << " param=" << format_double(last.param)
              << " value=" << format_double(last.value) << " deriv=" << format_double(last.deriv);
    int code = kOk;
    if (reference) {
        // Near a blow-up a tiny shift of the singularity moves g by |g'| times that shift, so
        // the comparison stops where the slope exceeds kCompareSlope.
        double worst = 0.0;
        double compared_to = tr.lo();
        for (const auto& s : tr.samples()) {
            if (std::abs(s.deriv) > kCompareSlope) break;
            worst = std::max(worst, std::abs(s.value - (*reference)(s.param).value));
            compared_to = s.param;
        }
        std::cout << " compared_to=" << format_double(compared_to) << " max_deviation=" << format_double(worst);
        if (!(worst < o.tol)) code = kTolerance;
    }
    std::cout << '\n';
    return code;
}

struct MeshOptions {
    ChartOptions chart;
    std::string grid = "20x40";
    std::string out;
    bool close_seam = false;
};

int run_mesh(MeshOptions& o) {
    const auto [ns, nt] = parse_grid(o.grid);
    geo::SurfaceChart chart = o.chart.build();
    const geo::Grid grid = geo::grid_over(chart, ns, nt);
    if (o.out.empty()) {
        geo::write_obj(std::cout, chart, grid, o.close_seam);
        return kOk;
    }
    Output out(o.out);
    const geo::MeshStats stats = geo::write_obj(out.stream(), chart, grid, o.close_seam);
    out.close(o.out);
    std::cout << "vertices=" << stats.vertices << " triangles=" << stats.triangles << '\n';
    return kOk;
}

int run_check(const std::string& suite) {
    bool all = true;
    for (int id : check::suite_criteria(check::parse_suite(suite))) {
        const check::CriterionResult r = check::run_criterion(id);
        std::cout << check::format_result(r) << '\n' << std::flush;
        all = all && r.pass;
    }
    return all ? kOk : kTolerance;
}

std::string one_line(std::string text) {
    for (char& ch : text) {
        if (ch == '\n' || ch == '\r') ch = ' ';
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    return text;
}

int fail(int code, const std::string& message) {
    std::cout.flush();
    std::cerr << "solitonlab: " << one_line(message) << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic and numeric checks for translating solitons with log-linear density"};
    app.require_subcommand(1);

    ExpandOptions expand;
    auto* cmd_expand = app.add_subcommand("expand", "expand a cleared residual and print its Fourier coefficients");
    cmd_expand->add_option("--case", expand.case_name, "named case");
    cmd_expand->add_option("--target", expand.target, "riemann | cmc | frenet | general")
        ->check(CLI::IsMember({"riemann", "cmc", "frenet", "general"}));
    cmd_expand->add_option("--density", expand.density, "three parameter expressions, e.g. a,0,0");
    cmd_expand->add_option("--c", expand.c, "cmc constant expression (default: the symbol c)");
    cmd_expand->add_option("-n,--degree", expand.degree, "print only this degree");

    ResidualOptions residual;
    auto* cmd_residual = app.add_subcommand("residual", "sample |H_phi| of a surface over a grid");
    residual.chart.add(cmd_residual);
    cmd_residual->add_option("--density", residual.density, "alpha,beta,gamma");
    cmd_residual->add_option("--grid", residual.grid, "WxH samples in s and t");
    cmd_residual->add_option("--tol", residual.tol, "pass threshold for max |H_phi|");
    cmd_residual->add_option("--out", residual.out, "write samples here instead of standard output");
    cmd_residual->add_option("--format", residual.format)->check(CLI::IsMember({"csv", "json"}));

    ProfileOptions profile;
    auto* cmd_profile = app.add_subcommand("profile", "integrate a profile equation");
    cmd_profile->add_option("family", profile.family, "rotational | translation | planar")
        ->required()
        ->check(CLI::IsMember({"rotational", "translation", "planar"}));
    cmd_profile->add_option("--alpha", profile.spec.alpha);
    cmd_profile->add_option("--beta", profile.spec.beta);
    cmd_profile->add_option("--gamma", profile.spec.gamma);
    cmd_profile->add_option("--a1", profile.spec.a1);
    cmd_profile->add_option("--r0,--value0", profile.value0, "value at the span start");
    cmd_profile->add_option("--dr0,--deriv0", profile.deriv0, "derivative at the span start");
    cmd_profile->add_option("--span", profile.span, "LO:HI");
    cmd_profile->add_option("--rtol", profile.spec.rtol);
    cmd_profile->add_option("--atol", profile.spec.atol);
    cmd_profile->add_option("--compare", profile.compare,
                            "closed form (th7-case3 | th7-case4 | grim-reaper ...) supplying initial data and reference");
    cmd_profile->add_option("--b0", profile.b0);
    cmd_profile->add_option("--b1", profile.b1);
    cmd_profile->add_option("--b2", profile.b2);
    cmd_profile->add_option("--tol", profile.tol, "pass threshold for --compare");
    cmd_profile->add_option("--out", profile.out, "write PREFIX.csv and PREFIX.json");
    cmd_profile->add_option("--format", profile.format)->check(CLI::IsMember({"csv", "json"}));

    MeshOptions mesh;
    auto* cmd_mesh = app.add_subcommand("mesh", "export a surface grid as OBJ");
    mesh.chart.add(cmd_mesh);
    cmd_mesh->add_option("--grid", mesh.grid, "WxH samples in s and t");
    cmd_mesh->add_option("--out", mesh.out, "OBJ path (default: standard output)");
    cmd_mesh->add_flag("--close-seam", mesh.close_seam, "join the last t column to the first");

    std::string suite = "all";
    auto* cmd_check = app.add_subcommand("check", "run acceptance criteria");
    cmd_check->add_option("--suite", suite)->check(CLI::IsMember({"symbolic", "numeric", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail(kUsage, e.what());
    }

    try {
        if (*cmd_expand) return run_expand(expand);
        if (*cmd_residual) return run_residual(residual);
        if (*cmd_profile) return run_profile(profile);
        if (*cmd_mesh) return run_mesh(mesh);
        if (*cmd_check) return run_check(suite);
    } catch (const InvalidInput& e) {
        return fail(kUsage, e.what());
    } catch (const SingularChart& e) {
        return fail(kNumeric, e.what());
    } catch (const DomainError& e) {
        return fail(kNumeric, e.what());
    } catch (const NumericFailure& e) {
        return fail(kNumeric, e.what());
    } catch (const IoError& e) {
        return fail(kNumeric, e.what());
    } catch (const std::exception& e) {
        return fail(kNumeric, e.what());
    }
    return kUsage;
}
