#include <cavity/cli.hpp>
#include <cavity/planewave.hpp>
#include <cavity/radial_oracle.hpp>
#include <cavity/roots.hpp>
#include <cavity/spectra.hpp>
#include <cavity/wavefn.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace cavity::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Csv, Json };

struct Common {
    std::string format = "csv";
    std::string out_path;

    Format parsed() const {
        if (format == "csv") return Format::Csv;
        if (format == "json") return Format::Json;
        throw DomainError("--format must be csv or json, got '" + format + "'");
    }
};

/// A double rounded to 15 significant digits so JSON serialization is as
/// stable as the CSV text.
json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(format_number(v).c_str(), nullptr);
}

std::string csv_join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line + '\n';
}

std::string num(double v) { return format_number(v); }

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--format", common.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out_path, "Write output to this path (default stdout)");
}

// ---- mode tables shared by spectrum and oracle ---------------------------

struct LabelledMode {
    Convention convention;
    EigenMode mode;
};

const std::vector<std::string> kModeColumns = {"convention", "n", "l", "kR", "energy",
                                                "provenance", "energy_joules"};

json geometry_json(double R, double eps) {
    return json{{"R", number(R)}, {"eps", number(eps)}, {"D", number(2.0 * R)}};
}

std::string render_modes(const std::vector<LabelledMode>& modes, double R, double eps,
                         std::optional<double> mass, Format format, const json* extra) {
    auto joules = [&](double e) -> std::optional<double> {
        if (!mass) return std::nullopt;
        return energy_joules(e, *mass, R);
    };
    if (format == Format::Csv) {
        std::string text = csv_join(kModeColumns);
        for (const auto& [conv, m] : modes) {
            const auto j = joules(m.energy);
            text += csv_join({std::string(to_string(conv)), std::to_string(m.n),
                              std::to_string(m.l), num(m.kR), num(m.energy),
                              std::string(to_string(m.provenance)), j ? num(*j) : ""});
        }
        return text;
    }
    json doc;
    doc["geometry"] = geometry_json(R, eps);
    doc["units"] = std::string(kEnergyUnits);
    json rows = json::array();
    for (const auto& [conv, m] : modes) {
        json row{{"convention", std::string(to_string(conv))},
                 {"n", m.n},
                 {"l", m.l},
                 {"kR", number(m.kR)},
                 {"energy", number(m.energy)},
                 {"provenance", std::string(to_string(m.provenance))}};
        if (const auto j = joules(m.energy)) row["energy_joules"] = number(*j);
        rows.push_back(std::move(row));
    }
    doc["modes"] = std::move(rows);
    if (extra) doc.update(*extra);
    return doc.dump(2) + '\n';
}

// ---- subcommand handlers --------------------------------------------------

struct ZerosArgs {
    int l = 0;
    int count = 1;
};

std::string do_zeros(const ZerosArgs& a, Format format) {
    check_order(a.l);
    if (a.count < 1) throw DomainError("--count must be >= 1");
    const auto zeros = bessel_zeros(a.l, a.count);
    if (format == Format::Csv) {
        std::string text = csv_join({"n", "l", "x", "beta"});
        for (const auto& z : zeros)
            text += csv_join({std::to_string(z.n), std::to_string(z.l), num(z.x), num(z.beta)});
        return text;
    }
    json rows = json::array();
    for (const auto& z : zeros)
        rows.push_back({{"n", z.n}, {"l", z.l}, {"x", number(z.x)}, {"beta", number(z.beta)}});
    return json{{"zeros", rows}}.dump(2) + '\n';
}

struct SpectrumArgs {
    double R = 1.0;
    double eps = 0.0;
    int n_max = 5;
    int l_max = 0;
    std::string convention = "all";
    std::optional<double> mass;
    int oracle_points = 0;
};

std::string do_spectrum(const SpectrumArgs& a, Format format) {
    std::vector<Convention> conventions;
    if (a.convention == "all")
        conventions = {Convention::CavityI, Convention::CavityIIConventional,
                       Convention::CavityIIPaper};
    else
        conventions = {parse_convention(a.convention)};
    if (a.convention != "all" && conventions[0] != Convention::CavityI && a.eps != 0.0)
        throw DomainError("--eps must be 0 for Cavity-(ii) conventions");
    if (a.oracle_points < 0) throw DomainError("--oracle-points must be >= 0");

    std::vector<LabelledMode> modes;
    for (Convention c : conventions) {
        const CavitySpec spec{a.R, c == Convention::CavityI ? a.eps : 0.0, c};
        for (const auto& m : spectrum(spec, a.n_max, a.l_max)) modes.push_back({c, m});
    }
    if (format == Format::Json && a.convention == "all") {
        const auto report = compare_conventions(a.n_max, a.l_max, a.R, a.eps, a.oracle_points);
        json rows = json::array();
        for (const auto& r : report.rows)
            rows.push_back({{"n", r.n},
                            {"l", r.l},
                            {"E_i", number(r.e_i)},
                            {"E_ii_conventional", number(r.e_ii_conventional)},
                            {"E_ii_paper", number(r.e_ii_paper)},
                            {"ratio_paper_over_conventional",
                             number(r.ratio_paper_over_conventional)},
                            {"oracle_error",
                             r.oracle_error ? number(*r.oracle_error) : json(nullptr)}});
        const json extra{{"comparison", rows}};
        return render_modes(modes, a.R, a.eps, a.mass, format, &extra);
    }
    return render_modes(modes, a.R, a.eps, a.mass, format, nullptr);
}

struct SweepArgs {
    int n = 1;
    int l = 0;
    double R = 1.0;
    std::vector<double> eps_list;
};

std::string do_sweep(const SweepArgs& a, Format format) {
    if (a.eps_list.empty()) throw DomainError("--eps-list needs at least one value");
    const auto points = eps_convergence_sweep(a.n, a.l, a.R, a.eps_list);
    if (format == Format::Csv) {
        std::string text = csv_join({"eps", "kR", "abs_error"});
        for (const auto& p : points) text += csv_join({num(p.eps), num(p.kR), num(p.error)});
        return text;
    }
    json rows = json::array();
    for (const auto& p : points)
        rows.push_back(
            {{"eps", number(p.eps)}, {"kR", number(p.kR)}, {"abs_error", number(p.error)}});
    return json{{"n", a.n},
                {"l", a.l},
                {"R", number(a.R)},
                {"beta_pi", number(bessel_zero(a.n, a.l).x)},
                {"points", rows}}
               .dump(2) +
           '\n';
}

struct OracleArgs {
    double R = 1.0;
    double eps = 0.0;
    int l = 0;
    int count = 3;
    int points = 2000;
    bool richardson = false;

    CavitySpec spec() const {
        return {R, eps, eps > 0.0 ? Convention::CavityI : Convention::CavityIIConventional};
    }
};

std::string do_oracle(const OracleArgs& a, Format format) {
    const auto spec = a.spec();
    std::vector<LabelledMode> modes;
    for (const auto& m : oracle_spectrum(spec, a.l, a.count, a.points, a.richardson))
        modes.push_back({spec.convention, m});
    return render_modes(modes, a.R, a.eps, std::nullopt, format, nullptr);
}

std::string do_compare(const OracleArgs& a, Format format) {
    const auto spec = a.spec();
    const auto fd = oracle_spectrum(spec, a.l, a.count, a.points, a.richardson);
    std::string text = csv_join({"n", "l", "kR_analytic", "kR_oracle", "relative_error"});
    json rows = json::array();
    for (const auto& m : fd) {
        const EigenMode exact = eigenmode(spec, m.n, m.l);
        const double rel = std::abs(m.kR - exact.kR) / exact.kR;
        text += csv_join({std::to_string(m.n), std::to_string(m.l), num(exact.kR), num(m.kR),
                          num(rel)});
        rows.push_back({{"n", m.n},
                        {"l", m.l},
                        {"kR_analytic", number(exact.kR)},
                        {"kR_oracle", number(m.kR)},
                        {"relative_error", number(rel)},
                        {"analytic_provenance", std::string(to_string(exact.provenance))}});
    }
    if (format == Format::Csv) return text;
    return json{{"geometry", geometry_json(a.R, a.eps)},
                {"points", a.points},
                {"richardson", a.richardson},
                {"rows", rows}}
               .dump(2) +
           '\n';
}

struct WaveArgs {
    double R = 1.0;
    double eps = 0.0;
    int l = 0;
    int n = 1;
    int samples = 201;
};

std::string do_wavefunction(const WaveArgs& a, Format format) {
    if (a.samples < 2) throw DomainError("--samples must be >= 2");
    const CavitySpec spec{a.R, a.eps, Convention::CavityI};
    const auto chi = build_mode_chi(spec, eigenmode(spec, a.n, a.l));
    std::string text = csv_join({"r", "chi", "R_l", "density"});
    json rows = json::array();
    for (int i = 0; i < a.samples; ++i) {
        const double r = a.eps + (a.R - a.eps) * i / (a.samples - 1);
        const double c = chi(r);
        const double radial = chi.radial(r);
        const double density = chi.density(r);
        text += csv_join({num(r), num(c), num(radial), num(density)});
        rows.push_back({{"r", number(r)},
                        {"chi", number(c)},
                        {"R_l", number(radial)},
                        {"density", number(density)}});
    }
    if (format == Format::Csv) return text;
    return json{{"geometry", geometry_json(a.R, a.eps)},
                {"n", a.n},
                {"l", a.l},
                {"kR", number(chi.k * a.R)},
                {"samples", rows}}
               .dump(2) +
           '\n';
}

struct PlaneWaveArgs {
    double kr_max = 10.0;
    int grid = 21;
    int L = 40;
    double tol = 1e-8;
    bool profile = false;
};

std::string do_planewave(const PlaneWaveArgs& a, Format format, bool& passed) {
    passed = true;
    if (a.profile) {
        if (a.grid < 2) throw DomainError("--grid must be >= 2");
        std::string text = csv_join({"kr", "L"});
        json rows = json::array();
        for (int i = 0; i < a.grid; ++i) {
            const double kr = a.kr_max * i / (a.grid - 1);
            const int L = truncation_profile(kr, a.tol);
            text += csv_join({num(kr), std::to_string(L)});
            rows.push_back({{"kr", number(kr)}, {"L", L}});
        }
        if (format == Format::Csv) return text;
        return json{{"tol", number(a.tol)}, {"profile", rows}}.dump(2) + '\n';
    }
    const double err = max_identity_error(a.kr_max, a.grid, a.L);
    passed = err <= a.tol;
    const char* verdict = passed ? "PASS" : "FAIL";
    if (format == Format::Json)
        return json{{"kr_max", number(a.kr_max)},
                    {"grid", a.grid},
                    {"L", a.L},
                    {"tol", number(a.tol)},
                    {"max_error", number(err)},
                    {"verdict", verdict}}
                   .dump(2) +
               '\n';
    return fmt::format("max_error={} tol={} L={} grid={} kr_max={} verdict={}\n", num(err),
                       num(a.tol), a.L, a.grid, num(a.kr_max), verdict);
}

void check_l_max_env() {
    const char* env = std::getenv("CAVITYSPEC_LMAX");
    if (env == nullptr || *env == '\0') return;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 10000)
        throw DomainError(std::string("CAVITYSPEC_LMAX must be an integer in [1, 10000], got '") +
                          env + "'");
}

std::string one_line(std::string text) {
    for (char& c : text)
        if (c == '\n') c = ' ';
    while (!text.empty() && text.back() == ' ') text.pop_back();
    return text;
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) return "0";
    return fmt::format("{:.15g}", value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra of a particle in hard-walled spherical cavities", "cavityspec"};
    app.require_subcommand(1);

    Common common;

    ZerosArgs zeros;
    auto* zeros_cmd = app.add_subcommand("zeros", "Positive zeros of j_l and beta = x/pi");
    zeros_cmd->add_option("--l", zeros.l, "Order l")->required();
    zeros_cmd->add_option("--count", zeros.count, "Number of zeros")->required();
    add_common(zeros_cmd, common);

    SpectrumArgs spec;
    std::string convention = "all";
    double mass = 0.0;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Dimensionless cavity spectra");
    spectrum_cmd->add_option("--R", spec.R, "Outer radius");
    spectrum_cmd->add_option("--eps", spec.eps, "Core radius (Cavity-(i))");
    spectrum_cmd->add_option("--nmax", spec.n_max, "Largest n");
    spectrum_cmd->add_option("--lmax", spec.l_max, "Largest l");
    spectrum_cmd->add_option("--convention", convention, "i | ii-conv | ii-paper | all")
        ->check(CLI::IsMember({"i", "ii-conv", "ii-paper", "all"}));
    auto* mass_opt =
        spectrum_cmd->add_option("--mass", mass, "Particle mass in kg (adds energies in J, R in m)");
    spectrum_cmd->add_option("--oracle-points", spec.oracle_points,
                             "Attach finite-difference errors to the comparison (json, all)");
    add_common(spectrum_cmd, common);

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep-eps", "Annulus kR as the core radius shrinks");
    sweep_cmd->add_option("--n", sweep.n, "Radial index n")->required();
    sweep_cmd->add_option("--l", sweep.l, "Order l")->required();
    sweep_cmd->add_option("--R", sweep.R, "Outer radius");
    sweep_cmd->add_option("--eps-list", sweep.eps_list, "Comma-separated core radii")
        ->required()
        ->delimiter(',');
    add_common(sweep_cmd, common);

    OracleArgs oracle;
    auto add_oracle_flags = [&](CLI::App* cmd) {
        cmd->add_option("--R", oracle.R, "Outer radius");
        cmd->add_option("--eps", oracle.eps, "Core radius");
        cmd->add_option("--l", oracle.l, "Order l");
        cmd->add_option("--count", oracle.count, "Number of modes");
        cmd->add_option("--points", oracle.points, "Interior grid points");
        cmd->add_flag("--richardson", oracle.richardson, "Extrapolate from grids h and h/2");
        add_common(cmd, common);
    };
    auto* oracle_cmd = app.add_subcommand("oracle", "Finite-difference eigenvalues");
    add_oracle_flags(oracle_cmd);
    auto* compare_cmd = app.add_subcommand("compare", "Analytic vs finite-difference kR");
    add_oracle_flags(compare_cmd);

    WaveArgs wave;
    auto* wave_cmd = app.add_subcommand("wavefunction", "Sample chi_l, R_l and |R_l|^2");
    wave_cmd->add_option("--R", wave.R, "Outer radius");
    wave_cmd->add_option("--eps", wave.eps, "Core radius");
    wave_cmd->add_option("--l", wave.l, "Order l");
    wave_cmd->add_option("--n", wave.n, "Radial index n");
    wave_cmd->add_option("--samples", wave.samples, "Number of samples including endpoints");
    add_common(wave_cmd, common);

    PlaneWaveArgs pw;
    auto* pw_cmd = app.add_subcommand("planewave-check", "Partial-wave identity check");
    pw_cmd->add_option("--kr-max", pw.kr_max, "Largest kr on the grid");
    pw_cmd->add_option("--grid", pw.grid, "Grid points per axis");
    pw_cmd->add_option("--L", pw.L, "Truncation order");
    pw_cmd->add_option("--tol", pw.tol, "Error tolerance");
    pw_cmd->add_flag("--profile", pw.profile, "Emit the minimal L per kr instead");
    add_common(pw_cmd, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n' << app.help();
        return kExitUsage;
    }

    try {
        check_l_max_env();
        const Format format = common.parsed();
        std::string text;
        bool passed = true;
        if (zeros_cmd->parsed()) {
            text = do_zeros(zeros, format);
        } else if (spectrum_cmd->parsed()) {
            spec.convention = convention;
            if (mass_opt->count() > 0) spec.mass = mass;
            text = do_spectrum(spec, format);
        } else if (sweep_cmd->parsed()) {
            text = do_sweep(sweep, format);
        } else if (oracle_cmd->parsed()) {
            text = do_oracle(oracle, format);
        } else if (compare_cmd->parsed()) {
            text = do_compare(oracle, format);
        } else if (wave_cmd->parsed()) {
            text = do_wavefunction(wave, format);
        } else if (pw_cmd->parsed()) {
            text = do_planewave(pw, format, passed);
        }

        if (common.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(common.out_path, std::ios::binary);
            if (!file) throw DomainError("cannot open --out path '" + common.out_path + "'");
            file << text;
        }
        return passed ? kExitOk : kExitNumeric;
    } catch (const DomainError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    } catch (const NumericError& e) {
        err << "numeric failure: " << one_line(e.what()) << '\n';
        return kExitNumeric;
    }
}

}  // namespace cavity::cli
