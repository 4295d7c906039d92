#include "fock/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fock/carleson.hpp"
#include "fock/fractional.hpp"
#include "fock/io.hpp"
#include "fock/kernels.hpp"
#include "fock/norms.hpp"
#include "fock/probes.hpp"
#include "fock/verify.hpp"

namespace fock {

namespace {

double parse_exponent(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") {
        return std::numeric_limits<double>::infinity();
    }
    size_t pos = 0;
    const double p = std::stod(text, &pos);
    if (pos != text.size() || !(p > 0.0)) {
        throw std::invalid_argument("exponent must be a positive number or 'inf'");
    }
    return p;
}

struct CliState {
    // dfrac/ifrac
    double order = 0.0;
    std::string at;
    std::string poly_path;
    bool use_integral_rep = false;
    // kernel
    double alpha = 0.0;
    std::string z_text, w_text;
    bool want_error_term = false;
    bool want_truncated = false;
    // norm / sobolev / pairing
    std::string p_text = "2";
    std::string g_path;
    bool raw_pairing = false;
    std::string flavor = "D";
    // project
    std::string out_path;
    // probe
    std::string probe_id;
    int samples = 64;
    uint64_t seed = 7;
    bool list_ids = false;
    // carleson
    std::string measure_path;
    std::optional<double> beta;
    double radius = 1.0;
    double r_max = 20.0;
    int density = 64;
    std::string ball_at;
    bool embedding = false;
    int ensemble_degree = 10;
    int ensemble_count = 8;
    // verify
    bool timings = false;
    int probe_samples = 24;
};

int do_frac(const CliState& st, bool derivative, std::ostream& out) {
    const Polynomial f = load_polynomial(st.poly_path);
    const CPoint z = parse_point(st.at);
    Complex value;
    if (!st.use_integral_rep || st.order == 0.0) {
        const Polynomial g = derivative ? dfrac_series(f, st.order) : ifrac_series(f, st.order);
        value = g(z);
    } else if (derivative) {
        value = st.order > 0.0 ? dfrac_integral(f, st.order, z)
                               : dfrac_neg_integral(f, -st.order, z);
    } else {
        value = st.order > 0.0 ? ifrac_integral(f, st.order, z)
                               : ifrac_neg_integral(f, -st.order, z);
    }
    out << format_complex(value) << "\n";
    return 0;
}

int do_kernel(const CliState& st, std::ostream& out) {
    const CPoint z = parse_point(st.z_text);
    const CPoint w = parse_point(st.w_text);
    if (z.dim() != w.dim()) throw std::invalid_argument("kernel: z and w dimensions differ");
    const KernelParams p{z.dim(), st.alpha};
    Complex value;
    if (st.want_error_term) {
        value = error_term(p, z, w);
    } else if (st.want_truncated) {
        value = truncated_kernel_plus(p, z, w);
    } else {
        value = kernel_alpha(p, z, w);
    }
    out << format_complex(value) << "\n";
    return 0;
}

int do_norm(const CliState& st, std::ostream& out, std::ostream& err) {
    const Polynomial f = load_polynomial(st.poly_path);
    const double p = parse_exponent(st.p_text);
    if (std::isinf(p)) {
        out << format_significant(fock_norm_inf(f, st.alpha)) << "\n";
        return 0;
    }
    const NormEstimate est = fock_norm_p_detail(f, p, st.alpha);
    out << format_significant(est.value) << "\n";
    if (est.stderr_estimate > 0.0) {
        err << "# monte-carlo standard error " << format_significant(est.stderr_estimate, 3)
            << "\n";
    }
    return 0;
}

int do_pairing(const CliState& st, std::ostream& out) {
    const Polynomial f = load_polynomial(st.poly_path);
    const Polynomial g = load_polynomial(st.g_path);
    const Complex v = st.raw_pairing ? pairing_raw(f, g, st.alpha) : pairing(f, g, st.alpha);
    out << format_complex(v) << "\n";
    return 0;
}

int do_sobolev(const CliState& st, std::ostream& out) {
    const Polynomial f = load_polynomial(st.poly_path);
    const double p = parse_exponent(st.p_text);
    if (st.flavor != "D" && st.flavor != "I") {
        throw std::invalid_argument("sobolev: flavor must be D or I");
    }
    const SobolevFlavor flavor =
        st.flavor == "D" ? SobolevFlavor::Differentiation : SobolevFlavor::Integration;
    out << format_significant(sobolev_norm(f, p, st.alpha, st.order, flavor)) << "\n";
    return 0;
}

int do_project(const CliState& st, std::ostream& out) {
    const MixedPolynomial psi = load_mixed(st.poly_path);
    const Polynomial result = project(psi, st.alpha);
    const std::string text = polynomial_to_json(result);
    if (st.out_path.empty()) {
        out << text << "\n";
    } else {
        std::ofstream file(st.out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot write file: " + st.out_path);
        file << text << "\n";
    }
    return 0;
}

int do_probe(const CliState& st, std::ostream& out) {
    if (st.list_ids) {
        for (const std::string& id : registry_list()) out << id << "\n";
        return 0;
    }
    if (st.probe_id.empty()) throw std::invalid_argument("probe: --id is required (or --list)");
    const ProbeResult res = probe(find_spec(st.probe_id), st.samples, st.seed);
    nlohmann::ordered_json doc;
    doc["id"] = st.probe_id;
    doc["C_hat"] = res.c_hat;
    doc["drift"] = res.drift;
    out << doc.dump(2) << "\n";
    return 0;
}

int do_carleson(const CliState& st, std::ostream& out) {
    Measure mu = ParametricMeasure{1, 0.0};
    if (!st.measure_path.empty()) {
        mu = load_measure_csv(st.measure_path);
    } else if (st.beta.has_value()) {
        mu = ParametricMeasure{1, *st.beta};
    } else {
        throw std::invalid_argument("carleson: provide --measure CSV or --beta");
    }

    nlohmann::ordered_json doc;
    if (!st.ball_at.empty()) {
        const CPoint z = parse_point(st.ball_at);
        doc["ball_mass"] = ball_mass(mu, z, st.radius);
    } else if (st.embedding) {
        if (!std::holds_alternative<PointMeasure>(mu)) {
            throw std::invalid_argument("carleson --embedding requires a discrete measure");
        }
        const double p = parse_exponent(st.p_text);
        RandomSource rng(st.seed);
        std::vector<Polynomial> ensemble;
        const int n = std::get<PointMeasure>(mu).dim() == 0 ? 1 : std::get<PointMeasure>(mu).dim();
        for (int i = 0; i < st.ensemble_count; ++i) {
            ensemble.push_back(random_polynomial(rng, n, st.ensemble_degree, 8));
        }
        doc["C_hat"] = embedding_check(std::get<PointMeasure>(mu), p, st.alpha, ensemble);
        doc["ensemble"] = {{"count", st.ensemble_count},
                           {"max_degree", st.ensemble_degree},
                           {"seed", st.seed}};
    } else {
        const CarlesonScan scan =
            carleson_scan(mu, st.radius, st.alpha, st.r_max, st.density, st.seed);
        doc["verdict"] = to_string(scan.verdict);
        doc["extrapolated"] = scan.extrapolated;
        doc["sup_q"] = scan.sup_q;
        doc["annulus_radii"] = scan.annulus_radii;
        doc["annulus_max"] = scan.annulus_max;
    }
    out << doc.dump(2) << "\n";
    return 0;
}

int do_verify(const CliState& st, std::ostream& out) {
    VerifyConfig cfg;
    cfg.seed = st.seed;
    cfg.timings = st.timings;
    cfg.probe_samples = st.probe_samples;
    const VerifyReport report = run_verify(cfg);
    print_report(report, out);
    if (!st.out_path.empty()) {
        std::ofstream file(st.out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot write file: " + st.out_path);
        file << report_to_json(report);
    }
    return report.all_gates_pass() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"weighted Fock space calculator: fractional differentiation/integration, "
                 "reproducing kernels, norms, bound probes and Carleson scans"};
    app.require_subcommand(1);
    CliState st;

    CLI::App* dfrac = app.add_subcommand("dfrac", "fractional derivative at a point");
    dfrac->add_option("--s", st.order, "order")->required();
    dfrac->add_option("--at", st.at, "evaluation point, e.g. \"1+0i\" or \"1+2i,0+0i\"")->required();
    dfrac->add_option("poly", st.poly_path, "polynomial JSON file")->required();
    dfrac->add_flag("--integral", st.use_integral_rep, "use the integral representation");

    CLI::App* ifrac = app.add_subcommand("ifrac", "fractional integral at a point");
    ifrac->add_option("--s", st.order, "order")->required();
    ifrac->add_option("--at", st.at, "evaluation point")->required();
    ifrac->add_option("poly", st.poly_path, "polynomial JSON file")->required();
    ifrac->add_flag("--integral", st.use_integral_rep, "use the integral representation");

    CLI::App* kernel = app.add_subcommand("kernel", "weighted reproducing kernel value");
    kernel->add_option("--alpha", st.alpha, "weight")->required();
    kernel->add_option("--z", st.z_text, "first point")->required();
    kernel->add_option("--w", st.w_text, "second point")->required();
    kernel->add_flag("--error-term", st.want_error_term, "low-degree correction only");
    kernel->add_flag("--truncated", st.want_truncated, "high-degree part only (alpha >= 2n)");

    CLI::App* norm = app.add_subcommand("norm", "weighted p-norm of a polynomial");
    norm->add_option("--p", st.p_text, "exponent (positive real or 'inf')")->required();
    norm->add_option("--alpha", st.alpha, "weight")->required();
    norm->add_option("poly", st.poly_path, "polynomial JSON file")->required();

    CLI::App* pairing_cmd = app.add_subcommand("pairing", "adjusted inner product of two polynomials");
    pairing_cmd->add_option("--alpha", st.alpha, "weight")->required();
    pairing_cmd->add_option("f", st.poly_path, "first polynomial JSON")->required();
    pairing_cmd->add_option("g", st.g_path, "second polynomial JSON")->required();
    pairing_cmd->add_flag("--raw", st.raw_pairing, "unadjusted |z|^{-alpha} pairing");

    CLI::App* sobolev = app.add_subcommand("sobolev", "radial-operator norm");
    sobolev->add_option("--p", st.p_text, "exponent (positive real or 'inf')")->required();
    sobolev->add_option("--alpha", st.alpha, "weight")->required();
    sobolev->add_option("--s", st.order, "order")->required();
    sobolev->add_option("--flavor", st.flavor, "D (differentiation) or I (integration)");
    sobolev->add_option("poly", st.poly_path, "polynomial JSON file")->required();

    CLI::App* project_cmd = app.add_subcommand("project", "reproducing operator on a mixed polynomial");
    project_cmd->add_option("--alpha", st.alpha, "weight")->required();
    project_cmd->add_option("mixed", st.poly_path, "mixed polynomial JSON file")->required();
    project_cmd->add_option("--out", st.out_path, "write the holomorphic result here");

    CLI::App* probe_cmd = app.add_subcommand("probe", "fitted constant for a registered inequality");
    probe_cmd->add_option("--id", st.probe_id, "inequality id (see --list)");
    probe_cmd->add_option("--samples", st.samples, "sample count (>= 16)")
        ->capture_default_str();
    probe_cmd->add_option("--seed", st.seed, "random seed")->capture_default_str();
    probe_cmd->add_flag("--list", st.list_ids, "list registered inequality ids");

    CLI::App* carleson_cmd = app.add_subcommand("carleson", "Carleson window scan / ball mass / embedding");
    carleson_cmd->add_option("--measure", st.measure_path, "discrete measure CSV");
    carleson_cmd->add_option("--beta", st.beta, "parametric density exponent (1+|z|)^{-beta}");
    carleson_cmd->add_option("--r", st.radius, "ball radius")->capture_default_str();
    carleson_cmd->add_option("--alpha", st.alpha, "weight")->required();
    carleson_cmd->add_option("--rmax", st.r_max, "scan window")->capture_default_str();
    carleson_cmd->add_option("--density", st.density, "points per annulus")->capture_default_str();
    carleson_cmd->add_option("--ball", st.ball_at, "report the mass of one ball centered here");
    carleson_cmd->add_flag("--embedding", st.embedding, "fitted embedding constant (discrete only)");
    carleson_cmd->add_option("--p", st.p_text, "embedding exponent")->capture_default_str();
    carleson_cmd->add_option("--ensemble-degree", st.ensemble_degree, "embedding ensemble degree")
        ->capture_default_str();
    carleson_cmd->add_option("--ensemble-count", st.ensemble_count, "embedding ensemble size")
        ->capture_default_str();
    carleson_cmd->add_option("--seed", st.seed, "random seed")->capture_default_str();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full oracle/property suite");
    verify_cmd->add_option("--seed", st.seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--out", st.out_path, "write the JSON report here");
    verify_cmd->add_option("--probe-samples", st.probe_samples, "samples per inequality probe")
        ->capture_default_str();
    verify_cmd->add_flag("--timings", st.timings,
                         "include wall-clock timings (report no longer byte-stable)");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(dfrac)) return do_frac(st, true, out);
        if (app.got_subcommand(ifrac)) return do_frac(st, false, out);
        if (app.got_subcommand(kernel)) return do_kernel(st, out);
        if (app.got_subcommand(norm)) return do_norm(st, out, err);
        if (app.got_subcommand(pairing_cmd)) return do_pairing(st, out);
        if (app.got_subcommand(sobolev)) return do_sobolev(st, out);
        if (app.got_subcommand(project_cmd)) return do_project(st, out);
        if (app.got_subcommand(probe_cmd)) return do_probe(st, out);
        if (app.got_subcommand(carleson_cmd)) return do_carleson(st, out);
        if (app.got_subcommand(verify_cmd)) return do_verify(st, out);
    } catch (const numerical_error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace fock
