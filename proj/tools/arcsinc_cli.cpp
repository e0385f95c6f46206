// arcsinc: evaluate real branches of the inverse cardinal sine.
//
// Subcommands:
//   eval    evaluate one branch at one abscissa
//   plot    sample branches across their domains (line + oracle marker rows)
//   fwhm    full width at half maximum of sinc^2 lobes
//   verify  run the built-in consistency suites
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 numerical non-convergence.

#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arcsinc/applications.hpp"
#include "arcsinc/branch_geometry.hpp"
#include "arcsinc/inverse_sinc.hpp"
#include "arcsinc/output.hpp"
#include "arcsinc/special.hpp"

namespace {

using namespace arcsinc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConverge = 3;

struct CommonOpts {
    std::string method = "auto";
    std::string format = "csv";
    double tol = 0.0;  // 0 = library default
};

Method resolve_method(const std::string& name) {
    const auto m = parse_method(name);
    if (!m) throw CLI::ValidationError("--method", "unknown method '" + name + "'");
    return *m;
}

OutputFormat resolve_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw CLI::ValidationError("--format", "unknown format '" + name + "' (csv|json)");
}

NumericsPolicy resolve_policy(double tol) {
    NumericsPolicy p;
    if (tol > 0.0) {
        p.series_tol = tol;
        p.integral_tol = tol;
    }
    return p;
}

OutputRecord make_record(int k, double x, const EvalResult& r) {
    OutputRecord rec;
    rec.k = k;
    rec.x = x;
    rec.y = r.value;
    rec.method = method_name(r.method);
    rec.err_estimate = r.err_estimate;
    rec.work = r.work;
    return rec;
}

int run_eval(int k, double x, const CommonOpts& opts) {
    const Method method = resolve_method(opts.method);
    const NumericsPolicy policy = resolve_policy(opts.tol);
    const EvalResult r = evaluate(k, x, method, policy);
    const std::vector<OutputRecord> recs = {make_record(k, x, r)};
    std::fputs(render(recs, resolve_format(opts.format)).c_str(), stdout);
    return kExitOk;
}

int run_plot(int kmin, int kmax, int samples, const CommonOpts& opts) {
    if (kmin > kmax) throw CLI::ValidationError("--kmin/--kmax", "kmin must be <= kmax");
    if (samples < 2) throw CLI::ValidationError("--samples", "need at least 2 samples");
    const Method method = resolve_method(opts.method);
    const NumericsPolicy policy = resolve_policy(opts.tol);

    std::vector<int> branches;
    for (int k = kmin; k <= kmax; ++k)
        if (k != 0) branches.push_back(k);
    if (branches.empty())
        throw CLI::ValidationError("--kmin/--kmax", "range contains no nonzero branch");

    std::vector<OutputRecord> lines, markers;
    for (int k : branches) {
        const BranchDomain dom = branch_domain(k);
        for (int i = 0; i < samples; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
            const double x = dom.x1 + t * (dom.x2 - dom.x1);
            lines.push_back(make_record(k, x, evaluate(k, x, method, policy)));
            markers.push_back(make_record(k, x, oracle(k, x, policy)));
        }
    }
    lines.insert(lines.end(), markers.begin(), markers.end());
    std::fputs(render(lines, resolve_format(opts.format)).c_str(), stdout);
    return kExitOk;
}

int run_fwhm(int mmax, const CommonOpts& opts) {
    if (mmax < 0) throw CLI::ValidationError("--mmax", "mmax must be >= 0");
    const Method method = resolve_method(opts.method);
    const NumericsPolicy policy = resolve_policy(opts.tol);
    const std::vector<FwhmEntry> table = fwhm_table(mmax, method, policy);
    const double limit = std::numbers::pi / 2.0;

    std::string out;
    if (resolve_format(opts.format) == OutputFormat::csv) {
        out = "m,width\n";
        for (const FwhmEntry& e : table)
            out += std::to_string(e.m) + "," + format_double(e.width) + "\n";
        out += "limit," + format_double(limit) + "\n";
    } else {
        out = "[\n";
        for (const FwhmEntry& e : table)
            out += "  {\"m\": " + std::to_string(e.m) +
                   ", \"width\": " + format_double(e.width) + "},\n";
        out += "  {\"m\": null, \"width\": " + format_double(limit) + "}\n]\n";
    }
    std::fputs(out.c_str(), stdout);
    return kExitOk;
}

struct CheckLine {
    bool pass = false;
    std::string text;
};

void report(std::vector<CheckLine>& acc, bool pass, const std::string& text) {
    acc.push_back({pass, text});
}

int run_verify(const std::string& suite, const CommonOpts& opts) {
    if (suite != "all" && suite != "identities" && suite != "slack" && suite != "cross")
        throw CLI::ValidationError("--suite", "unknown suite '" + suite +
                                                  "' (all|identities|slack|cross)");
    const NumericsPolicy policy = resolve_policy(opts.tol);
    std::vector<CheckLine> checks;
    char buf[256];

    if (suite == "all" || suite == "identities") {
        const IdentityReport w = weber_series_identity(policy);
        std::snprintf(buf, sizeof buf,
                      "%s: measured=%.12g expected=%.12g |err|=%.3g (tol 1e-06)",
                      w.name, w.measured, w.expected, w.abs_error);
        report(checks, w.abs_error <= 1e-6, buf);

        const IdentityReport a = anger_integral_identity(policy);
        std::snprintf(buf, sizeof buf,
                      "%s: measured=%.12g expected=%.12g |err|=%.3g (tol 1e-04)",
                      a.name, a.measured, a.expected, a.abs_error);
        report(checks, a.abs_error <= 1e-4, buf);
    }

    if (suite == "all" || suite == "slack") {
        // Interior positivity of the half-period slack across branches +-1..+-8.
        double worst = std::numeric_limits<double>::infinity();
        int worst_k = 0;
        double worst_x = 0.0;
        for (int a = 1; a <= 8; ++a) {
            for (int sgn : {1, -1}) {
                const int k = sgn * a;
                const BranchDomain dom = branch_domain(k);
                for (int i = 0; i <= 1000; ++i) {
                    const double t = static_cast<double>(i) / 1000.0;
                    const double x = dom.x1 + t * (dom.x2 - dom.x1);
                    const double s = phase_slack(k, x);
                    if (s < worst) {
                        worst = s;
                        worst_k = k;
                        worst_x = x;
                    }
                }
            }
        }
        std::snprintf(buf, sizeof buf,
                      "slack_sweep: min=%.3g at k=%d x=%.6g (floor -1e-10)", worst,
                      worst_k, worst_x);
        report(checks, worst >= -1e-10, buf);
    }

    if (suite == "all" || suite == "cross") {
        // Cross-method agreement against the bisection oracle on interior
        // points of branches +-1..+-3.
        double worst_series = 0.0, worst_integral = 0.0;
        for (int a = 1; a <= 3; ++a) {
            for (int sgn : {1, -1}) {
                const int k = sgn * a;
                const BranchDomain dom = branch_domain(k);
                for (int i = 1; i <= 9; ++i) {
                    const double t = static_cast<double>(i) / 10.0;
                    const double x = dom.x1 + t * (dom.x2 - dom.x1);
                    const double ref = oracle(k, x, policy).value;
                    const double da =
                        std::fabs(series_anger(k, x, policy).value - ref);
                    const double dw =
                        std::fabs(series_weber(k, x, policy).value - ref);
                    const double di =
                        std::fabs(integral_rep(k, x, policy).value - ref);
                    worst_series = std::max({worst_series, da, dw});
                    worst_integral = std::max(worst_integral, di);
                }
            }
        }
        std::snprintf(buf, sizeof buf,
                      "cross_series: max|series - oracle|=%.3g (tol 1e-08)",
                      worst_series);
        report(checks, worst_series <= 1e-8, buf);
        std::snprintf(buf, sizeof buf,
                      "cross_integral: max|integral - oracle|=%.3g (tol 1e-06)",
                      worst_integral);
        report(checks, worst_integral <= 1e-6, buf);
    }

    int passed = 0;
    for (const CheckLine& c : checks) {
        std::printf("[%s] %s\n", c.pass ? "PASS" : "FAIL", c.text.c_str());
        if (c.pass) ++passed;
    }
    std::printf("verify: %d/%zu checks passed\n", passed, checks.size());
    return passed == static_cast<int>(checks.size()) ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inverse cardinal sine: branch evaluation and diagnostics"};
    app.require_subcommand(1);

    CommonOpts opts;
    int k = 1;
    double x = 0.0;
    int kmin = -3, kmax = 3;
    int samples = 100;
    int mmax = 10;
    std::string suite = "all";

    auto add_common = [&](CLI::App* cmd, bool with_method) {
        if (with_method)
            cmd->add_option("--method", opts.method,
                            "oracle|series-anger|series-weber|integral|auto");
        cmd->add_option("--tol", opts.tol, "target error estimate (0 = default)");
        cmd->add_option("--format", opts.format, "csv|json (default csv)");
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one branch point");
    eval_cmd->add_option("-k,--k", k, "branch index (nonzero integer)")->required();
    eval_cmd->add_option("-x,--x", x, "abscissa")->required();
    add_common(eval_cmd, true);

    CLI::App* plot_cmd =
        app.add_subcommand("plot", "sample branches (line rows, then oracle markers)");
    plot_cmd->add_option("--kmin", kmin, "lowest branch (default -3)");
    plot_cmd->add_option("--kmax", kmax, "highest branch (default 3)");
    plot_cmd->add_option("--samples", samples, "samples per branch, >= 2 (default 100)");
    add_common(plot_cmd, true);

    CLI::App* fwhm_cmd =
        app.add_subcommand("fwhm", "half-maximum widths of sinc^2 lobes 0..mmax");
    fwhm_cmd->add_option("--mmax", mmax, "highest lobe index (default 10)");
    fwhm_cmd->add_option("--method", opts.method,
                         "oracle|series-anger|series-weber|integral|auto "
                         "(default oracle)");
    fwhm_cmd->add_option("--tol", opts.tol, "target error estimate (0 = default)");
    fwhm_cmd->add_option("--format", opts.format, "csv|json (default csv)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run consistency suites");
    verify_cmd->add_option("--suite", suite, "all|identities|slack|cross (default all)");
    verify_cmd->add_option("--tol", opts.tol, "target error estimate (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(k, x, opts);
        if (plot_cmd->parsed()) return run_plot(kmin, kmax, samples, opts);
        if (fwhm_cmd->parsed()) {
            // fwhm defaults to the oracle; the flag opts into the other methods.
            if (fwhm_cmd->count("--method") == 0) opts.method = "oracle";
            return run_fwhm(mmax, opts);
        }
        if (verify_cmd->parsed()) return run_verify(suite, opts);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoConverge;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoConverge;
    }
    return kExitUsage;
}
