#include "strebel/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "strebel/amplitudes.hpp"
#include "strebel/asymptotics.hpp"
#include "strebel/checks.hpp"
#include "strebel/errors.hpp"
#include "strebel/spectral.hpp"
#include "strebel/ucurve.hpp"

namespace strebel {

using Json = nlohmann::ordered_json;

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

class Csv {
public:
    explicit Csv(std::ostream& os) : os_(os) {}
    Csv& row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << csv_field(cells[i]);
        os_ << "\n";
        return *this;
    }

private:
    std::ostream& os_;
};

std::vector<double> parse_doubles(const std::vector<std::string>& items, const char* what) {
    std::vector<double> out;
    for (const auto& s : items) out.push_back(to_double(parse_rational(s)));
    if (out.empty()) throw UsageError(std::string("empty list for ") + what);
    return out;
}

void emit_json(std::ostream& os, const Json& j) { os << j.dump(2) << "\n"; }

Json regime_json(const SaddleSolution& s, double log_exact_over_prefactor) {
    Json j;
    j["regime"] = s.regime;
    j["l"] = s.l;
    j["x0"] = s.x0;
    j["S_value"] = s.S_value;
    j["S_second"] = s.S_second;
    if (s.regime == 2) {
        j["S_second_alt_a"] = s.S_second_alt_a;
        j["S_second_alt_b"] = s.S_second_alt_b;
    }
    j["log_fN_minus_log_prefactor"] = s.log_fN_minus_log_prefactor;
    j["ratio_exact_over_asymptotic"] = std::exp(log_exact_over_prefactor - s.log_fN_minus_log_prefactor);
    return j;
}

struct Options {
    std::string format = "json";
    std::string output;
    // volumes
    int n_max = 10;
    // stratum / zhat / fit
    std::vector<std::string> perimeters, ratios, params;
    // one-point
    int N = 10;
    std::string ratio = "1";
    // h
    double mu = 0, L = 1, L1 = 1;
    int kmax = 64;
    // curve
    double m = 0;
    int order = 40, samples = 64;
    double zmax = 3;
    std::string emit = "json";
    // blowup
    double eps = 1e-6;
    // zhat
    int n = 3, series_order = -1;
    // fit-kpz
    std::vector<double> window = {1e-7, 1e-4};
    std::string target = "fixed";
    // check
    std::string suite = "all";
    std::uint64_t seed = 20240611;
};

int cmd_critical(std::ostream& os) {
    const auto& c = critical_constants();
    Json j;
    j["u_c"] = c.u_c;
    j["m_c"] = c.m_c;
    j["C"] = c.C;
    j["a"] = c.a;
    j["b"] = c.b;
    emit_json(os, j);
    return kOk;
}

int cmd_volumes(const Options& o, std::ostream& os) {
    if (o.n_max < 0) throw UsageError("--n-max must be nonnegative");
    auto vols = volume_table(o.n_max);
    std::vector<std::vector<std::string>> rows;
    Json arr = Json::array();
    for (int N = 0; N <= o.n_max; ++N) {
        const Rational& v = vols[N];
        const double lx = log_abs(v);
        std::string la, ratio;
        Json row;
        row["N"] = N;
        row["value"] = to_string(v);
        row["float_value"] = to_double(v);
        row["log_exact"] = lx;
        if (N >= 1) {
            const double lasym = volume_asymptotic(N);
            la = format_double(lasym);
            ratio = format_double(std::exp(lx - lasym));
            row["log_asymptotic"] = lasym;
            row["ratio"] = std::exp(lx - lasym);
        }
        arr.push_back(row);
        rows.push_back({std::to_string(N), v.get_num().get_str(), v.get_den().get_str(),
                        format_double(to_double(v)), format_double(lx), la, ratio});
    }
    if (o.format == "csv") {
        Csv csv(os);
        csv.row({"N", "value_numerator", "value_denominator", "float_value", "log_exact",
                 "log_asymptotic", "ratio"});
        for (const auto& r : rows) csv.row(r);
    } else {
        emit_json(os, arr);
    }
    return kOk;
}

int cmd_stratum(const Options& o, std::ostream& os) {
    Stratum s;
    for (const auto& p : o.perimeters) s.perimeters.push_back(parse_rational(p));
    auto v = stratum_volume(s);
    Json j;
    Json ps = Json::array();
    for (const auto& p : s.perimeters) ps.push_back(to_string(p));
    j["perimeters"] = ps;
    j["M"] = s.perimeters.size();
    j["degree"] = v.degree;
    j["value"] = to_string(v.value);
    j["float_value"] = to_double(v.value);
    emit_json(os, j);
    return kOk;
}

int cmd_one_point(const Options& o, std::ostream& os) {
    if (o.N < 1) throw UsageError("--N must be >= 1");
    const Rational r = parse_rational(o.ratio);
    if (sgn(r) <= 0) throw UsageError("--ratio must be positive");
    const double rd = to_double(r);
    auto poly = one_point_exact(o.N);
    const Rational exact = one_point_eval(poly, r);
    const double log_exact = log_abs(exact) - std::lgamma(o.N + 1.0);
    Json j;
    j["N"] = o.N;
    j["ratio"] = to_string(r);
    j["exact"] = to_string(exact);
    j["log_exact"] = log_abs(exact);
    j["log_exact_minus_log_Nfact"] = log_exact;
    const double l = rd / o.N;
    j["l"] = l;
    j["selected_regime"] = choose_regime(o.N, l);
    Json regs = Json::array();
    for (int reg = 1; reg <= 3; ++reg) {
        try {
            regs.push_back(regime_json(saddle_regime(o.N, l, reg), log_exact));
        } catch (const NumericError& e) {
            Json fail;
            fail["regime"] = reg;
            fail["error"] = e.what();
            regs.push_back(fail);
        }
    }
    j["regimes"] = regs;
    j["regime1_printed_prefactor_ratio"] = std::exp(log_exact - regime1_log_printed(o.N, rd));
    emit_json(os, j);
    return kOk;
}

int cmd_h(const Options& o, std::ostream& os) {
    Json j;
    j["mu"] = o.mu;
    j["L"] = o.L;
    j["L1"] = o.L1;
    j["H"] = H_closed(o.mu, o.L, o.L1, o.kmax);
    j["dH_dmu"] = dH_dmu(o.mu, o.L, o.L1, o.kmax);
    emit_json(os, j);
    return kOk;
}

int cmd_curve(const Options& o, std::ostream& os) {
    if (o.samples < 2) throw UsageError("--samples must be >= 2");
    CurveModel c = build_curve(o.m, o.L, o.order);
    std::vector<std::array<double, 3>> pts;
    for (int i = 0; i < o.samples; ++i) {
        const double z = -o.zmax + 2 * o.zmax * i / (o.samples - 1);
        pts.push_back({z, curve_x(c, z), curve_y(c, z)});
    }
    if (o.emit == "csv") {
        Csv csv(os);
        csv.row({"z", "x", "y"});
        for (const auto& p : pts) csv.row({format_double(p[0]), format_double(p[1]), format_double(p[2])});
        return kOk;
    }
    Json j;
    j["m"] = c.m;
    j["L"] = c.L;
    j["u"] = c.u;
    j["K"] = c.K;
    j["times"] = c.times;
    j["tail_bound"] = c.tail_bound;
    Json s = Json::array();
    for (const auto& p : pts) s.push_back({{"z", p[0]}, {"x", p[1]}, {"y", p[2]}});
    j["samples"] = s;
    emit_json(os, j);
    return kOk;
}

int cmd_blowup(const Options& o, std::ostream& os) {
    const auto& cc = critical_constants();
    if (!(o.eps > 0) || o.eps >= 1) throw UsageError("--eps must lie in (0, 1)");
    BlowupCurve b = blowup(cc.m_c * (1 - o.eps), o.L);
    Json j;
    j["eps"] = o.eps;
    j["u_c_minus_u"] = b.eps;
    j["px"] = b.px;
    j["py"] = b.py;
    j["x_tilde"] = b.x_tilde;
    j["y_tilde"] = b.y_tilde;
    j["x_deviation"] = b.x_deviation;
    j["y_deviation"] = b.y_deviation;
    j["remainder"] = b.remainder;
    j["py_measured"] = b.py_measured;
    j["py_formula"] = (cc.u_c * cc.u_c - 4) / (6 * o.L * std::sqrt(cc.u_c));
    emit_json(os, j);
    return kOk;
}

int cmd_zhat(const Options& o, std::ostream& os) {
    auto r = parse_doubles(o.ratios, "--ratios");
    Json j;
    j["n"] = o.n;
    j["ratios"] = r;
    j["m"] = o.m;
    j["value"] = zhat_n_closed(o.n, r, o.m);
    if (o.series_order >= 0) {
        std::vector<Rational> rq;
        for (const auto& s : o.ratios) rq.push_back(parse_rational(s));
        Series s = zhat_n_series(o.n, rq, o.series_order);
        Json c = Json::array();
        for (const auto& q : s.coeffs()) c.push_back(to_string(q));
        j["series"] = c;
    }
    emit_json(os, j);
    return kOk;
}

int cmd_fit(const Options& o, std::ostream& os) {
    if (o.window.size() != 2) throw UsageError("--window takes lo,hi");
    KpzTarget t;
    if (o.target == "fixed") {
        t = KpzTarget::ZhatFixedRatios;
    } else if (o.target == "double") {
        t = KpzTarget::ZhatDoubleScaled;
    } else if (o.target == "laplace") {
        t = KpzTarget::LaplaceFixedXi;
    } else {
        throw UsageError("--target must be fixed, double or laplace");
    }
    std::vector<double> p = o.params.empty() ? std::vector<double>(static_cast<std::size_t>(o.n), 1.0)
                                             : parse_doubles(o.params, "--params");
    auto f = kpz_fit(o.n, t, p, o.window[0], o.window[1], o.samples);
    if (o.format == "csv") {
        Csv csv(os);
        csv.row({"log_u_c_minus_u", "log_value", "fit_residual"});
        for (std::size_t i = 0; i < f.log_x.size(); ++i)
            csv.row({format_double(f.log_x[i]), format_double(f.log_y[i]), format_double(f.residual[i])});
        return kOk;
    }
    Json j;
    j["n"] = o.n;
    j["target"] = o.target;
    j["params"] = p;
    j["window"] = o.window;
    j["slope"] = f.slope;
    j["intercept"] = f.intercept;
    j["max_residual"] = f.max_residual;
    j["log_u_c_minus_u"] = f.log_x;
    j["log_value"] = f.log_y;
    j["fit_residual"] = f.residual;
    emit_json(os, j);
    return kOk;
}

int cmd_check(const Options& o, std::ostream& os) {
    auto results = run_checks(o.suite, o.seed);
    bool ok = true;
    for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name;
        if (!r.detail.empty()) os << "  " << r.detail;
        os << "\n";
        ok &= r.passed;
    }
    os << (ok ? "all checks passed" : "some checks failed") << " (" << results.size() << ")\n";
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strebel graph volumes, correlators, spectral curve and asymptotics"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats = {"json", "csv"};

    auto* critical = app.add_subcommand("critical", "critical constants u_c, m_c, C, a, b");
    auto* volumes = app.add_subcommand("volumes", "exact uniform volumes and asymptotic ratios");
    volumes->add_option("--n-max", o.n_max, "largest N")->required();
    volumes->add_option("--format", o.format)->check(CLI::IsMember(formats));
    o.format = "csv";
    auto* stratum = app.add_subcommand("stratum", "volume of one stratum");
    stratum->add_option("--perimeters", o.perimeters, "p1,...,pM (rational)")->delimiter(',')->required();
    auto* one = app.add_subcommand("one-point", "exact one-point coefficient and saddle regimes");
    one->add_option("--N", o.N)->required();
    one->add_option("--ratio", o.ratio, "L1/L (rational)")->required();
    auto* h = app.add_subcommand("h", "one-point generating function H and dH/dmu");
    h->add_option("--mu", o.mu)->required();
    h->add_option("--L", o.L);
    h->add_option("--L1", o.L1);
    h->add_option("--kmax", o.kmax);
    auto* curve = app.add_subcommand("curve", "spectral curve times and samples");
    curve->add_option("--m", o.m, "mu L^2")->required();
    curve->add_option("--order", o.order, "truncation index K");
    curve->add_option("--emit", o.emit)->check(CLI::IsMember(formats));
    curve->add_option("--L", o.L);
    curve->add_option("--samples", o.samples);
    curve->add_option("--zmax", o.zmax);
    auto* blow = app.add_subcommand("blowup", "critical blow-up at 1 - m/m_c = eps");
    blow->add_option("--eps", o.eps)->required();
    blow->add_option("--L", o.L);
    auto* zhat = app.add_subcommand("zhat", "n-point generating function");
    zhat->add_option("--n", o.n)->required();
    zhat->add_option("--ratios", o.ratios, "L_i/L")->delimiter(',')->required();
    zhat->add_option("--m", o.m)->required();
    zhat->add_option("--series-order", o.series_order, "also print the exact m-series");
    auto* fit = app.add_subcommand("fit-kpz", "log-log exponent fit near the critical point");
    fit->add_option("--n", o.n)->required();
    fit->add_option("--window", o.window, "lo,hi in 1 - m/m_c")->delimiter(',');
    fit->add_option("--target", o.target)->check(CLI::IsMember({"fixed", "double", "laplace"}));
    fit->add_option("--params", o.params, "ratios, scale factors or xi values")->delimiter(',');
    fit->add_option("--samples", o.samples);
    fit->add_option("--format", o.format)->check(CLI::IsMember(formats));
    auto* check = app.add_subcommand("check", "run invariant suites");
    check->add_option("--suite", o.suite);
    check->add_option("--seed", o.seed);
    app.add_option("--output", o.output, "write to this file instead of stdout");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        // per-command defaults that differ from the shared ones
        if (std::find(args.begin(), args.end(), "fit-kpz") != args.end()) {
            o.format = "json";
            o.samples = 16;
        }
        if (std::find(args.begin(), args.end(), "volumes") != args.end()) o.format = "csv";
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) {
            err << "cannot open " << o.output << "\n";
            return kUsage;
        }
    }
    std::ostream& os = o.output.empty() ? out : file;
    try {
        if (*critical) return cmd_critical(os);
        if (*volumes) return cmd_volumes(o, os);
        if (*stratum) return cmd_stratum(o, os);
        if (*one) return cmd_one_point(o, os);
        if (*h) return cmd_h(o, os);
        if (*curve) return cmd_curve(o, os);
        if (*blow) return cmd_blowup(o, os);
        if (*zhat) return cmd_zhat(o, os);
        if (*fit) return cmd_fit(o, os);
        if (*check) return cmd_check(o, os);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

}  // namespace strebel
