#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "selberg/asymptotics.hpp"
#include "selberg/errors.hpp"
#include "selberg/explicit_formula.hpp"
#include "selberg/group.hpp"
#include "selberg/testfun.hpp"
#include "selberg/trace_terms.hpp"

#ifndef SELBERG_DEFAULT_DATA_DIR
#define SELBERG_DEFAULT_DATA_DIR "data"
#endif

namespace selberg::cli {

namespace {

struct Config {
    std::string command;
    std::string eigen_path, zeros_path, resonance_path;
    std::string group = "modular";
    std::string family = "gauss_heat";
    std::optional<double> t, p, p2, b, x0, tol;
    std::string s = "0.3+7i";
    std::string t_grid, x_grid, R_grid, p_values = "0.75,1,2";
    std::size_t finite = 0;
    bool no_resonances = false;
    std::string output;
    std::string format = "table";
};

std::string data_dir() {
    const char* env = std::getenv("SELBERG_DATA_DIR");
    return env && *env ? env : SELBERG_DEFAULT_DATA_DIR;
}

double parse_real(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParseError("cannot read " + what + " from '" + s + "'");
    }
    if (used != s.size()) throw ParseError("cannot read " + what + " from '" + s + "'");
    return v;
}

numerics::Complex parse_complex(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    if (s.empty()) throw ParseError("empty complex number");
    if (s.back() != 'i') return {parse_real(s, "complex number"), 0.0};
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    auto imag = [](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_real(part, "imaginary part");
    };
    if (split == std::string::npos) return {0.0, imag(s)};
    return {parse_real(s.substr(0, split), "real part"), imag(s.substr(split))};
}

class Reporter {
public:
    Reporter(std::ostream& out, bool csv) : out_(out), prefix_(csv ? "# " : "") {}
    template <class T>
    void note(const std::string& key, const T& value) {
        std::ostringstream os;
        os << value;
        out_ << prefix_ << key << ": " << os.str() << '\n';
    }
    void number(const std::string& key, double value) { note(key, format_number(value)); }
    void term(const std::string& key, double value, double error) {
        note(key, format_number(value) + " +- " + format_number(error));
    }
    void warnings(const Warnings& w) {
        for (const auto& x : w) note(std::string("warning[") + to_string(x.kind) + "]", x.message);
    }
    void check(const std::string& name, bool pass, const std::string& detail) {
        note("check", std::string(pass ? "PASS " : "FAIL ") + name + " (" + detail + ")");
        if (!pass) failed_ = true;
    }
    bool failed() const { return failed_; }

private:
    std::ostream& out_;
    std::string prefix_;
    bool failed_ = false;
};

struct Context {
    group::GroupDescriptor g;
    std::optional<group::GenericGroup> generic;
    group::SpectralDataset data;
};

Context load(const Config& c, Reporter& rep) {
    Context ctx;
    if (c.group == "modular") {
        ctx.g = group::modular_group();
    } else {
        ctx.generic = group::load_group_descriptor(c.group);
        ctx.g = ctx.generic->descriptor;
    }
    if (c.x0) {
        ctx.g.x0 = *c.x0;
        ctx.g.validate();
    }
    const std::string dir = data_dir();
    const auto eigen = c.eigen_path.empty() ? dir + "/maass_eigenvalues.txt" : c.eigen_path;
    const bool pairs = !c.resonance_path.empty();
    const auto res = pairs ? c.resonance_path : (c.zeros_path.empty() ? dir + "/riemann_zeros.txt" : c.zeros_path);
    for (const auto& path : {eigen, res})
        if (!std::filesystem::exists(path)) throw ParseError("data file not found: '" + path + "'");
    ctx.data = group::load_spectral_dataset(
        eigen, res, pairs ? group::ResonanceMode::explicit_pairs : group::ResonanceMode::riemann_half, ctx.g.mu0);

    rep.note("command", c.command);
    rep.note("group", ctx.g.name.empty() ? c.group : ctx.g.name);
    rep.number("x0", ctx.g.x0);
    rep.number("mu0", ctx.data.mu0);
    rep.number("B0", ctx.g.B0);
    rep.note("eigenvalue file", eigen);
    rep.number("eigenvalue completeness bound", ctx.data.completeness_bound);
    rep.note(pairs ? "resonance file" : "zeta zero file", res);
    rep.number("resonance completeness bound", ctx.data.resonance_bound);
    return ctx;
}

std::vector<group::HyperbolicClass> classes_to(const Context& ctx, double limit, Reporter& rep) {
    if (ctx.generic) {
        if (limit > ctx.generic->classes_complete_to)
            throw InsufficientEnumeration("descriptor lists classes to norm " +
                                          format_number(ctx.generic->classes_complete_to) + ", needed " +
                                          format_number(limit));
        return group::expand_powers(ctx.generic->primitive_classes, limit).classes;
    }
    rep.number("class enumeration norm limit", limit);
    return group::enumerate_hyperbolic(ctx.g, limit).classes;
}

testfun::TestFunctionPair make_pair(const Config& c, Reporter& rep) {
    const double t = c.t.value_or(0.1);
    rep.note("test function", c.family);
    rep.number("t", t);
    if (c.family == "gauss_heat") return testfun::make_gauss_heat(t);
    if (c.family == "cauchy_gauss") {
        const double p = c.p.value_or(1.0);
        rep.number("p", p);
        return testfun::make_cauchy_gauss(t, p);
    }
    throw ValidationError("unknown test function family '" + c.family + "'");
}

double tolerance(const Config& c, double fallback, Reporter& rep) {
    const double tol = c.tol.value_or(fallback);
    if (!(tol > 1e-14 && tol < 1e-2)) throw ValidationError("tol must lie in (1e-14, 1e-2)");
    rep.number("tol", tol);
    return tol;
}

std::vector<double> grid_or(const std::string& spec, const std::string& fallback, const std::string& name,
                            Reporter& rep) {
    const auto& s = spec.empty() ? fallback : spec;
    rep.note(name, s);
    return parse_grid(s);
}

void verify_trace(const Config& c, std::ostream& out, Reporter& rep) {
    auto ctx = load(c, rep);
    auto pair = make_pair(c, rep);
    const double tol = tolerance(c, 1e-5, rep);
    trace::TraceBreakdown tb;
    if (ctx.generic) {
        const double limit = trace::sp_norm_limit(pair, ctx.g.B0);
        tb = trace::verify_trace_identity(pair, ctx.g, ctx.data, classes_to(ctx, limit, rep), limit);
    } else {
        tb = trace::verify_trace_identity(pair, ctx.g, ctx.data);
    }
    for (const auto& [k, v] : tb.truncation_report) rep.number("cutoff " + k, v);
    auto err = [&](const char* k) { return tb.term_errors.count(k) ? tb.term_errors.at(k) : 0.0; };
    rep.term("spectral sum", tb.spectral_sum, err("spectral"));
    rep.term("identity term H", tb.identity_H, err("H"));
    rep.term("elliptic term S_R", tb.elliptic_SR, err("S_R"));
    rep.term("hyperbolic term S_P", tb.hyperbolic_SP, err("S_P"));
    rep.term("parabolic term P", tb.parabolic_P, err("P"));
    for (const auto& [k, v] : tb.term_errors) rep.number("error estimate " + k, v);
    rep.warnings(tb.warnings);
    rep.number("residual", tb.residual);
    emit({{"spectral_sum", "H", "S_R", "S_P", "P", "residual"},
          {{tb.spectral_sum, tb.identity_H, tb.elliptic_SR, tb.hyperbolic_SP, tb.parabolic_P, tb.residual}}},
         c.format, c.output, out);
    rep.check("trace identity residual", std::abs(tb.residual) < tol,
              "|" + format_number(tb.residual) + "| vs " + format_number(tol));
}

void theorem1(const Config& c, std::ostream& out, Reporter& rep) {
    auto ctx = load(c, rep);
    auto pair = make_pair(c, rep);
    const double tol = tolerance(c, 5e-3, rep);
    const double b = c.b.value_or(ctx.g.b0());
    rep.number("b", b);
    const double limit = trace::sp_norm_limit(pair, ctx.g.B0);
    auto r = trace::theorem1_terms(pair, ctx.g, ctx.data, classes_to(ctx, limit, rep), limit, b);
    rep.number("spectral cutoff r", r.r_cut);
    rep.number("resonance cutoff gamma", r.gamma_cut);
    const std::vector<std::pair<std::string, double>> terms = {
        {"W", r.W},         {"SP1", r.SP1},       {"SP2", r.SP2},         {"SP3", r.SP3},
        {"G", r.G},         {"M", r.M},           {"S_ex", r.S_ex},       {"S_R", r.S_R},
        {"S0", r.S0},       {"pole_term", r.pole_term}, {"h0_term", r.h0_term}, {"g0_term", r.g0_term},
        {"H", r.H},         {"SP_direct", r.SP_direct}, {"SP_inf", r.SP_inf},
        {"resonance_tail_estimate", r.resonance_tail_estimate},
        {"lhs", r.lhs},     {"rhs", r.rhs},       {"residual", r.residual}};
    Table t;
    t.rows.emplace_back();
    for (const auto& [k, v] : terms) {
        rep.number(k, v);
        t.columns.push_back(k);
        t.rows[0].push_back(v);
    }
    rep.warnings(r.warnings);
    emit(t, c.format, c.output, out);
    rep.check("rearranged identity residual", std::abs(r.residual) < tol,
              "|" + format_number(r.residual) + "| vs " + format_number(tol));
}

void psi_explicit(const Config& c, std::ostream& out, Reporter& rep) {
    auto ctx = load(c, rep);
    const auto xs = grid_or(c.x_grid, "50:1000:60:log", "x grid", rep);
    const auto Rs = grid_or(c.R_grid, "25,50,100,200", "R grid", rep);
    const double limit = xs.back();
    auto classes = classes_to(ctx, limit, rep);
    auto tab = explicit_formula::explicit_formula_residual(classes, limit, ctx.data, ctx.g, xs, Rs,
                                                           !c.no_resonances);
    Table t{{"x", "R", "psi", "psi1", "sigma_delta", "sigma_phi", "residual", "normalized_residual"}, {}};
    for (const auto& r : tab.rows)
        t.rows.push_back({r.x, r.R, r.psi, r.psi1, r.sigma_delta, r.sigma_phi, r.residual, r.normalized_residual});
    for (const auto& f : tab.fits) {
        const std::string tag = "R=" + format_number(f.R);
        rep.note("fit " + tag, "x ln x " + format_number(f.c_xlogx) + ", x " + format_number(f.c_x) + ", x^3/2 " +
                                   format_number(f.c_x32) + ", 1 " + format_number(f.c_1) + ", condition " +
                                   format_number(f.condition));
        rep.number("median normalized residual " + tag, f.median_normalized);
    }
    rep.warnings(tab.warnings);
    emit(t, c.format, c.output, out);
    bool decays = true;
    for (std::size_t k = 1; k < tab.fits.size(); ++k)
        decays = decays && tab.fits[k].median_normalized <= 1.2 * tab.fits[k - 1].median_normalized;
    rep.check("normalized residual non-increasing in R within 20%", decays, std::to_string(tab.fits.size()) + " cutoffs");
}

void heat_trace(const Config& c, std::ostream& out, Reporter& rep) {
    auto ctx = load(c, rep);
    const auto ts = grid_or(c.t_grid, "0.02:0.5:25:log", "t grid", rep);
    auto h = asymptotics::eq646_heat_trace(ctx.data, ctx.g, ts, !c.no_resonances);
    for (std::size_t k = 0; k < h.fit.basis.size(); ++k)
        rep.term("coefficient " + h.fit.basis[k], h.fit.coefficients[k], h.fit.std_errors[k]);
    rep.number("fit condition", h.fit.condition);
    rep.number("fit rms residual", h.fit.rms_residual);
    rep.warnings(h.warnings);
    Table t{{"t", "lhs", "fit"}, {}};
    for (std::size_t i = 0; i < h.t_grid.size(); ++i) {
        const double x = h.t_grid[i], st = std::sqrt(x);
        const double fit = h.a_inv_t / x + h.a_logsqrt * std::log(x) / st + h.a_invsqrt / st + h.a_const + h.a_sqrt * st;
        t.rows.push_back({x, h.lhs[i], fit});
    }
    emit(t, c.format, c.output, out);
    const double weyl = ctx.g.area / (4.0 * numerics::pi);
    const double cusp = ctx.g.cusp_count / (4.0 * std::sqrt(numerics::pi));
    rep.check("1/t coefficient", std::abs(h.a_inv_t / weyl - 1.0) < 0.02,
              format_number(h.a_inv_t) + " vs " + format_number(weyl) + " within 2%");
    rep.check("ln t/sqrt t coefficient", std::abs(h.a_logsqrt / cusp - 1.0) < 0.1,
              format_number(h.a_logsqrt) + " vs " + format_number(cusp) + " within 10%");
}

void eq62(const Config& c, std::ostream& out, Reporter& rep) {
    auto ctx = load(c, rep);
    const auto ts = grid_or(c.t_grid, "0.02:0.5:25:log", "t grid", rep);
    const auto ps = grid_or(c.p_values, "0.75,1,2", "p values", rep);
    auto s = asymptotics::eq62_scan(ctx.data, ctx.g, ts, ps);
    Table t{{"t", "p", "lhs", "weyl_term", "I_term", "S_term", "remainder", "skipped"}, {}};
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double S = asymptotics::resonance_S(ctx.data, ts[i]);
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const double x = ts[i], p = ps[j], e = std::exp(x * p * p);
            if (s.skipped[i][j]) {
                t.rows.push_back({x, p, NAN, NAN, NAN, NAN, NAN, 1.0});
                continue;
            }
            const double weyl = ctx.g.area / (4.0 * numerics::pi) * e * std::log(1.0 / x);
            const double I = -ctx.g.cusp_count / numerics::pi * asymptotics::integral_I(x, p).value;
            t.rows.push_back({x, p, s.lhs[i][j], weyl, I, p * p * e * S, s.remainder[i][j], 0.0});
        }
    }
    for (const auto& [k, v] : s.fitted_coefficients) rep.number(k, v);
    rep.number("max |B|", s.max_abs_remainder);
    rep.number("worst sqrt-t fit residual over B range", s.worst_fit_fraction);
    rep.warnings(s.warnings);
    emit(t, c.format, c.output, out);
    rep.check("remainder finite", std::isfinite(s.max_abs_remainder), "max |B| " + format_number(s.max_abs_remainder));
}

void eq643(const Config& c, std::ostream& out, Reporter& rep) {
    auto ctx = load(c, rep);
    const double p1 = c.p.value_or(1.0), p2 = c.p2.value_or(2.0);
    rep.number("p1", p1);
    rep.number("p2", p2);
    const double tol = tolerance(c, 1e-3, rep);
    auto data = ctx.data;
    if (c.finite > 0) {
        data = asymptotics::finite_spectrum(ctx.data, c.finite);
        rep.note("finite spectrum", std::to_string(c.finite) + " ordinates, no resonances");
    }
    const auto ts = grid_or(c.t_grid, c.finite ? "1e-6:1e-3:60:log" : "0.01:0.3:25:log", "t grid", rep);
    auto d = asymptotics::eq643_difference(data, ctx.g, ts, p1, p2);
    Table t{{"t", "lhs", "S", "log_term", "I_term", "B_term", "rhs", "gap", "implied_B"}, {}};
    for (const auto& r : d.rows) t.rows.push_back({r.t, r.lhs, r.S, r.log_term, r.I_term, r.B_term, r.rhs, r.gap, r.implied_B});
    rep.number("max gap", d.max_gap);
    rep.number("predicted t^5/2 ln(1/t) coefficient", d.log52_predicted);
    if (!d.ladder_fit.basis.empty()) {
        rep.term("fitted t^5/2 ln(1/t) coefficient", d.log52_coefficient, d.log52_sigma);
        rep.number("ladder truncation shift", d.log52_truncation_shift);
    }
    rep.warnings(d.warnings);
    emit(t, c.format, c.output, out);
    rep.check("difference identity gap", d.max_gap < tol, format_number(d.max_gap) + " vs " + format_number(tol));
    if (c.finite > 0)
        rep.check("t^5/2 ln(1/t) component present", std::abs(d.log52_coefficient) > 3.0 * d.log52_sigma,
                  format_number(d.log52_coefficient) + " vs 3 sigma " + format_number(3.0 * d.log52_sigma));
}

void phi_check(const Config& c, std::ostream& out, Reporter& rep) {
    group::GroupDescriptor g;
    if (c.group == "modular")
        g = group::modular_group();
    else
        g = group::load_group_descriptor(c.group).descriptor;
    if (!g.scattering) throw UnsupportedGroup("group '" + c.group + "' has no scattering function");
    rep.note("command", c.command);
    rep.note("group", c.group);
    const double tol = tolerance(c, 1e-10, rep);
    const auto s = parse_complex(c.s);
    rep.note("s", format_number(s.real()) + (s.imag() < 0 ? "" : "+") + format_number(s.imag()) + "i");
    const auto a = g.scattering->phi(s), b = g.scattering->phi(1.0 - s), prod = a * b;
    const double dev = std::abs(prod - 1.0);
    emit({{"re_s", "im_s", "re_phi_s", "im_phi_s", "re_phi_1ms", "im_phi_1ms", "re_product", "im_product", "deviation"},
          {{s.real(), s.imag(), a.real(), a.imag(), b.real(), b.imag(), prod.real(), prod.imag(), dev}}},
         c.format, c.output, out);
    rep.check("functional equation phi(s) phi(1-s) = 1", dev < tol, format_number(dev) + " vs " + format_number(tol));
}

void admissibility(const Config& c, std::ostream& out, Reporter& rep) {
    group::GroupDescriptor g = c.group == "modular" ? group::modular_group() : group::load_group_descriptor(c.group).descriptor;
    rep.note("command", c.command);
    rep.note("group", c.group);
    auto pair = make_pair(c, rep);
    const double b0 = g.b0();
    rep.number("b0", b0);
    auto a = testfun::check_admissibility(pair, b0);
    rep.number("C_Gamma(g)", a.c_gamma_g);
    rep.number("int |g'''|", a.g3_l1);
    rep.number("tail integrals stopped at", a.upper_limit);
    emit({{"c_gamma_g", "g3_l1", "upper_limit", "passes"}, {{a.c_gamma_g, a.g3_l1, a.upper_limit, a.passes_hs ? 1.0 : 0.0}}},
         c.format, c.output, out);
    rep.check("admissible", a.passes_hs, "finite weighted tail integrals");
}

void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--eigen", c.eigen_path, "Maass eigenvalue file");
    sub->add_option("--zeros", c.zeros_path, "zeta zero ordinates (resonances beta = 1/4, gamma = ordinate/2)");
    sub->add_option("--resonances", c.resonance_path, "explicit beta gamma pairs, replaces --zeros");
    sub->add_option("--group", c.group, "modular or a descriptor file");
    sub->add_option("--x0", c.x0, "override x0");
    sub->add_option("--tol", c.tol, "tolerance for the hard check");
    sub->add_option("--output,-o", c.output, "write rows here instead of standard output");
    sub->add_option("--format", c.format, "csv or table")->check(CLI::IsMember({"csv", "table"}));
}

void add_family(CLI::App* sub, Config& c) {
    sub->add_option("--family", c.family, "gauss_heat or cauchy_gauss")
        ->check(CLI::IsMember({"gauss_heat", "cauchy_gauss"}));
    sub->add_option("--t", c.t, "test function parameter t");
    sub->add_option("--p", c.p, "cauchy_gauss parameter p");
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
        if (parts.size() != 4) throw ParseError("grid '" + spec + "' is not start:stop:count:log|lin");
        const double a = parse_real(parts[0], "grid start"), b = parse_real(parts[1], "grid stop");
        const double n = parse_real(parts[2], "grid count");
        if (!(n >= 1) || n != std::floor(n)) throw ParseError("grid count must be a positive integer");
        const auto count = static_cast<int>(n);
        if (parts[3] != "log" && parts[3] != "lin") throw ParseError("grid spacing must be log or lin");
        if (parts[3] == "log" && !(a > 0.0 && b > 0.0)) throw ParseError("log grid needs positive ends");
        for (int i = 0; i < count; ++i) {
            const double f = count == 1 ? 0.0 : i / (count - 1.0);
            out.push_back(parts[3] == "log" ? a * std::pow(b / a, f) : a + (b - a) * f);
        }
    } else {
        std::stringstream ss(spec);
        for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_real(item, "grid value"));
    }
    if (out.empty()) throw ParseError("grid '" + spec + "' is empty");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (!(out[i] > out[i - 1])) throw ParseError("grid '" + spec + "' is not ascending");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Numerical checks of the Selberg trace formula for the modular group"};
    app.require_subcommand(1);
    struct Command {
        const char* name;
        const char* help;
        void (*fn)(const Config&, std::ostream&, Reporter&);
        bool family;
    };
    const Command commands[] = {
        {"verify-trace", "both sides of the trace formula", verify_trace, true},
        {"theorem1", "the rearranged identity with the b split", theorem1, true},
        {"psi-explicit", "explicit-formula residual for Psi_1 over x and R grids", psi_explicit, false},
        {"heat-trace", "small-t fit of the heat trace", heat_trace, false},
        {"eq62", "remainder scan B(t,p) of the resolvent identity", eq62, false},
        {"eq643", "difference of the resolvent identity at two p values", eq643, false},
        {"phi-check", "scattering functional equation at one point", phi_check, false},
        {"admissibility", "growth conditions on a test function", admissibility, true},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& cmd : commands) {
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        add_common(sub, c);
        if (cmd.family) add_family(sub, c);
        subs.emplace_back(sub, &cmd);
    }
    for (auto& [sub, cmd] : subs) {
        const std::string n = cmd->name;
        if (n == "theorem1") sub->add_option("--b", c.b, "split point b (default b0)");
        if (n == "psi-explicit") {
            sub->add_option("--x-grid", c.x_grid, "x grid");
            sub->add_option("--R-grid", c.R_grid, "spectral cutoffs");
        }
        if (n == "heat-trace" || n == "eq62" || n == "eq643") sub->add_option("--t-grid", c.t_grid, "t grid");
        if (n == "heat-trace" || n == "psi-explicit")
            sub->add_flag("--no-resonances", c.no_resonances, "drop the resonance contributions");
        if (n == "eq62") sub->add_option("--p-values", c.p_values, "p values");
        if (n == "eq643") {
            sub->add_option("--p", c.p, "p1");
            sub->add_option("--p2", c.p2, "p2");
            sub->add_option("--finite", c.finite, "keep only the first N ordinates and no resonances");
        }
        if (n == "phi-check") sub->add_option("--s", c.s, "point, e.g. 0.3+7i");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return validation_failure;
    }

    for (auto& [sub, cmd] : subs) {
        if (!sub->parsed()) continue;
        c.command = cmd->name;
        Reporter rep(out, c.format == "csv");
        try {
            cmd->fn(c, out, rep);
        } catch (const NonConvergence& e) {
            err << "error (non-convergence): " << e.what() << '\n';
            return non_convergence;
        } catch (const Error& e) {
            err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
            return validation_failure;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return validation_failure;
        }
        return rep.failed() ? tolerance_breach : ok;
    }
    return validation_failure;
}

}  // namespace selberg::cli
