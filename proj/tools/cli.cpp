#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "kappa/acceptance.hpp"
#include "kappa/asymptotics.hpp"
#include "kappa/catalog.hpp"
#include "kappa/liegroup.hpp"
#include "kappa/rootsys.hpp"
#include "kappa/spherical.hpp"

namespace kappa::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    int digits = 17;
    std::uint64_t seed = 42;

    static std::string label(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return buf;
    }

    std::string num(double v) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
        return buf;
    }
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        const auto b = cur.find_first_not_of(" \t");
        const auto e = cur.find_last_not_of(" \t\r");
        if (b != std::string::npos) parts.push_back(cur.substr(b, e - b + 1));
    }
    return parts;
}

double to_double(const std::string& s) {
    std::istringstream in(s);
    in.imbue(std::locale::classic());
    double v = 0;
    if (!(in >> v) || !in.eof()) throw UsageError("not a number: '" + s + "'");
    return v;
}

std::vector<double> doubles(const std::string& text) {
    std::vector<double> out;
    for (const auto& p : split(text, ',')) out.push_back(to_double(p));
    return out;
}

std::complex<double> to_complex(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() == 1) return to_double(parts[0]);
    if (parts.size() == 2) return {to_double(parts[0]), to_double(parts[1])};
    throw UsageError("complex values are written re or re:im, got '" + s + "'");
}

std::vector<std::complex<double>> complexes(const std::string& text) {
    std::vector<std::complex<double>> out;
    for (const auto& p : split(text, ',')) out.push_back(to_complex(p));
    return out;
}

std::vector<double> log_grid(double lo, double hi, int steps) {
    if (steps < 1 || !(lo > 0) || !(hi >= lo)) throw UsageError("need 0 < tmin <= tmax and tsteps >= 1");
    if (steps == 1) return {lo};
    std::vector<double> out(steps);
    for (int i = 0; i < steps; ++i) out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (steps - 1));
    out.back() = hi;
    return out;
}

std::string catalog_source(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("KAPPA_CATALOG"); env && *env) return env;
    return "default";
}

// Root-system flags shared by kappa, weights, region.
struct SystemFlags {
    std::string family;
    int rank = 0;
    std::string mult;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "A, B, C, D, BC, E6, E7, E8, F4, G2")->required();
        cmd->add_option("--rank", rank, "rank (fixed for exceptional families)");
        cmd->add_option("--mult", mult, "multiplicities, e.g. medium:2,short:2,long:1")->required();
    }

    RootSystem build() const {
        const Family f = parse_family(family);
        const int r = rank == 0 && fixed_rank(f) > 0 ? fixed_rank(f) : rank;
        if (r < 1) throw UsageError("rank must be positive");
        return build_root_system(f, r, parse_mult(mult));
    }
};

Covector parse_covector(const std::string& text, int rank) {
    RationalVector coords;
    for (const auto& p : split(text, ',')) coords.push_back(Rational::parse(p));
    if (static_cast<int>(coords.size()) != rank) {
        throw UsageError("expected " + std::to_string(rank) + " coordinates, got " + std::to_string(coords.size()));
    }
    return Covector(std::move(coords));
}

SpecialLinearElement read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open matrix file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return SpecialLinearElement::parse(buf.str());
}

void print_matrix(const Context& ctx, const std::string& name, const Eigen::MatrixXd& m) {
    ctx.out << name << "\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) ctx.out << (c ? " " : "") << ctx.num(m(r, c));
        ctx.out << "\n";
    }
}

void print_vector(const Context& ctx, const std::string& name, const Eigen::VectorXd& v) {
    ctx.out << name;
    for (int i = 0; i < v.size(); ++i) ctx.out << " " << ctx.num(v(i));
    ctx.out << "\n";
}

// CSV as emitted by `spherical`: header with t, Y, re, im (err optional).
struct SampleRow {
    double t, y;
    std::complex<double> value;
};

std::vector<SampleRow> read_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file " + path);
    std::string line;
    std::map<std::string, std::size_t> col;
    std::vector<SampleRow> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split(line, ',');
        if (col.empty()) {
            for (std::size_t i = 0; i < cells.size(); ++i) col[cells[i]] = i;
            for (const char* need : {"t", "Y", "re", "im"})
                if (!col.count(need)) throw UsageError(std::string("input CSV lacks column ") + need);
            continue;
        }
        if (cells.size() < col.size()) throw UsageError("short CSV row: " + line);
        rows.push_back({to_double(cells[col["t"]]), to_double(cells[col["Y"]]),
                        {to_double(cells[col["re"]]), to_double(cells[col["im"]])}});
    }
    if (rows.empty()) throw UsageError("no data rows in " + path);
    return rows;
}

int do_kappa(Context& ctx, const SystemFlags& sys) {
    ctx.out << kappa(sys.build()).to_string() << "\n";
    return 0;
}

int do_table(Context& ctx, const std::string& catalog, const std::string& format) {
    const auto rows = kappa_table(resolve_catalog(catalog_source(catalog)));
    bool ok = true;
    if (format == "csv") {
        ctx.out << "id,group,rank,computed,expected,status\n";
    } else {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-22s %-18s %4s %9s %9s  %s\n", "id", "group", "rank", "computed", "expected",
                      "status");
        ctx.out << buf;
    }
    for (const auto& r : rows) {
        ok = ok && r.match;
        const std::string status = r.match ? "ok" : (r.error.empty() ? "MISMATCH" : "ERROR: " + r.error);
        const std::string computed = r.error.empty() ? r.computed.to_string() : "-";
        if (format == "csv") {
            ctx.out << r.id << ",\"" << r.group_name << "\"," << r.rank << "," << computed << ","
                    << r.expected.to_string() << "," << status << "\n";
        } else {
            char buf[256];
            std::snprintf(buf, sizeof buf, "%-22s %-18s %4d %9s %9s  %s\n", r.id.c_str(), r.group_name.c_str(), r.rank,
                          computed.c_str(), r.expected.to_string().c_str(), status.c_str());
            ctx.out << buf;
        }
    }
    if (!ok) ctx.err << "kappa table: at least one row does not match\n";
    return ok ? 0 : 1;
}

int do_weights(Context& ctx, const SystemFlags& flags) {
    const RootSystem sys = flags.build();
    const auto mus = fundamental_weights(sys);
    for (std::size_t i = 0; i < mus.size(); ++i) {
        ctx.out << "mu" << i + 1 << " = (" << mus[i].to_string() << ")  n = " << n_of(sys, mus[i]) << "\n";
    }
    ctx.out << "kappa = " << kappa(sys).to_string() << "\n";
    return 0;
}

int do_region(Context& ctx, const SystemFlags& flags, const std::string& eta) {
    const RootSystem sys = flags.build();
    ctx.out << (in_bounded_region(sys, parse_covector(eta, sys.rank())) ? "inside" : "outside") << "\n";
    return 0;
}

int do_iwasawa(Context& ctx, const std::string& path) {
    const auto g = read_matrix(path);
    const auto f = iwasawa(g);
    print_matrix(ctx, "k", f.k);
    print_vector(ctx, "h", f.h);
    print_matrix(ctx, "nu", f.nu);
    ctx.out << "reconstruction_error " << ctx.num((f.reconstruct() - g.matrix()).norm()) << "\n";
    return 0;
}

int do_kak(Context& ctx, const std::string& path) {
    const auto g = read_matrix(path);
    const auto f = kak(g);
    print_matrix(ctx, "k1", f.k1);
    print_vector(ctx, "a_log", f.a_log);
    print_matrix(ctx, "k2", f.k2);
    ctx.out << "regular " << (is_regular(g) ? "yes" : "no") << "\n";
    ctx.out << "reconstruction_error " << ctx.num((f.reconstruct() - g.matrix()).norm()) << "\n";
    return 0;
}

struct SphericalFlags {
    std::string group = "sl2";
    std::string xi = "1";
    std::string eta;
    std::string points = "1";
    std::string direction = "1,0";
    double tmin = 10, tmax = 2000;
    int tsteps = 16;
    int order = 0;
    long samples = 20000;
};

int do_spherical(Context& ctx, const SphericalFlags& f) {
    const auto ys = doubles(f.points);
    const auto xi = doubles(f.xi);
    const auto eta = f.eta.empty() ? std::vector<double>(xi.size(), 0.0) : doubles(f.eta);
    if (ys.empty()) throw UsageError("--points needs at least one value");
    if (eta.size() != xi.size()) throw UsageError("--xi and --eta need the same length");
    auto ts = log_grid(f.tmin, f.tmax, f.tsteps);
    ctx.out << "t,Y,re,im,err\n";
    if (f.group == "sl2") {
        if (xi.size() != 1) throw UsageError("sl2 takes one --xi coordinate");
        const QuadratureConfig cfg;
        for (double y : ys) {
            if (!(std::abs(y) <= cfg.t_max)) throw UsageError("sl2 points must satisfy |Y| <= " + ctx.num(cfg.t_max));
            Sl2Evaluator eval(y, cfg);
            for (double t : ts) {
                const auto v = eval.derivative(t * xi[0], eta[0], f.order);
                ctx.out << ctx.num(t) << "," << ctx.num(y) << "," << ctx.num(v.value.real()) << ","
                        << ctx.num(v.value.imag()) << "," << ctx.num(v.estimated_error) << "\n";
            }
        }
    } else if (f.group == "sl3") {
        if (xi.size() != 2) throw UsageError("sl3 takes two --xi coordinates (simple-root basis)");
        if (f.order != 0) throw UsageError("--order is only available for sl2");
        const auto dir = doubles(f.direction);
        if (dir.size() != 2) throw UsageError("--direction takes two coordinates");
        for (double y : ys) {
            for (double t : ts) {
                SpectralParameter lambda{{t * xi[0], t * xi[1]}, eta};
                const auto v = spherical_sl3(lambda, {y * dir[0], y * dir[1]}, f.samples, ctx.seed);
                ctx.out << ctx.num(t) << "," << ctx.num(y) << "," << ctx.num(v.value.real()) << ","
                        << ctx.num(v.value.imag()) << "," << ctx.num(v.estimated_error) << "\n";
            }
        }
    } else if (f.group == "su2") {
        if (f.order != 0) throw UsageError("--order is only available for sl2");
        std::vector<int> ns;
        for (double t : ts) ns.push_back(static_cast<int>(std::lround(t)));
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        for (double y : ys) {
            for (int n : ns) {
                const double v = spherical_compact_su2(n, y);
                const double gap = std::abs(v - legendre(n, std::cos(y)));
                ctx.out << n << "," << ctx.num(y) << "," << ctx.num(v) << ",0," << ctx.num(gap) << "\n";
            }
        }
    } else {
        throw UsageError("--group must be sl2, sl3 or su2");
    }
    return 0;
}

std::map<double, std::vector<SampleRow>> by_point(const std::vector<SampleRow>& rows) {
    std::map<double, std::vector<SampleRow>> groups;
    for (const auto& r : rows) groups[r.y].push_back(r);
    for (auto& [y, g] : groups) std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    return groups;
}

int do_decay(Context& ctx, const std::string& input, int window, bool detail) {
    if (window < 1) throw UsageError("--window must be positive");
    const auto groups = by_point(read_samples(input));
    if (detail) ctx.out << "Y,t,magnitude,fitted\n";
    else ctx.out << "Y,samples,slope,intercept,r_squared\n";
    for (const auto& [y, rows] : groups) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            double env = 0.0;
            for (std::size_t j = i; j < std::min(rows.size(), i + window); ++j) env = std::max(env, std::abs(rows[j].value));
            pts.emplace_back(rows[i].t, env);
        }
        const auto fit = decay_fit(pts);
        if (detail) {
            for (const auto& [t, m] : pts) {
                ctx.out << ctx.num(y) << "," << ctx.num(t) << "," << ctx.num(m) << ","
                        << ctx.num(std::exp(fit.intercept) * std::pow(t, fit.slope)) << "\n";
            }
        } else {
            ctx.out << ctx.num(y) << "," << pts.size() << "," << ctx.num(fit.slope) << "," << ctx.num(fit.intercept)
                    << "," << ctx.num(fit.r_squared) << "\n";
        }
    }
    return 0;
}

int do_holder(Context& ctx, const std::string& input, int order, const std::string& alphas_text,
              const std::string& region, double threshold) {
    const auto rows = read_samples(input);
    std::vector<double> grid, ts;
    for (const auto& r : rows) {
        grid.push_back(r.y);
        ts.push_back(r.t);
    }
    for (auto* v : {&grid, &ts}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    if (rows.size() != grid.size() * ts.size()) {
        throw UsageError("holder input must hold every (t, Y) pair exactly once");
    }
    std::vector<std::vector<std::complex<double>>> samples(ts.size(), std::vector<std::complex<double>>(grid.size()));
    for (const auto& r : rows) {
        const auto k = std::lower_bound(ts.begin(), ts.end(), r.t) - ts.begin();
        const auto i = std::lower_bound(grid.begin(), grid.end(), r.y) - grid.begin();
        samples[k][i] = r.value;
    }
    double lo = grid.front(), hi = grid.back();
    if (!region.empty()) {
        const auto b = doubles(region);
        if (b.size() != 2) throw UsageError("--region takes lo,hi");
        lo = b[0];
        hi = b[1];
    }
    const auto alphas = doubles(alphas_text);
    if (alphas.empty()) throw UsageError("--alpha needs at least one exponent");
    std::vector<HolderReport> reports;
    for (double a : alphas) reports.push_back(holder_estimate(grid, ts, samples, order, a, lo, hi, threshold));
    ctx.out << "t";
    for (double a : alphas) ctx.out << ",sup_quotient_alpha_" << Context::label(a);
    ctx.out << "\n";
    for (std::size_t k = 0; k < ts.size(); ++k) {
        ctx.out << ctx.num(ts[k]);
        for (const auto& rep : reports) ctx.out << "," << ctx.num(rep.sup_quotients[k]);
        ctx.out << "\n";
    }
    for (const auto& rep : reports) {
        ctx.out << "# alpha=" << Context::label(rep.alpha) << " order=" << rep.derivative_order
                << " verdict=" << verdict_name(rep.verdict) << " growth_ratio=" << ctx.num(rep.growth_ratio)
                << " spread=" << ctx.num(rep.spread) << "\n";
    }
    return 0;
}

int do_statphase(Context& ctx, const std::string& group, double xi, double y, double tmin, double tmax) {
    if (!(tmin >= 1.0) || !(tmax >= tmin)) throw UsageError("need 1 <= tmin <= tmax");
    ctx.out << "t,quad_re,quad_im,lead_re,lead_im,abs_err\n";
    if (group == "sl2") {
        Sl2Evaluator eval(y);
        const auto amp = sl2_spherical_amplitude(y);
        for (double t = tmin; t <= tmax * (1 + 1e-12); t *= 2.0) {
            const auto q = eval.value(t * xi, 0.0).value;
            const auto l = leading_term_sl2(xi, y, t, amp).total;
            ctx.out << ctx.num(t) << "," << ctx.num(q.real()) << "," << ctx.num(q.imag()) << "," << ctx.num(l.real())
                    << "," << ctx.num(l.imag()) << "," << ctx.num(std::abs(q - l)) << "\n";
        }
    } else if (group == "su2") {
        for (double t = tmin; t <= tmax * (1 + 1e-12); t *= 2.0) {
            const int n = static_cast<int>(std::lround(t));
            const double q = legendre(n, std::cos(y));
            const auto l = leading_term_su2(n, y).total;
            ctx.out << n << "," << ctx.num(q) << ",0," << ctx.num(l.real()) << "," << ctx.num(l.imag()) << ","
                    << ctx.num(std::abs(q - l)) << "\n";
        }
    } else {
        throw UsageError("--group must be sl2 or su2");
    }
    return 0;
}

int do_expsum(Context& ctx, const std::string& fx, const std::string& fy, const std::string& ux,
              const std::string& uy, long m, long n) {
    const auto f_x = complexes(fx);
    const auto f_y = fy.empty() ? f_x : complexes(fy);
    ctx.out << ctx.num(exp_sum_separation(f_x, f_y, doubles(ux), doubles(uy), m, n)) << "\n";
    return 0;
}

int do_selftest(Context& ctx, const std::vector<int>& only) {
    AcceptanceOptions opts;
    opts.seed = ctx.seed;
    int failed = 0;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        const auto r = run_criterion(id, opts);
        ctx.out << format_result(r) << std::endl;
        failed += r.pass ? 0 : 1;
    }
    ctx.out << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regularity exponents of symmetric spaces and spherical-function numerics", "kappa"};
    app.require_subcommand(1);
    Context ctx{out, err};
    int threads = 0;
    app.add_option("--seed", ctx.seed, "random seed")->capture_default_str();
    app.add_option("--digits", ctx.digits, "significant digits for floating-point output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads (computation is single-threaded; accepted for compatibility)");
    app.fallthrough();

    SystemFlags kappa_flags, weight_flags, region_flags;
    auto* c_kappa = app.add_subcommand("kappa", "exact kappa of a root system with multiplicities");
    kappa_flags.attach(c_kappa);

    std::string catalog, format = "pretty";
    auto* c_table = app.add_subcommand("table", "kappa table for a catalog");
    c_table->add_option("--catalog", catalog, "catalog file or 'default' (env KAPPA_CATALOG)");
    c_table->add_option("--format", format)->check(CLI::IsMember({"csv", "pretty"}));

    auto* c_weights = app.add_subcommand("weights", "fundamental weights, n(mu_i) and kappa");
    weight_flags.attach(c_weights);

    std::string eta_text;
    auto* c_region = app.add_subcommand("region", "is eta inside Conv(W rho)?");
    region_flags.attach(c_region);
    c_region->add_option("--eta", eta_text, "comma-separated rationals, simple-root coordinates")->required();

    std::string matrix_path;
    auto* c_iwasawa = app.add_subcommand("iwasawa", "Iwasawa factors of an SL(n) matrix");
    c_iwasawa->add_option("--matrix", matrix_path)->required();
    auto* c_kak = app.add_subcommand("kak", "KAK factors of an SL(n) matrix");
    c_kak->add_option("--matrix", matrix_path)->required();

    SphericalFlags sph;
    auto* c_sph = app.add_subcommand("spherical", "spherical function samples as CSV (t, Y, re, im, err)");
    c_sph->add_option("--group", sph.group)->check(CLI::IsMember({"sl2", "sl3", "su2"}));
    c_sph->add_option("--xi", sph.xi, "Re lambda (rho units for sl2, simple-root basis for sl3)");
    c_sph->add_option("--eta", sph.eta, "Im lambda");
    c_sph->add_option("--points", sph.points, "Y values (angles for su2)");
    c_sph->add_option("--direction", sph.direction, "sl3: a_log = Y * direction");
    c_sph->add_option("--tmin", sph.tmin);
    c_sph->add_option("--tmax", sph.tmax);
    c_sph->add_option("--tsteps", sph.tsteps);
    c_sph->add_option("--order", sph.order, "sl2: Y-derivative order 0..3")->check(CLI::Range(0, 3));
    c_sph->add_option("--samples", sph.samples, "sl3 Monte Carlo samples");

    std::string input;
    int window = 1;
    bool detail = false;
    auto* c_decay = app.add_subcommand("decay", "log-log decay fit per Y of a spherical CSV");
    c_decay->add_option("--input", input)->required();
    c_decay->add_option("--window", window, "envelope over this many consecutive t samples");
    c_decay->add_flag("--detail", detail, "emit (Y, t, magnitude, fitted) rows");

    int order = 0;
    std::string alphas = "0.5", region;
    double threshold = 2.0;
    auto* c_holder = app.add_subcommand("holder", "Hoelder sup quotients per t from a spherical CSV");
    c_holder->add_option("--input", input)->required();
    c_holder->add_option("--order", order, "derivative order of the input samples");
    c_holder->add_option("--alpha", alphas, "comma-separated exponents in (0, 1]");
    c_holder->add_option("--region", region, "lo,hi (default: whole grid)");
    c_holder->add_option("--threshold", threshold);

    std::string sp_group = "sl2";
    double sp_xi = 1, sp_y = 1, sp_tmin = 50, sp_tmax = 1600;
    auto* c_stat = app.add_subcommand("statphase", "quadrature vs stationary-phase leading term, dyadic t");
    c_stat->add_option("--group", sp_group)->check(CLI::IsMember({"sl2", "su2"}));
    c_stat->add_option("--xi", sp_xi);
    c_stat->add_option("--Y", sp_y);
    c_stat->add_option("--tmin", sp_tmin);
    c_stat->add_option("--tmax", sp_tmax);

    std::string fx = "1,1", fy, ux = "1,-1", uy = "1.01,-1.01";
    long es_m = 1, es_n = 1000;
    auto* c_exp = app.add_subcommand("expsum", "Cesaro mean of an exponential-sum separation");
    c_exp->add_option("--fx", fx, "coefficients at x, re or re:im");
    c_exp->add_option("--fy", fy, "coefficients at y (default: fx)");
    c_exp->add_option("--ux", ux);
    c_exp->add_option("--uy", uy);
    c_exp->add_option("--m", es_m);
    c_exp->add_option("--N", es_n);

    std::vector<int> only;
    auto* c_self = app.add_subcommand("selftest", "run the acceptance criteria");
    c_self->add_option("--only", only, "criterion ids")->check(CLI::Range(1, kCriterionCount));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    (void)threads;

    try {
        if (c_kappa->parsed()) return do_kappa(ctx, kappa_flags);
        if (c_table->parsed()) return do_table(ctx, catalog, format);
        if (c_weights->parsed()) return do_weights(ctx, weight_flags);
        if (c_region->parsed()) return do_region(ctx, region_flags, eta_text);
        if (c_iwasawa->parsed()) return do_iwasawa(ctx, matrix_path);
        if (c_kak->parsed()) return do_kak(ctx, matrix_path);
        if (c_sph->parsed()) return do_spherical(ctx, sph);
        if (c_decay->parsed()) return do_decay(ctx, input, window, detail);
        if (c_holder->parsed()) return do_holder(ctx, input, order, alphas, region, threshold);
        if (c_stat->parsed()) return do_statphase(ctx, sp_group, sp_xi, sp_y, sp_tmin, sp_tmax);
        if (c_exp->parsed()) return do_expsum(ctx, fx, fy, ux, uy, es_m, es_n);
        if (c_self->parsed()) return do_selftest(ctx, only);
    } catch (const CatalogError& e) {
        err << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace kappa::cli
