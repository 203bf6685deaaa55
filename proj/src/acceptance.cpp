#include "kappa/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "acceptance_fixtures.hpp"
#include "kappa/asymptotics.hpp"
#include "kappa/catalog.hpp"
#include "kappa/liegroup.hpp"
#include "kappa/rootsys.hpp"
#include "kappa/spherical.hpp"

namespace kappa {

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerances, one place.
constexpr double kTableSeconds = 5.0;
constexpr int kMinTableRows = 40;
constexpr int kWeylSamples = 200;
constexpr double kWeylSeconds = 30.0;
constexpr int kInfimumSamples = 10000;
constexpr int kDecompSamples = 500;
constexpr double kReconstructTol = 1e-10;
constexpr double kProjectionInvarianceTol = 1e-9;
constexpr double kDecaySlope = -0.5;
constexpr double kDecaySlopeTol = 0.05;
constexpr double kDecayR2 = 0.95;
constexpr double kDecaySeconds = 120.0;
constexpr double kHolderBoundedSpread = 2.0;
constexpr double kHolderGrowthRatio = 2.0;
constexpr double kDualityTol = 1e-9;
constexpr double kBlowupFactor = 4.0;
constexpr double kInteriorSpread = 2.0;
constexpr double kCesaroTol = 0.10;

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

CriterionResult titled(int id, std::string title) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

Covector random_covector(std::mt19937_64& rng, int rank, bool sparse) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6), coin(0, 2);
    RationalVector c(rank);
    for (auto& x : c) x = (sparse && coin(rng) == 0) ? Rational(0) : Rational(num(rng), den(rng));
    return Covector(std::move(c));
}

std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    return out;
}

Eigen::MatrixXd random_gl_plus(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    for (;;) {
        Eigen::MatrixXd m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = g(rng);
        const double det = m.determinant();
        if (std::abs(det) < 1e-3) continue;
        if (det < 0) m.row(0) *= -1.0;
        return m;
    }
}

CriterionResult table_reproduction() {
    CriterionResult r = titled(1, "table reproduction (complex and real forms)");
    const auto rows = kappa_table(default_catalog());
    int mismatches = 0;
    std::string first_bad;
    for (const auto& row : rows) {
        if (!row.match) {
            ++mismatches;
            if (first_bad.empty()) first_bad = row.id;
        }
    }
    r.pass = mismatches == 0 && static_cast<int>(rows.size()) >= kMinTableRows;
    r.detail = std::to_string(rows.size()) + " rows, " + std::to_string(mismatches) + " mismatches";
    if (!first_bad.empty()) r.detail += " (first: " + first_bad + ")";
    return r;
}

CriterionResult weyl_invariance(std::uint64_t seed) {
    CriterionResult r = titled(2, "Weyl invariance of n(lambda), rank <= 4");
    std::mt19937_64 rng(seed);
    std::map<std::pair<Family, int>, std::vector<WeylElement>> groups;
    long checks = 0, failures = 0;
    int systems = 0;
    for (const auto& e : default_catalog().entries) {
        if (e.rank > 4) continue;
        const RootSystem sys = instantiate(e);
        auto key = std::make_pair(e.family, e.rank);
        if (!groups.count(key)) groups.emplace(key, weyl_group(sys));
        const auto& w = groups.at(key);
        ++systems;
        for (int s = 0; s < kWeylSamples; ++s) {
            const Covector lambda = random_covector(rng, e.rank, s % 4 == 0);
            const int base = n_of(sys, lambda);
            for (const auto& elem : w) {
                ++checks;
                if (n_of(sys, elem.apply(lambda)) != base) ++failures;
            }
        }
    }
    r.pass = failures == 0 && systems > 0;
    r.detail = std::to_string(systems) + " systems, " + std::to_string(checks) + " (w, lambda) pairs, " +
               std::to_string(failures) + " violations";
    return r;
}

CriterionResult kappa_infimum(std::uint64_t seed) {
    CriterionResult r = titled(3, "kappa as infimum of n(lambda)/2");
    std::mt19937_64 rng(seed + 1);
    long below = 0;
    int weight_mismatch = 0, systems = 0;
    for (const auto& e : default_catalog().entries) {
        const RootSystem sys = instantiate(e);
        const Rational k = kappa(sys);
        ++systems;
        for (int s = 0; s < kInfimumSamples; ++s) {
            Covector lambda;
            do {
                lambda = random_covector(rng, e.rank, s % 2 == 0);
            } while (std::all_of(lambda.coords.begin(), lambda.coords.end(), [](const Rational& c) { return c.is_zero(); }));
            if (Rational(n_of(sys, lambda), 2) < k) ++below;
        }
        std::optional<Rational> best;
        for (const auto& mu : fundamental_weights(sys)) {
            const Rational v(n_of(sys, mu), 2);
            if (!best || v < *best) best = v;
        }
        if (!best || *best != k) ++weight_mismatch;
    }
    r.pass = below == 0 && weight_mismatch == 0;
    r.detail = std::to_string(systems) + " systems x " + std::to_string(kInfimumSamples) + " lambda: " +
               std::to_string(below) + " below kappa; fundamental-weight minimum != kappa in " +
               std::to_string(weight_mismatch);
    return r;
}

CriterionResult decompositions(std::uint64_t seed) {
    CriterionResult r = titled(4, "Iwasawa/KAK round trips, left-K invariance of H");
    std::mt19937_64 rng(seed + 2);
    double worst_iw = 0.0, worst_kak = 0.0, worst_inv = 0.0;
    for (int n : {2, 3}) {
        const auto ks = haar_so_n_sample(n, seed + 10 + n, kDecompSamples);
        for (int s = 0; s < kDecompSamples; ++s) {
            const SpecialLinearElement g(random_gl_plus(rng, n));
            const auto iw = iwasawa(g);
            worst_iw = std::max(worst_iw, (iw.reconstruct() - g.matrix()).norm());
            const auto kk = kak(g);
            worst_kak = std::max(worst_kak, (kk.reconstruct() - g.matrix()).norm());
            const SpecialLinearElement kg(ks[s] * g.matrix());
            worst_inv = std::max(worst_inv, (iwasawa_projection(kg) - iw.h).norm());
        }
    }
    r.pass = worst_iw <= kReconstructTol && worst_kak <= kReconstructTol && worst_inv <= kProjectionInvarianceTol;
    r.detail = "max Frobenius error Iwasawa " + fmt("%.2e", worst_iw) + ", KAK " + fmt("%.2e", worst_kak) +
               ", |H(kg)-H(g)| " + fmt("%.2e", worst_inv) + " over " + std::to_string(2 * kDecompSamples) +
               " elements";
    return r;
}

CriterionResult spherical_decay() {
    CriterionResult r = titled(5, "spherical decay slope, SL(2), t in [10, 2000]");
    const auto ts = log_spaced(10.0, 2000.0, 16);
    double worst_dev = 0.0, worst_r2 = 1.0;
    bool ok = true;
    for (double xi : {0.5, 1.0, 2.0}) {
        for (double y : {0.5, 1.0, 2.0}) {
            Sl2Evaluator eval(y);
            const double period = 2.0 * kPi / (xi * y);
            std::vector<std::pair<double, double>> samples;
            for (double t : ts) {
                const double env = oscillation_envelope(
                    [&](double s) { return std::abs(eval.value(s * xi, 0.0).value); }, t, period, 24);
                samples.emplace_back(t, env);
            }
            const DecayFit fit = decay_fit(samples);
            worst_dev = std::max(worst_dev, std::abs(fit.slope - kDecaySlope));
            worst_r2 = std::min(worst_r2, fit.r_squared);
            if (std::abs(fit.slope - kDecaySlope) > kDecaySlopeTol || fit.r_squared < kDecayR2) ok = false;
        }
    }
    r.pass = ok;
    r.detail = "9 (xi, Y) fits: max |slope + 0.5| = " + fmt("%.4f", worst_dev) + ", min r^2 = " + fmt("%.4f", worst_r2);
    return r;
}

CriterionResult holder_dichotomy() {
    CriterionResult r = titled(6, "Hoelder dichotomy, alpha 0.5 bounded vs 0.6 growing");
    constexpr int points = 8193;
    constexpr double lo = 0.5, hi = 2.5, xi = 1.0;
    std::vector<double> ts;
    for (int k = 4; k <= 11; ++k) ts.push_back(std::ldexp(1.0, k));
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) grid[i] = lo + (hi - lo) * i / (points - 1);
    std::vector<std::vector<std::complex<double>>> samples(ts.size(), std::vector<std::complex<double>>(points));
    for (int i = 0; i < points; ++i) {
        Sl2Evaluator eval(grid[i]);
        for (std::size_t k = 0; k < ts.size(); ++k) samples[k][i] = eval.value(ts[k] * xi, 0.0).value;
    }
    const auto bounded = holder_estimate(grid, ts, samples, 0, 0.5, lo, hi);
    const auto growing = holder_estimate(grid, ts, samples, 0, 0.6, lo, hi);
    const bool ok_bounded = bounded.spread < kHolderBoundedSpread && bounded.verdict == HolderVerdict::Bounded;
    const bool ok_growing = growing.growth_ratio >= kHolderGrowthRatio && growing.verdict == HolderVerdict::Growing;
    r.pass = ok_bounded && ok_growing;
    r.detail = "alpha=0.5 spread " + fmt("%.3f", bounded.spread) + " (" + verdict_name(bounded.verdict) + ", " +
               (ok_bounded ? "ok" : "FAIL") + "); alpha=0.6 growth ratio " + fmt("%.3f", growing.growth_ratio) +
               ", last/first " + fmt("%.3f", growing.sup_quotients.back() / growing.sup_quotients.front()) + " (" +
               verdict_name(growing.verdict) + ", " + (ok_growing ? "ok" : "FAIL") + ")";
    return r;
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

CriterionResult leading_term_order() {
    CriterionResult r = titled(7, "stationary-phase leading term, O(t^-3/2) remainder");
    std::vector<double> sl2_err, su2_err;
    double sl2_weighted = 0.0, su2_weighted = 0.0;
    Sl2Evaluator eval(1.0);
    const auto amp = sl2_spherical_amplitude(1.0);
    for (int k = 0; k <= 5; ++k) {
        const double t = 50.0 * std::ldexp(1.0, k);
        const double e = std::abs(eval.value(t, 0.0).value - leading_term_sl2(1.0, 1.0, t, amp).total);
        sl2_err.push_back(e);
        sl2_weighted = std::max(sl2_weighted, e * std::pow(t, 1.5));
        const int n = 50 << k;
        const double c = std::abs(legendre(n, std::cos(1.0)) - leading_term_su2(n, 1.0).total.real());
        su2_err.push_back(c);
        su2_weighted = std::max(su2_weighted, c * std::pow(n, 1.5));
    }
    const bool sl2_bound = sl2_weighted <= fixtures::kSl2LeadingWeightedError * fixtures::kSlack;
    const bool su2_bound = su2_weighted <= fixtures::kSu2LeadingWeightedError * fixtures::kSlack;
    const bool sl2_mono = strictly_decreasing(sl2_err);
    const bool su2_mono = strictly_decreasing(su2_err);
    r.pass = sl2_bound && su2_bound && sl2_mono && su2_mono;
    std::string seq;
    for (double e : sl2_err) seq += (seq.empty() ? "" : ",") + fmt("%.2e", e);
    r.detail = "SL(2) weighted max " + fmt("%.4f", sl2_weighted) + (sl2_bound ? " ok" : " FAIL") + ", unweighted " +
               (sl2_mono ? "monotone" : "NOT monotone [" + seq + "]") + "; SU(2) weighted max " +
               fmt("%.4f", su2_weighted) + (su2_bound ? " ok" : " FAIL") + ", unweighted " +
               (su2_mono ? "monotone" : "NOT monotone");
    return r;
}

CriterionResult compact_duality() {
    CriterionResult r = titled(8, "compact duality: Laplace integral vs recurrence, decay");
    double worst = 0.0;
    for (int n = 0; n <= 100; ++n) {
        for (int k = 0; k < 50; ++k) {
            const double theta = kPi * (k + 0.5) / 50.0;
            worst = std::max(worst, std::abs(spherical_compact_su2(n, theta) - legendre(n, std::cos(theta))));
        }
    }
    std::vector<std::pair<double, double>> samples;
    const double x = std::cos(1.0);
    for (double nd : log_spaced(10.0, 1000.0, 16)) {
        const int n = static_cast<int>(std::lround(nd));
        double env = 0.0;
        for (int j = 0; j < 7; ++j) env = std::max(env, std::abs(legendre(n + j, x)));
        samples.emplace_back(n, env);
    }
    const DecayFit fit = decay_fit(samples);
    const bool ok_slope = std::abs(fit.slope - kDecaySlope) <= kDecaySlopeTol && fit.r_squared >= kDecayR2;
    r.pass = worst <= kDualityTol && ok_slope;
    r.detail = "max |Laplace - recurrence| " + fmt("%.2e", worst) + " (n <= 100, 50 angles); |P_n(cos 1)| slope " +
               fmt("%.4f", fit.slope) + ", r^2 " + fmt("%.4f", fit.r_squared);
    return r;
}

CriterionResult singular_blowup() {
    CriterionResult r = titled(9, "singular blow-up along theta = n^-2, interior bounded");
    const std::vector<int> ns{10, 32, 100, 316, 1000, 3162, 10000};
    std::vector<double> wall, fixed, inverse;
    for (int n : ns) {
        wall.push_back(1.0 / (static_cast<double>(n) * n));
        fixed.push_back(0.3);
        inverse.push_back(1.0 / n);
    }
    const auto along_wall = singular_blowup_check(ns, wall, 0.5);
    const auto interior = singular_blowup_check(ns, fixed, 0.5);
    const auto along_inverse = singular_blowup_check(ns, inverse, 0.5);
    double mn = interior.rows.front().quotient, mx = mn;
    for (const auto& row : interior.rows) {
        mn = std::min(mn, row.quotient);
        mx = std::max(mx, row.quotient);
    }
    const bool ok_wall = along_wall.last_over_first >= kBlowupFactor && along_wall.monotone_increasing;
    const bool ok_interior = mx / mn < kInteriorSpread;
    r.pass = ok_wall && ok_interior;
    r.detail = "theta=n^-2 last/first " + fmt("%.3g", along_wall.last_over_first) + (ok_wall ? " ok" : " FAIL") +
               "; theta=0.3 spread " + fmt("%.3f", mx / mn) + (ok_interior ? " ok" : " FAIL") +
               "; [info] theta=1/n last/first " + fmt("%.3g", along_inverse.last_over_first);
    return r;
}

CriterionResult cesaro_lower_bound() {
    CriterionResult r = titled(10, "exponential-sum Cesaro lower bound, two frequencies");
    constexpr double h = 0.01;
    const long n_terms = static_cast<long>(std::ceil(10.0 / h));
    const std::vector<std::complex<double>> f{1.0, 1.0};
    const double mean = exp_sum_separation(f, f, {1.0, -1.0}, {1.0 + h, -(1.0 + h)}, 1, n_terms);
    double mass = 0.0;
    for (const auto& v : f) mass += std::norm(v);
    const double bound = 0.5 * mass;
    const bool ok_bound = mean >= (1.0 - kCesaroTol) * bound;
    const bool ok_fixture = std::abs(mean - fixtures::kCesaroTwoFrequencyMean) <= kCesaroTol * fixtures::kCesaroTwoFrequencyMean;
    r.pass = ok_bound && ok_fixture;
    r.detail = "mean " + fmt("%.5f", mean) + " vs bound 0.5*sum|f|^2 = " + fmt("%.3f", bound) + ", fixture " +
               fmt("%.5f", fixtures::kCesaroTwoFrequencyMean) + " (N = " + std::to_string(n_terms) + ")";
    return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        switch (id) {
            case 1: r = table_reproduction(); break;
            case 2: r = weyl_invariance(options.seed); break;
            case 3: r = kappa_infimum(options.seed); break;
            case 4: r = decompositions(options.seed); break;
            case 5: r = spherical_decay(); break;
            case 6: r = holder_dichotomy(); break;
            case 7: r = leading_term_order(); break;
            case 8: r = compact_duality(); break;
            case 9: r = singular_blowup(); break;
            case 10: r = cesaro_lower_bound(); break;
            default: throw std::out_of_range("no acceptance criterion " + std::to_string(id));
        }
    } catch (const std::out_of_range&) {
        throw;
    } catch (const std::exception& err) {
        r.id = id;
        r.pass = false;
        r.detail = std::string("exception: ") + err.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::map<int, double> budgets{{1, kTableSeconds}, {2, kWeylSeconds}, {5, kDecaySeconds}};
    if (auto it = budgets.find(id); it != budgets.end() && r.seconds > it->second) {
        r.pass = false;
        r.detail += "; runtime " + fmt("%.1f", r.seconds) + " s over budget " + fmt("%.0f", it->second) + " s";
    }
    return r;
}

std::string format_result(const CriterionResult& result) {
    std::ostringstream out;
    out << (result.pass ? "PASS" : "FAIL") << " [" << result.id << "] " << result.title << ": " << result.detail << " ("
        << fmt("%.2f", result.seconds) << " s)";
    return out.str();
}

}  // namespace kappa
