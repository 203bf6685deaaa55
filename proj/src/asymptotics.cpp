#include "kappa/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "kappa/spherical.hpp"

namespace kappa {

namespace {

constexpr double kPi = std::numbers::pi;

// SL(2, R) with the Killing form: <alpha, alpha> = 1/2, vol(SO(2)) = 2 pi sqrt 8.
constexpr double kRootNorm2 = 0.5;
const double kVolK = 2.0 * kPi * std::sqrt(8.0);
// SU(2): <alpha, mu> for the generator of the spherical lattice, vol(K/M) = pi sqrt 8.
constexpr double kCompactPairing = 0.5;
const double kVolKM = kPi * std::sqrt(8.0);

double sgn(double x) { return (x > 0) - (x < 0); }

double sl2_phase(double y, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return 0.5 * std::log(std::exp(2.0 * y) * c * c + std::exp(-2.0 * y) * s * s);
}

}  // namespace

DecayFit decay_fit(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 8) throw std::invalid_argument("decay_fit needs at least 8 samples");
    const double n = static_cast<double>(samples.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto [t, m] = samples[i];
        if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("decay_fit: magnitudes must be positive");
        if (!(t > 0.0) || (i > 0 && !(t > samples[i - 1].first))) {
            throw std::invalid_argument("decay_fit: t must be positive and strictly increasing");
        }
        sx += std::log(t);
        sy += std::log(m);
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [t, m] : samples) {
        const double dx = std::log(t) - mx, dy = std::log(m) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    DecayFit fit;
    fit.samples = samples;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    const double ss_res = std::max(0.0, syy - fit.slope * sxy);
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

double oscillation_envelope(const std::function<double(double)>& magnitude, double t, double window, int points) {
    if (points < 1) throw std::invalid_argument("oscillation_envelope: points must be positive");
    double best = 0.0;
    for (int k = 0; k < points; ++k) {
        const double s = points == 1 ? t : t + window * k / (points - 1);
        best = std::max(best, magnitude(s));
    }
    return best;
}

std::function<double(double)> sl2_spherical_amplitude(double y) {
    return [y](double theta) { return std::exp(-sl2_phase(y, theta)); };
}

LeadingTerm leading_term_sl2(double xi, double y, double t, const std::function<double(double)>& amplitude) {
    if (!(y > 0.0)) throw std::invalid_argument("leading_term_sl2: Y must be in the open chamber (Y > 0)");
    if (xi == 0.0 || !std::isfinite(xi)) throw std::invalid_argument("leading_term_sl2: xi must be nonzero");
    if (!(t >= 1.0)) throw std::invalid_argument("leading_term_sl2: t must be >= 1");

    // lambda = xi rho = xi alpha / 2.
    const double pairing = xi * kRootNorm2 / 2.0;
    LeadingTerm out;
    out.decay_power = 0.5;
    for (int w : {1, -1}) {
        const double w_alpha = 2.0 * y * w;  // (w alpha)(Y)
        const double sigma = -sgn(pairing) * sgn(w_alpha);
        const double scale = std::pow(std::abs(pairing / (4.0 * kPi) * (1.0 - std::exp(-2.0 * w_alpha))), -0.5);
        // Critical points on K: theta in {0, pi} for the identity coset, {pi/2, 3pi/2} for the reflection.
        const double base = w == 1 ? 0.0 : kPi / 2.0;
        const double g_sum = amplitude(base) + amplitude(base + kPi);
        WeylTerm term;
        term.sign = w;
        term.phase_value = std::polar(1.0, t * w * xi * y);
        term.amplitude = std::polar(1.0, kPi * sigma / 4.0) * scale * g_sum / kVolK;
        out.total += term.phase_value * term.amplitude;
        out.terms.push_back(term);
    }
    out.total *= std::pow(t, -out.decay_power);
    return out;
}

std::complex<double> hessian_det_compact_rank1(double pairing, double y, int w) {
    if (!(pairing > 0.0)) throw std::invalid_argument("hessian_det_compact_rank1: pairing must be positive");
    if (!(y > 0.0 && y < kPi)) throw std::invalid_argument("hessian_det_compact_rank1: Y must lie in (0, pi)");
    if (w != 1 && w != -1) throw std::invalid_argument("hessian_det_compact_rank1: w must be +1 or -1");
    const double w_alpha = w * y;
    const double branch = w_alpha > 0 ? -kPi / 4.0 : kPi / 4.0;
    return std::polar(std::pow(pairing, -0.5) * std::pow(std::abs(std::sin(w_alpha)), -0.5), branch + w_alpha / 2.0);
}

LeadingTerm leading_term_su2(int n, double theta) {
    if (n < 1) throw std::invalid_argument("leading_term_su2: n must be positive");
    LeadingTerm out;
    out.decay_power = 0.5;
    for (int w : {1, -1}) {
        WeylTerm term;
        term.sign = w;
        term.phase_value = std::polar(1.0, static_cast<double>(n) * w * theta);
        term.amplitude = std::sqrt(2.0 * kPi) / kVolKM * hessian_det_compact_rank1(kCompactPairing, theta, w);
        out.total += term.phase_value * term.amplitude;
        out.terms.push_back(term);
    }
    out.total *= std::pow(static_cast<double>(n), -out.decay_power);
    return out;
}

std::vector<double> stationary_points_check_sl2(double xi, double y, double tol, int grid) {
    if (!(y > 0.0)) throw std::invalid_argument("stationary_points_check_sl2: Y must be positive");
    if (xi == 0.0) throw std::invalid_argument("stationary_points_check_sl2: xi must be nonzero");
    if (grid < 4) throw std::invalid_argument("stationary_points_check_sl2: grid too small");
    constexpr double step = 1e-6;
    std::vector<double> out;
    for (int j = 0; j < grid; ++j) {
        const double theta = 2.0 * kPi * j / grid;
        const double d = xi * (sl2_phase(y, theta + step) - sl2_phase(y, theta - step)) / (2.0 * step);
        if (std::abs(d) < tol) out.push_back(theta);
    }
    return out;
}

std::string verdict_name(HolderVerdict v) { return v == HolderVerdict::Growing ? "growing" : "bounded"; }

HolderReport holder_estimate(const std::vector<double>& grid, const std::vector<double>& family_params,
                             const std::vector<std::vector<std::complex<double>>>& samples, int derivative_order,
                             double alpha, double region_lo, double region_hi, double threshold) {
    if (grid.empty()) throw std::invalid_argument("holder_estimate: empty grid");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("holder_estimate: alpha must lie in (0, 1]");
    if (family_params.empty() || samples.size() != family_params.size()) {
        throw std::invalid_argument("holder_estimate: one sample row per family parameter required");
    }
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("holder_estimate: grid must be increasing");
    for (std::size_t k = 1; k < family_params.size(); ++k)
        if (!(family_params[k] > family_params[k - 1])) {
            throw std::invalid_argument("holder_estimate: family parameters must be increasing");
        }

    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (grid[i] >= region_lo && grid[i] <= region_hi) idx.push_back(i);
    if (idx.empty()) throw std::invalid_argument("holder_estimate: no grid points inside the region");

    HolderReport rep;
    rep.alpha = alpha;
    rep.derivative_order = derivative_order;
    rep.family_params = family_params;
    rep.threshold = threshold;
    for (const auto& row : samples) {
        if (row.size() != grid.size()) throw std::invalid_argument("holder_estimate: sample row length != grid size");
        double sup = 0.0;
        for (std::size_t s = 1; s < idx.size(); s *= 2) {
            for (std::size_t a = 0; a + s < idx.size(); ++a) {
                const std::size_t i = idx[a], j = idx[a + s];
                const double q = std::abs(row[j] - row[i]) / std::pow(grid[j] - grid[i], alpha);
                sup = std::max(sup, q);
            }
        }
        rep.sup_quotients.push_back(sup);
    }

    const double t_lo = family_params.front(), t_hi = family_params.back();
    double first = 0.0, last = 0.0;
    for (std::size_t k = 0; k < family_params.size(); ++k) {
        if (family_params[k] <= 10.0 * t_lo) first = std::max(first, rep.sup_quotients[k]);
        if (family_params[k] >= t_hi / 10.0) last = std::max(last, rep.sup_quotients[k]);
    }
    const auto ratio = [](double num, double den) {
        if (den > 0.0) return num / den;
        return num > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
    };
    rep.growth_ratio = ratio(last, first);
    const auto [mn, mx] = std::minmax_element(rep.sup_quotients.begin(), rep.sup_quotients.end());
    rep.spread = ratio(*mx, *mn);
    rep.verdict = rep.growth_ratio > threshold ? HolderVerdict::Growing : HolderVerdict::Bounded;
    return rep;
}

double exp_sum_separation(const std::vector<std::complex<double>>& f_x, const std::vector<std::complex<double>>& f_y,
                          const std::vector<double>& u_x, const std::vector<double>& u_y, long m, long n_terms) {
    const std::size_t j = f_x.size();
    if (f_y.size() != j || u_x.size() != j || u_y.size() != j) {
        throw std::invalid_argument("exp_sum_separation: input lengths differ");
    }
    if (n_terms < 1) throw std::invalid_argument("exp_sum_separation: N must be positive");
    double acc = 0.0;
    for (long t = m; t < m + n_terms; ++t) {
        std::complex<double> s = 0.0;
        const double td = static_cast<double>(t);
        for (std::size_t k = 0; k < j; ++k) {
            s += f_x[k] * std::polar(1.0, td * u_x[k]) - f_y[k] * std::polar(1.0, td * u_y[k]);
        }
        acc += std::norm(s);
    }
    return acc / static_cast<double>(n_terms);
}

BlowupReport singular_blowup_check(const std::vector<int>& ns, const std::vector<double>& thetas, double alpha) {
    if (ns.size() != thetas.size() || ns.empty()) {
        throw std::invalid_argument("singular_blowup_check: need matching, non-empty n and theta lists");
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("singular_blowup_check: alpha must lie in (0, 1]");
    BlowupReport rep;
    rep.alpha = alpha;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double th = thetas[i];
        if (!(th > 0.0 && th < 0.5)) throw std::invalid_argument("singular_blowup_check: theta must lie in (0, 0.5)");
        rep.rows.push_back({ns[i], th, std::abs(legendre_deficit(ns[i], th)) / std::pow(th, alpha)});
    }
    const double first = rep.rows.front().quotient, last = rep.rows.back().quotient;
    rep.last_over_first = first > 0.0 ? last / first : (last > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
    rep.monotone_increasing = true;
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        if (!(rep.rows[i].quotient > rep.rows[i - 1].quotient)) rep.monotone_increasing = false;
    return rep;
}

}  // namespace kappa
