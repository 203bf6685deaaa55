#include "kappa/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace kappa {

namespace {

void check_rank1(const SpectralParameter& lambda) {
    if (lambda.xi.size() != 1 || lambda.eta.size() > 1) {
        throw std::invalid_argument("SL(2) spectral parameter needs one xi and at most one eta");
    }
}

double eta_of(const SpectralParameter& lambda) { return lambda.eta.empty() ? 0.0 : lambda.eta[0]; }

}  // namespace

Sl2Evaluator::Sl2Evaluator(double y, QuadratureConfig config) : y_(y), config_(config) {
    if (!std::isfinite(y)) throw std::invalid_argument("geodesic parameter must be finite");
    if (config_.min_nodes < 8 || config_.min_nodes % 8 != 0) {
        throw std::invalid_argument("min_nodes must be a positive multiple of 8");
    }
}

// Level 0 holds nodes j = 0..M0/2 of the period-M0 grid in psi = 2 theta
// (M0 = min_nodes / 2); level k adds the odd j of the grid with M0 * 2^k.
// cos(2 theta) symmetry folds the full circle onto these nodes.
void Sl2Evaluator::grow() {
    const long m0 = config_.min_nodes / 2;
    const int k = static_cast<int>(levels_.size());
    const long m = m0 << k;
    Level level;
    const double e2 = std::exp(2.0 * y_);
    const double em2 = std::exp(-2.0 * y_);
    const auto add = [&](long j, double w) {
        const double theta = std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
        const double c = std::cos(theta), s = std::sin(theta);
        const double a = e2 * c * c, b = em2 * s * s;
        const double u = a + b;
        const double h1 = (a - b) / u;
        const double h2 = 8.0 * (c * c) * (s * s) / (u * u);
        level.h.push_back(0.5 * std::log(u));
        level.h1.push_back(h1);
        level.h2.push_back(h2);
        level.h3.push_back(-4.0 * h1 * h2);
        level.weight.push_back(w);
    };
    if (k == 0) {
        for (long j = 0; j <= m / 2; ++j) add(j, (j == 0 || j == m / 2) ? 1.0 : 2.0);
    } else {
        for (long j = 1; j < m / 2; j += 2) add(j, 2.0);
    }
    levels_.push_back(std::move(level));
}

template <class F>
SphericalValue Sl2Evaluator::integrate(F&& integrand) {
    const long m0 = config_.min_nodes / 2;
    complex sum = 0.0;
    double abs_sum = 0.0;
    complex previous = 0.0;
    for (int k = 0;; ++k) {
        const long m = m0 << k;
        if (2 * m > config_.max_nodes) {
            throw QuadratureError("SL(2) quadrature did not converge within " + std::to_string(config_.max_nodes) +
                                  " nodes at Y = " + std::to_string(y_));
        }
        if (k == static_cast<int>(levels_.size())) grow();
        const Level& lv = levels_[k];
        for (std::size_t i = 0; i < lv.h.size(); ++i) {
            const complex f = integrand(lv, i);
            sum += lv.weight[i] * f;
            abs_sum += lv.weight[i] * std::abs(f);
        }
        const complex current = sum / static_cast<double>(m);
        if (k > 0) {
            const double diff = std::abs(current - previous);
            const double scale = abs_sum / static_cast<double>(m);
            if (diff <= config_.rel_tol * scale || scale == 0.0) return {current, 2 * m, diff};
        }
        previous = current;
    }
}

SphericalValue Sl2Evaluator::value(double xi, double eta) { return derivative(xi, eta, 0); }

SphericalValue Sl2Evaluator::derivative(double xi, double eta, int order) {
    if (order < 0 || order > 3) throw std::invalid_argument("derivative order must be in 0..3");
    const complex c(-eta - 1.0, xi);
    const complex c2 = c * c, c3 = c2 * c;
    return integrate([&](const Level& lv, std::size_t i) -> complex {
        const complex f = std::exp(c * lv.h[i]);
        switch (order) {
            case 0: return f;
            case 1: return c * lv.h1[i] * f;
            case 2: return (c * lv.h2[i] + c2 * lv.h1[i] * lv.h1[i]) * f;
            default:
                return (c * lv.h3[i] + 3.0 * c2 * lv.h1[i] * lv.h2[i] + c3 * lv.h1[i] * lv.h1[i] * lv.h1[i]) * f;
        }
    });
}

SphericalValue spherical_sl2(const SpectralParameter& lambda, double t_geo, const QuadratureConfig& config) {
    check_rank1(lambda);
    if (!(std::abs(t_geo) <= config.t_max)) {
        throw std::invalid_argument("t_geo outside [-T_max, T_max] with T_max = " + std::to_string(config.t_max));
    }
    return Sl2Evaluator(t_geo, config).value(lambda.xi[0], eta_of(lambda));
}

complex deriv_spherical_sl2(const SpectralParameter& lambda, double t_scale, double y, int order,
                            const QuadratureConfig& config) {
    check_rank1(lambda);
    if (!(y >= config.deriv_y_min && y <= config.deriv_y_max)) {
        throw std::invalid_argument("Y outside the derivative interval [" + std::to_string(config.deriv_y_min) + ", " +
                                    std::to_string(config.deriv_y_max) + "]");
    }
    return Sl2Evaluator(y, config).derivative(t_scale * lambda.xi[0], eta_of(lambda), order).value;
}

SphericalValue spherical_sl3(const SpectralParameter& lambda, const std::array<double, 2>& a_log, long samples,
                             std::uint64_t seed) {
    if (lambda.xi.size() != 2 || (lambda.eta.size() != 0 && lambda.eta.size() != 2)) {
        throw std::invalid_argument("SL(3) spectral parameter needs two xi and zero or two eta coordinates");
    }
    if (samples < 10000) throw std::invalid_argument("spherical_sl3 needs at least 10^4 samples");
    const complex l1(lambda.xi[0], lambda.eta.empty() ? 0.0 : lambda.eta[0]);
    const complex l2(lambda.xi[1], lambda.eta.empty() ? 0.0 : lambda.eta[1]);
    const complex i(0.0, 1.0);
    const double d[3] = {std::exp(a_log[0]), std::exp(a_log[1]), std::exp(-a_log[0] - a_log[1])};

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    complex sum = 0.0;
    double sq_re = 0.0, sq_im = 0.0;
    for (long s = 0; s < samples; ++s) {
        // H(a k) only sees the first two columns of k; Gram-Schmidt on Gaussian
        // vectors gives them the Haar distribution.
        double v1[3], v2[3];
        for (double& x : v1) x = gauss(rng);
        for (double& x : v2) x = gauss(rng);
        const double n1 = std::sqrt(v1[0] * v1[0] + v1[1] * v1[1] + v1[2] * v1[2]);
        for (double& x : v1) x /= n1;
        const double p = v1[0] * v2[0] + v1[1] * v2[1] + v1[2] * v2[2];
        for (int r = 0; r < 3; ++r) v2[r] -= p * v1[r];
        const double n2 = std::sqrt(v2[0] * v2[0] + v2[1] * v2[1] + v2[2] * v2[2]);
        for (double& x : v2) x /= n2;

        double c1[3], c2[3];
        for (int r = 0; r < 3; ++r) {
            c1[r] = d[r] * v1[r];
            c2[r] = d[r] * v2[r];
        }
        const double c11 = c1[0] * c1[0] + c1[1] * c1[1] + c1[2] * c1[2];
        const double c22 = c2[0] * c2[0] + c2[1] * c2[1] + c2[2] * c2[2];
        const double c12 = c1[0] * c2[0] + c1[1] * c2[1] + c1[2] * c2[2];
        const double h1 = 0.5 * std::log(c11);
        const double h2 = 0.5 * std::log(c11 * c22 - c12 * c12) - h1;
        const double h3 = -h1 - h2;
        const complex f = std::exp(i * l1 * (h1 - h2) + i * l2 * (h2 - h3) - (h1 - h3));
        sum += f;
        sq_re += f.real() * f.real();
        sq_im += f.imag() * f.imag();
    }
    const double n = static_cast<double>(samples);
    const complex mean = sum / n;
    const double var = (sq_re / n - mean.real() * mean.real()) + (sq_im / n - mean.imag() * mean.imag());
    return {mean, samples, std::sqrt(std::max(var, 0.0) / n)};
}

double legendre(int n, double x) {
    if (n < 0) throw std::invalid_argument("legendre: negative degree");
    if (!(std::abs(x) <= 1.0)) throw std::invalid_argument("legendre: x must lie in [-1, 1]");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double legendre_deficit(int n, double theta) {
    if (n < 0) throw std::invalid_argument("legendre_deficit: negative degree");
    if (n == 0) return 0.0;
    const double half = std::sin(0.5 * theta);
    const double delta = 2.0 * half * half;  // 1 - cos theta
    double prev = 0.0, cur = delta;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0) * (delta + cur - delta * cur) - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double spherical_compact_su2(int n, double theta) {
    if (n < 0 || n > 10000) throw std::invalid_argument("spherical_compact_su2: n must be in [0, 10^4]");
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw std::invalid_argument("theta must lie in [0, pi]");
    if (n == 0) return 1.0;
    // Trigonometric polynomial of degree n in phi: the trapezoid rule with
    // more than n nodes is exact.
    const long nodes = 2L * n + 2;
    const double ct = std::cos(theta), st = std::sin(theta);
    complex sum = 0.0;
    for (long j = 0; j < nodes; ++j) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes);
        const complex z(ct, st * std::cos(phi));
        if (std::abs(z) == 0.0) continue;
        sum += std::exp(static_cast<double>(n) * std::log(z));
    }
    const complex mean = sum / static_cast<double>(nodes);
    if (std::abs(mean.imag()) > 1e-10) {
        throw QuadratureError("Laplace integral left an imaginary part " + std::to_string(mean.imag()));
    }
    return mean.real();
}

}  // namespace kappa
