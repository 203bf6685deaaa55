#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace kappa {

struct DecayFit {
    std::vector<std::pair<double, double>> samples;  // (t, magnitude)
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Least squares of log magnitude against log t. Needs >= 8 samples, t
/// strictly increasing, magnitudes > 0.
DecayFit decay_fit(const std::vector<std::pair<double, double>>& samples);

/// Largest |f| over `points` equally spaced parameters in [t, t + window].
/// Pointwise values of an oscillating decay carry zeros of the cosine factor;
/// the local envelope is what a power-law bound controls.
double oscillation_envelope(const std::function<double(double)>& magnitude, double t, double window, int points);

struct WeylTerm {
    int sign = 1;                       // +1 for the identity, -1 for the reflection
    std::complex<double> phase_value;   // exp(i t (w lambda)(Y)) or its compact analogue
    std::complex<double> amplitude;     // c_w
};

struct LeadingTerm {
    std::vector<WeylTerm> terms;
    double decay_power = 0.5;
    std::complex<double> total;
};

/// Default amplitude for the spherical function: exp(-rho(H(a_Y k_theta))).
std::function<double(double)> sl2_spherical_amplitude(double y);

/// Two-point stationary phase for the SL(2) K-integral at scale t.
/// Throws std::invalid_argument for Y <= 0 or xi == 0.
LeadingTerm leading_term_sl2(double xi, double y, double t, const std::function<double(double)>& amplitude);

/// det(-L)^(-1/2) for the compact rank-one Hessian at (w alpha)(Y), w = +1 or -1.
std::complex<double> hessian_det_compact_rank1(double pairing, double y, int w);

/// Stationary-phase term for P_n(cos theta) built from hessian_det_compact_rank1.
LeadingTerm leading_term_su2(int n, double theta);

/// Grid angles in [0, 2pi) where the central-difference derivative of
/// theta -> xi * rho(H(a_Y k_theta)) has magnitude below tol.
std::vector<double> stationary_points_check_sl2(double xi, double y, double tol, int grid = 4096);

enum class HolderVerdict { Bounded, Growing };

struct HolderReport {
    double alpha = 0.0;
    int derivative_order = 0;
    std::vector<double> family_params;
    std::vector<double> sup_quotients;
    HolderVerdict verdict = HolderVerdict::Bounded;
    /// max sup-quotient over t >= t_max/10 divided by the max over t <= 10 t_min.
    double growth_ratio = 0.0;
    /// max / min sup-quotient across the sweep.
    double spread = 0.0;
    double threshold = 2.0;
};

/// samples[k][i] = D^r f_{t_k}(grid[i]). Pairs are taken at every dyadic
/// index separation among grid points inside [region_lo, region_hi].
HolderReport holder_estimate(const std::vector<double>& grid, const std::vector<double>& family_params,
                             const std::vector<std::vector<std::complex<double>>>& samples, int derivative_order,
                             double alpha, double region_lo, double region_hi, double threshold = 2.0);

std::string verdict_name(HolderVerdict v);

/// Cesaro mean over t = m..m+N-1 of |sum_j f_j(x) e^{i t u_j(x)} - f_j(y) e^{i t u_j(y)}|^2.
double exp_sum_separation(const std::vector<std::complex<double>>& f_x, const std::vector<std::complex<double>>& f_y,
                          const std::vector<double>& u_x, const std::vector<double>& u_y, long m, long n_terms);

struct BlowupRow {
    int n = 0;
    double theta = 0.0;
    double quotient = 0.0;  // |P_n(1) - P_n(cos theta)| / theta^alpha
};

struct BlowupReport {
    double alpha = 0.5;
    std::vector<BlowupRow> rows;
    double last_over_first = 0.0;
    bool monotone_increasing = false;
};

/// Pairs ns[i] with thetas[i]; theta in (0, 0.5), alpha in (0, 1].
BlowupReport singular_blowup_check(const std::vector<int>& ns, const std::vector<double>& thetas, double alpha);

}  // namespace kappa
