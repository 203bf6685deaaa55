#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kappa {

using complex = std::complex<double>;

/// lambda = xi + i eta. For SL(2) both are single coefficients of rho; for
/// SL(3) they are simple-root coordinates.
struct SpectralParameter {
    std::vector<double> xi;
    std::vector<double> eta;
};

struct SphericalValue {
    complex value;
    long quadrature_nodes = 0;  // trapezoid nodes on [0, 2pi), or Monte Carlo samples
    double estimated_error = 0.0;
};

struct QuadratureConfig {
    long min_nodes = 64;
    long max_nodes = 1L << 20;
    /// Converged once the doubling difference is below rel_tol * mean|integrand|.
    double rel_tol = 1e-12;
    double t_max = 5.0;
    double deriv_y_min = 0.2;
    double deriv_y_max = 3.0;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integrand data for the SL(2) K-integral at one geodesic point a_Y.
///
/// Phase h(theta) = rho(H(a_Y k_theta)) and its Y-derivatives are tabulated on
/// nested trapezoid grids and reused by every lambda evaluated at this Y.
class Sl2Evaluator {
public:
    explicit Sl2Evaluator(double y, QuadratureConfig config = {});

    double y() const noexcept { return y_; }

    /// phi_lambda(a_Y) for lambda = xi + i eta (rho units).
    SphericalValue value(double xi, double eta);

    /// order-th derivative in Y of phi_lambda(a_Y), order in 0..3.
    SphericalValue derivative(double xi, double eta, int order);

private:
    struct Level {
        std::vector<double> h, h1, h2, h3;
        std::vector<double> weight;  // multiplicity of each node in the full period
    };

    void grow();
    template <class F>
    SphericalValue integrate(F&& integrand);

    double y_;
    QuadratureConfig config_;
    std::vector<Level> levels_;
};

SphericalValue spherical_sl2(const SpectralParameter& lambda, double t_geo, const QuadratureConfig& config = {});

/// Monte Carlo over SO(3); a_log = (a1, a2) with a3 = -a1 - a2.
SphericalValue spherical_sl3(const SpectralParameter& lambda, const std::array<double, 2>& a_log,
                             long samples = 20000, std::uint64_t seed = 42);

double legendre(int n, double x);

/// 1 - P_n(cos theta), run through the recurrence for the deficit so it keeps
/// full relative precision as theta -> 0.
double legendre_deficit(int n, double theta);

/// Laplace integral (1/pi) int_0^pi (cos theta + i sin theta cos phi)^n dphi.
double spherical_compact_su2(int n, double theta);

/// order-th Y-derivative of psi at lambda_t = t * xi + i eta.
complex deriv_spherical_sl2(const SpectralParameter& lambda, double t_scale, double y, int order,
                            const QuadratureConfig& config = {});

}  // namespace kappa
