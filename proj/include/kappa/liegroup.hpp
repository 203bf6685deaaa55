#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace kappa {

/// n x n real matrix rescaled to determinant one at construction.
class SpecialLinearElement {
public:
    /// Throws std::invalid_argument for non-square input or a determinant
    /// that cannot be normalized (zero, or negative in even dimension).
    explicit SpecialLinearElement(Eigen::MatrixXd entries);

    int n() const noexcept { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const noexcept { return m_; }

    /// First line "n", then n rows of n whitespace-separated numbers.
    static SpecialLinearElement parse(std::string_view text);
    std::string to_text() const;

private:
    Eigen::MatrixXd m_;
};

struct IwasawaFactors {
    Eigen::MatrixXd k;   // SO(n)
    Eigen::VectorXd h;   // log diag, sums to zero
    Eigen::MatrixXd nu;  // upper unipotent

    Eigen::MatrixXd reconstruct() const;
};

struct KAKFactors {
    Eigen::MatrixXd k1;
    Eigen::MatrixXd k2;
    Eigen::VectorXd a_log;  // non-increasing, sums to zero

    /// k1 * exp(diag a_log) * k2^T
    Eigen::MatrixXd reconstruct() const;
};

/// Condition number above which decompositions refuse the input.
inline constexpr double kMaxCondition = 1e12;

IwasawaFactors iwasawa(const SpecialLinearElement& g);
Eigen::VectorXd iwasawa_projection(const SpecialLinearElement& g);
KAKFactors kak(const SpecialLinearElement& g);

/// Every gap a_log[i] - a_log[i+1] exceeds tol.
bool is_regular(const SpecialLinearElement& g, double tol = 1e-6);

/// rho(H) = sum_i (n + 1 - 2i)/2 * h_i for SL(n, R), i = 1..n.
double rho_of(const Eigen::VectorXd& h);

struct QuadratureNode {
    double angle;
    double weight;
};

/// Uniform trapezoid nodes on [0, 2pi) with weights 1/count.
std::vector<QuadratureNode> so2_nodes(int count);

/// Haar-distributed rotations from QR of Gaussian matrices (mt19937_64 seeded).
std::vector<Eigen::MatrixXd> haar_so_n_sample(int n, std::uint64_t seed, int count);

}  // namespace kappa
