#include "kappa/liegroup.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kappa {

namespace {

void check_conditioning(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    const double smallest = s(s.size() - 1);
    if (!(smallest > 0.0) || s(0) / smallest > kMaxCondition || !std::isfinite(s(0))) {
        throw std::domain_error("numerically singular matrix (condition number above 1e12)");
    }
}

}  // namespace

SpecialLinearElement::SpecialLinearElement(Eigen::MatrixXd entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) throw std::invalid_argument("SL(n) element must be square, n >= 1");
    if (!m_.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
    const double det = m_.determinant();
    const int n = static_cast<int>(m_.rows());
    if (det == 0.0 || !std::isfinite(det)) throw std::invalid_argument("matrix is singular");
    if (det < 0.0 && n % 2 == 0) throw std::invalid_argument("negative determinant cannot be normalized in even dimension");
    const double root = std::copysign(std::pow(std::abs(det), 1.0 / n), det);
    m_ /= root;
}

SpecialLinearElement SpecialLinearElement::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    in.imbue(std::locale::classic());
    long n = 0;
    if (!(in >> n) || n < 1 || n > 64) throw std::invalid_argument("matrix file: first token must be n in [1, 64]");
    Eigen::MatrixXd m(n, n);
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c)
            if (!(in >> m(r, c))) throw std::invalid_argument("matrix file: expected " + std::to_string(n * n) + " entries");
    std::string extra;
    if (in >> extra) throw std::invalid_argument("matrix file: trailing content '" + extra + "'");
    return SpecialLinearElement(std::move(m));
}

std::string SpecialLinearElement::to_text() const {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::setprecision(17) << n() << "\n";
    for (int r = 0; r < n(); ++r) {
        for (int c = 0; c < n(); ++c) out << (c ? " " : "") << m_(r, c);
        out << "\n";
    }
    return out.str();
}

Eigen::MatrixXd IwasawaFactors::reconstruct() const {
    return k * h.array().exp().matrix().asDiagonal() * nu;
}

Eigen::MatrixXd KAKFactors::reconstruct() const {
    return k1 * a_log.array().exp().matrix().asDiagonal() * k2.transpose();
}

IwasawaFactors iwasawa(const SpecialLinearElement& g) {
    check_conditioning(g.matrix());
    const int n = g.n();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g.matrix());
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        if (r(i, i) < 0) {
            q.col(i) *= -1.0;
            r.row(i) *= -1.0;
        }
    }
    IwasawaFactors f;
    f.h = r.diagonal().array().log();
    f.h.array() -= f.h.mean();
    f.nu = r.diagonal().cwiseInverse().asDiagonal() * r;
    for (int i = 0; i < n; ++i) f.nu(i, i) = 1.0;
    f.k = std::move(q);
    return f;
}

Eigen::VectorXd iwasawa_projection(const SpecialLinearElement& g) { return iwasawa(g).h; }

KAKFactors kak(const SpecialLinearElement& g) {
    check_conditioning(g.matrix());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(g.matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    KAKFactors f;
    f.k1 = svd.matrixU();
    f.k2 = svd.matrixV();
    // det U * det V = 1 here, so either both are rotations or flipping the
    // same column of each leaves U S V^T unchanged.
    if (f.k1.determinant() < 0) {
        f.k1.col(f.k1.cols() - 1) *= -1.0;
        f.k2.col(f.k2.cols() - 1) *= -1.0;
    }
    f.a_log = svd.singularValues().array().log();
    f.a_log.array() -= f.a_log.mean();
    return f;
}

bool is_regular(const SpecialLinearElement& g, double tol) {
    const Eigen::VectorXd a = kak(g).a_log;
    for (Eigen::Index i = 0; i + 1 < a.size(); ++i)
        if (!(a(i) - a(i + 1) > tol)) return false;
    return true;
}

double rho_of(const Eigen::VectorXd& h) {
    const auto n = static_cast<double>(h.size());
    double s = 0.0;
    for (Eigen::Index i = 0; i < h.size(); ++i) s += (n + 1.0 - 2.0 * static_cast<double>(i + 1)) / 2.0 * h(i);
    return s;
}

std::vector<QuadratureNode> so2_nodes(int count) {
    if (count < 1) throw std::invalid_argument("so2_nodes: count must be positive");
    std::vector<QuadratureNode> nodes(count);
    for (int j = 0; j < count; ++j) nodes[j] = {2.0 * std::numbers::pi * j / count, 1.0 / count};
    return nodes;
}

std::vector<Eigen::MatrixXd> haar_so_n_sample(int n, std::uint64_t seed, int count) {
    if (n < 2) throw std::invalid_argument("haar_so_n_sample: n must be at least 2");
    if (count < 0) throw std::invalid_argument("haar_so_n_sample: negative count");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<Eigen::MatrixXd> out;
    out.reserve(count);
    Eigen::MatrixXd z(n, n);
    for (int s = 0; s < count; ++s) {
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) z(r, c) = gauss(rng);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
        Eigen::MatrixXd q = qr.householderQ();
        const auto& packed = qr.matrixQR();
        for (int i = 0; i < n; ++i)
            if (packed(i, i) < 0) q.col(i) *= -1.0;
        if (q.determinant() < 0) q.col(0) *= -1.0;
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace kappa
