#include "kappa/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace kappa {

namespace {

using wide = __int128;

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide kMin = std::numeric_limits<std::int64_t>::min();

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(wide numerator, wide denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const wide g = wide_gcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    if (numerator > kMax || numerator < kMin || denominator > kMax) {
        throw RationalOverflow("rational arithmetic overflow");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
    if (r.num_ == 0) r.den_ = 1;
    return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == 1 && rhs.den_ == 1) {
        std::int64_t sum = 0;
        if (__builtin_add_overflow(num_, rhs.num_, &sum)) throw RationalOverflow("rational arithmetic overflow");
        num_ = sum;
        return *this;
    }
    if (den_ == rhs.den_) {
        *this = from_wide(static_cast<wide>(num_) + rhs.num_, den_);
    } else {
        *this = from_wide(static_cast<wide>(num_) * rhs.den_ + static_cast<wide>(rhs.num_) * den_,
                          static_cast<wide>(den_) * rhs.den_);
    }
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (num_ == 0 || rhs.num_ == 0) {
        *this = Rational{};
        return *this;
    }
    if (den_ == 1 && rhs.den_ == 1) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(num_, rhs.num_, &prod)) throw RationalOverflow("rational arithmetic overflow");
        num_ = prod;
        return *this;
    }
    *this = from_wide(static_cast<wide>(num_) * rhs.num_, static_cast<wide>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    *this = from_wide(static_cast<wide>(num_) * rhs.den_, static_cast<wide>(den_) * rhs.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const wide l = static_cast<wide>(lhs.num_) * rhs.den_;
    const wide r = static_cast<wide>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) acc += a * v[c];
        }
        out[r] = acc;
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    return out;
}

RationalVector solve(const RationalMatrix& a, const RationalVector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
    RationalMatrix m = a;
    RationalVector rhs = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("solve: singular matrix");
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(pivot, c));
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col).is_zero()) continue;
            const Rational factor = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
            rhs[r] -= factor * rhs[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= m(i, i);
    return rhs;
}

Rational determinant(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("determinant: matrix not square");
    RationalMatrix m = a;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Rational{};
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(pivot, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const Rational factor = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

}  // namespace kappa
