#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/rational.hpp"

namespace kappa {

enum class Family { A, B, C, D, BC, E6, E7, E8, F4, G2 };

/// Accepts "A", "B", ..., "BC", "E6", "F4", "G2" (case-sensitive).
Family parse_family(std::string_view text);
std::string_view family_name(Family family);

enum class LengthClass { All, Medium, Short, Long };

LengthClass parse_length_class(std::string_view text);
std::string_view length_class_name(LengthClass cls);

using MultAssignment = std::map<LengthClass, int>;

/// "medium:2 short:2 long:1"; commas are accepted as separators too.
MultAssignment parse_mult(std::string_view text);
/// Space-separated, in enum order.
std::string format_mult(const MultAssignment& mult);

/// Root-length classes present in the positive roots of family at this rank.
std::vector<LengthClass> length_classes(Family family, int rank);

/// Rank pinned by the family for exceptional types, 0 for classical ones.
int fixed_rank(Family family);

struct PositiveRoot {
    std::vector<int> coeffs;
    int multiplicity = 1;
    LengthClass length = LengthClass::All;
    std::int64_t norm2 = 0;  // <alpha, alpha>

    friend bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
};

/// Element of a* in simple-root coordinates.
struct Covector {
    RationalVector coords;

    Covector() = default;
    explicit Covector(RationalVector c) : coords(std::move(c)) {}

    std::size_t size() const noexcept { return coords.size(); }
    std::string to_string() const;

    friend bool operator==(const Covector&, const Covector&) = default;
};

Covector operator+(const Covector& a, const Covector& b);
Covector operator-(const Covector& a, const Covector& b);
Covector operator*(const Rational& s, const Covector& a);

/// Acts on simple-root coordinates. matrix = s_{word[0]} * s_{word[1]} * ...
struct WeylElement {
    RationalMatrix matrix;
    std::vector<int> word;

    Covector apply(const Covector& lambda) const;
};

class RootSystem {
public:
    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    const RationalMatrix& gram() const noexcept { return gram_; }
    const std::vector<PositiveRoot>& positive_roots() const noexcept { return roots_; }
    bool reduced() const noexcept { return reduced_; }
    const MultAssignment& multiplicities() const noexcept { return mult_; }

    /// Integer row G * coeffs(alpha), so <alpha, lambda> = row . lambda.coords.
    const std::vector<std::int64_t>& pairing_row(std::size_t root) const { return pairing_[root]; }

    Covector root_covector(std::size_t root) const;
    Covector simple_root(int i) const;

    /// Index of the root with these coefficients, or -1.
    int find_root(const std::vector<int>& coeffs) const;

private:
    friend RootSystem build_root_system(Family, int, const MultAssignment&);

    Family family_ = Family::A;
    int rank_ = 0;
    RationalMatrix gram_;
    std::vector<PositiveRoot> roots_;
    std::vector<std::vector<std::int64_t>> pairing_;
    MultAssignment mult_;
    bool reduced_ = true;
};

/// Throws std::invalid_argument on a bad family/rank pair or a multiplicity
/// map that misses, adds, or misvalues a length class.
RootSystem build_root_system(Family family, int rank, const MultAssignment& mult);

Rational inner(const RootSystem& sys, const Covector& lambda, const Covector& mu);

/// Sum of m(alpha) over positive roots with <alpha, lambda> != 0, exact.
int n_of(const RootSystem& sys, const Covector& lambda);

/// Half the least multiplicity-weighted count of positive roots that involve
/// a given simple root.
Rational kappa(const RootSystem& sys);

/// Full Weyl group, identity first. Throws std::length_error above max_rank.
std::vector<WeylElement> weyl_group(const RootSystem& sys, int max_rank = 4);

WeylElement simple_reflection(const RootSystem& sys, int i);

Covector reflect(const RootSystem& sys, const PositiveRoot& alpha, const Covector& lambda);

Covector rho(const RootSystem& sys);

std::vector<Covector> fundamental_weights(const RootSystem& sys);

struct DominantResult {
    Covector dominant;
    WeylElement element;  // element.apply(lambda) == dominant
};

DominantResult dominant_representative(const RootSystem& sys, const Covector& lambda);

/// Membership of eta in the convex hull of the Weyl orbit of rho.
bool in_bounded_region(const RootSystem& sys, const Covector& eta);

}  // namespace kappa
