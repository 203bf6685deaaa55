#include "kappa/rootsys.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kappa {

namespace {

constexpr int kMaxRank = 64;

struct FamilyName {
    Family family;
    std::string_view name;
};

constexpr std::array<FamilyName, 10> kFamilies{{
    {Family::A, "A"},   {Family::B, "B"},   {Family::C, "C"},   {Family::D, "D"},   {Family::BC, "BC"},
    {Family::E6, "E6"}, {Family::E7, "E7"}, {Family::E8, "E8"}, {Family::F4, "F4"}, {Family::G2, "G2"},
}};

std::vector<LengthClass> documented_classes(Family family) {
    switch (family) {
        case Family::A:
        case Family::D:
        case Family::E6:
        case Family::E7:
        case Family::E8:
            return {LengthClass::All};
        case Family::BC:
            return {LengthClass::Medium, LengthClass::Short, LengthClass::Long};
        default:
            return {LengthClass::Short, LengthClass::Long};
    }
}

LengthClass classify(Family family, std::int64_t norm2) {
    switch (family) {
        case Family::A:
        case Family::D:
        case Family::E6:
        case Family::E7:
        case Family::E8:
            return LengthClass::All;
        case Family::BC:
            if (norm2 == 2) return LengthClass::Short;
            return norm2 == 4 ? LengthClass::Medium : LengthClass::Long;
        default:
            return norm2 == 2 ? LengthClass::Short : LengthClass::Long;
    }
}

// Gram matrix of ambient integer vectors, scaled.
RationalMatrix ambient_gram(const std::vector<std::vector<int>>& vectors, int scale) {
    const std::size_t n = vectors.size();
    RationalMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t dot = 0;
            for (std::size_t k = 0; k < vectors[i].size(); ++k) dot += vectors[i][k] * vectors[j][k];
            g(i, j) = dot * scale;
        }
    return g;
}

std::vector<int> unit_difference(int dim, int i, int j, int sign) {
    std::vector<int> v(dim, 0);
    v[i] = 1;
    if (j >= 0) v[j] = sign;
    return v;
}

RationalMatrix from_edges(int rank, const std::vector<std::array<int, 3>>& edges, const std::vector<int>& diag) {
    RationalMatrix g(rank, rank);
    for (int i = 0; i < rank; ++i) g(i, i) = diag[i];
    for (const auto& [a, b, w] : edges) {
        g(a, b) = w;
        g(b, a) = w;
    }
    return g;
}

RationalMatrix simply_laced_e(int rank) {
    // Bourbaki labels, 0-based: 1-3, 3-4, 4-5, 5-6, 6-7, 7-8, 2-4.
    std::vector<std::array<int, 3>> edges{{0, 2, -1}, {1, 3, -1}};
    for (int i = 2; i + 1 < rank; ++i) edges.push_back({i, i + 1, -1});
    return from_edges(rank, edges, std::vector<int>(rank, 2));
}

RationalMatrix make_gram(Family family, int rank) {
    std::vector<std::vector<int>> vecs;
    switch (family) {
        case Family::A:
            for (int i = 0; i < rank; ++i) vecs.push_back(unit_difference(rank + 1, i, i + 1, -1));
            return ambient_gram(vecs, 1);
        case Family::B:
        case Family::BC:
            for (int i = 0; i + 1 < rank; ++i) vecs.push_back(unit_difference(rank, i, i + 1, -1));
            vecs.push_back(unit_difference(rank, rank - 1, -1, 0));
            return ambient_gram(vecs, 2);
        case Family::C: {
            for (int i = 0; i + 1 < rank; ++i) vecs.push_back(unit_difference(rank, i, i + 1, -1));
            std::vector<int> last(rank, 0);
            last[rank - 1] = 2;
            vecs.push_back(last);
            return ambient_gram(vecs, 1);
        }
        case Family::D:
            for (int i = 0; i + 1 < rank; ++i) vecs.push_back(unit_difference(rank, i, i + 1, -1));
            vecs.push_back(unit_difference(rank, rank - 2, rank - 1, 1));
            return ambient_gram(vecs, 1);
        case Family::E6:
        case Family::E7:
        case Family::E8:
            return simply_laced_e(rank);
        case Family::F4:
            return from_edges(4, {{{0, 1, -2}}, {{1, 2, -2}}, {{2, 3, -1}}}, {4, 4, 2, 2});
        case Family::G2:
            return from_edges(2, {{{0, 1, -3}}}, {2, 6});
    }
    throw std::invalid_argument("unknown family");
}

std::int64_t to_int(const Rational& r) {
    if (!r.is_integer()) throw std::logic_error("non-integral Gram entry");
    return r.num();
}

std::int64_t norm_squared(const RationalMatrix& gram, const std::vector<int>& c) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) s += c[i] * to_int(gram(i, j)) * c[j];
    return s;
}

void check_dim(const RootSystem& sys, const Covector& v) {
    if (v.size() != static_cast<std::size_t>(sys.rank())) {
        throw std::invalid_argument("covector has " + std::to_string(v.size()) + " coordinates, rank is " +
                                    std::to_string(sys.rank()));
    }
}

// <lambda, alpha_i> for every simple root.
RationalVector simple_pairings(const RootSystem& sys, const Covector& lambda) {
    return sys.gram().apply(lambda.coords);
}

}  // namespace

Family parse_family(std::string_view text) {
    for (const auto& f : kFamilies)
        if (f.name == text) return f.family;
    throw std::invalid_argument("unknown root-system family '" + std::string(text) + "'");
}

std::string_view family_name(Family family) {
    for (const auto& f : kFamilies)
        if (f.family == family) return f.name;
    return "?";
}

LengthClass parse_length_class(std::string_view text) {
    if (text == "all") return LengthClass::All;
    if (text == "short") return LengthClass::Short;
    if (text == "medium") return LengthClass::Medium;
    if (text == "long") return LengthClass::Long;
    throw std::invalid_argument("unknown root-length class '" + std::string(text) + "'");
}

std::string_view length_class_name(LengthClass cls) {
    switch (cls) {
        case LengthClass::All: return "all";
        case LengthClass::Short: return "short";
        case LengthClass::Medium: return "medium";
        case LengthClass::Long: return "long";
    }
    return "?";
}

MultAssignment parse_mult(std::string_view text) {
    std::string buffer(text);
    std::replace(buffer.begin(), buffer.end(), ',', ' ');
    std::istringstream in(buffer);
    MultAssignment out;
    std::string token;
    while (in >> token) {
        const auto colon = token.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("multiplicity token '" + token + "' lacks ':'");
        const LengthClass cls = parse_length_class(std::string_view(token).substr(0, colon));
        const Rational value = Rational::parse(std::string_view(token).substr(colon + 1));
        if (!value.is_integer() || value.num() <= 0 || value.num() > 1'000'000) {
            throw std::invalid_argument("invalid multiplicity '" + token + "'");
        }
        if (!out.emplace(cls, static_cast<int>(value.num())).second) {
            throw std::invalid_argument("length class repeated in '" + std::string(text) + "'");
        }
    }
    return out;
}

std::string format_mult(const MultAssignment& mult) {
    std::string out;
    for (const auto& [cls, m] : mult) {
        if (!out.empty()) out += ' ';
        out += length_class_name(cls);
        out += ':';
        out += std::to_string(m);
    }
    return out;
}

int fixed_rank(Family family) {
    switch (family) {
        case Family::E6: return 6;
        case Family::E7: return 7;
        case Family::E8: return 8;
        case Family::F4: return 4;
        case Family::G2: return 2;
        default: return 0;
    }
}

std::vector<LengthClass> length_classes(Family family, int rank) {
    if (rank == 1) {
        if (family == Family::B) return {LengthClass::Short};
        if (family == Family::C) return {LengthClass::Long};
        if (family == Family::BC) return {LengthClass::Short, LengthClass::Long};
    }
    return documented_classes(family);
}

std::string Covector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += coords[i].to_string();
    }
    return out;
}

Covector operator+(const Covector& a, const Covector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("covector dimension mismatch");
    Covector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

Covector operator-(const Covector& a, const Covector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("covector dimension mismatch");
    Covector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

Covector operator*(const Rational& s, const Covector& a) {
    Covector out = a;
    for (auto& c : out.coords) c *= s;
    return out;
}

Covector WeylElement::apply(const Covector& lambda) const { return Covector(matrix.apply(lambda.coords)); }

Covector RootSystem::root_covector(std::size_t root) const {
    RationalVector c;
    for (int v : roots_.at(root).coeffs) c.emplace_back(v);
    return Covector(std::move(c));
}

Covector RootSystem::simple_root(int i) const {
    RationalVector c(rank_);
    c.at(i) = 1;
    return Covector(std::move(c));
}

int RootSystem::find_root(const std::vector<int>& coeffs) const {
    auto it = std::lower_bound(roots_.begin(), roots_.end(), coeffs,
                               [](const PositiveRoot& r, const std::vector<int>& c) { return r.coeffs < c; });
    if (it == roots_.end() || it->coeffs != coeffs) return -1;
    return static_cast<int>(it - roots_.begin());
}

RootSystem build_root_system(Family family, int rank, const MultAssignment& mult) {
    const int pinned = fixed_rank(family);
    if (pinned && rank != pinned) {
        throw std::invalid_argument(std::string(family_name(family)) + " has rank " + std::to_string(pinned) +
                                    ", got " + std::to_string(rank));
    }
    if (rank < 1 || (family == Family::D && rank < 2) || rank > kMaxRank) {
        throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                    std::string(family_name(family)));
    }

    const auto allowed = documented_classes(family);
    const auto present = length_classes(family, rank);
    for (const auto& [cls, m] : mult) {
        if (m <= 0) throw std::invalid_argument("invalid multiplicity " + std::to_string(m));
        if (std::find(allowed.begin(), allowed.end(), cls) == allowed.end()) {
            throw std::invalid_argument("length class '" + std::string(length_class_name(cls)) +
                                        "' does not exist for family " + std::string(family_name(family)));
        }
        if (std::find(present.begin(), present.end(), cls) == present.end()) {
            throw std::invalid_argument("length class '" + std::string(length_class_name(cls)) + "' does not occur in " +
                                        std::string(family_name(family)) + std::to_string(rank));
        }
    }
    for (LengthClass cls : present) {
        if (!mult.count(cls)) {
            throw std::invalid_argument("incomplete multiplicity assignment: missing '" +
                                        std::string(length_class_name(cls)) + "'");
        }
    }

    RootSystem sys;
    sys.family_ = family;
    sys.rank_ = rank;
    sys.gram_ = make_gram(family, rank);
    sys.mult_ = mult;
    sys.reduced_ = family != Family::BC;

    std::vector<std::int64_t> diag(rank);
    for (int i = 0; i < rank; ++i) diag[i] = to_int(sys.gram_(i, i));

    // Closure of the simple roots under simple reflections, staying positive.
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        const std::vector<int> beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank; ++i) {
            std::int64_t pair = 0;
            for (int j = 0; j < rank; ++j) pair += to_int(sys.gram_(i, j)) * beta[j];
            if ((2 * pair) % diag[i] != 0) throw std::logic_error("non-crystallographic Gram matrix");
            const std::int64_t cartan = 2 * pair / diag[i];
            if (cartan == 0) continue;
            std::vector<int> image = beta;
            image[i] -= static_cast<int>(cartan);
            if (image[i] < 0) continue;
            if (seen.insert(image).second) queue.push_back(image);
        }
    }
    if (family == Family::BC) {
        std::vector<std::vector<int>> doubles;
        for (const auto& beta : seen) {
            if (norm_squared(sys.gram_, beta) == 2) {
                auto twice = beta;
                for (int& c : twice) c *= 2;
                doubles.push_back(std::move(twice));
            }
        }
        seen.insert(doubles.begin(), doubles.end());
    }

    for (const auto& coeffs : seen) {
        PositiveRoot root;
        root.coeffs = coeffs;
        root.norm2 = norm_squared(sys.gram_, coeffs);
        root.length = classify(family, root.norm2);
        root.multiplicity = mult.at(root.length);
        std::vector<std::int64_t> row(rank, 0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) row[i] += to_int(sys.gram_(i, j)) * coeffs[j];
        sys.pairing_.push_back(std::move(row));
        sys.roots_.push_back(std::move(root));
    }
    return sys;
}

Rational inner(const RootSystem& sys, const Covector& lambda, const Covector& mu) {
    check_dim(sys, lambda);
    check_dim(sys, mu);
    const RationalVector g_mu = sys.gram().apply(mu.coords);
    Rational acc;
    for (std::size_t i = 0; i < g_mu.size(); ++i) acc += lambda.coords[i] * g_mu[i];
    return acc;
}

int n_of(const RootSystem& sys, const Covector& lambda) {
    check_dim(sys, lambda);
    // Clear denominators once; the zero test is unchanged by a positive scale.
    __int128 common = 1;
    for (const auto& c : lambda.coords) {
        const __int128 d = c.den();
        common = common / std::gcd(static_cast<std::int64_t>(common), c.den()) * d;
        if (common > std::numeric_limits<std::int64_t>::max()) throw RationalOverflow("n_of: denominator overflow");
    }
    std::vector<__int128> scaled(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        scaled[i] = static_cast<__int128>(lambda.coords[i].num()) * (common / lambda.coords[i].den());
    }
    int total = 0;
    const auto& roots = sys.positive_roots();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const auto& row = sys.pairing_row(k);
        __int128 acc = 0;
        for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * scaled[i];
        if (acc != 0) total += roots[k].multiplicity;
    }
    return total;
}

Rational kappa(const RootSystem& sys) {
    int best = -1;
    for (int i = 0; i < sys.rank(); ++i) {
        int sum = 0;
        for (const auto& r : sys.positive_roots())
            if (r.coeffs[i] >= 1) sum += r.multiplicity;
        if (best < 0 || sum < best) best = sum;
    }
    if (best < 0) throw std::invalid_argument("kappa of an empty root system");
    return Rational(best, 2);
}

WeylElement simple_reflection(const RootSystem& sys, int i) {
    const int n = sys.rank();
    if (i < 0 || i >= n) throw std::out_of_range("simple reflection index out of range");
    WeylElement s{RationalMatrix::identity(n), {i}};
    const Rational scale = Rational(2) / sys.gram()(i, i);
    for (int j = 0; j < n; ++j) s.matrix(i, j) -= scale * sys.gram()(i, j);
    return s;
}

std::vector<WeylElement> weyl_group(const RootSystem& sys, int max_rank) {
    if (sys.rank() > max_rank) {
        throw std::length_error("Weyl group enumeration refused: rank " + std::to_string(sys.rank()) +
                                " exceeds bound " + std::to_string(max_rank));
    }
    std::vector<WeylElement> gens;
    for (int i = 0; i < sys.rank(); ++i) gens.push_back(simple_reflection(sys, i));

    std::vector<WeylElement> elements{WeylElement{RationalMatrix::identity(sys.rank()), {}}};
    std::set<RationalMatrix> seen{elements.front().matrix};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (int i = 0; i < sys.rank(); ++i) {
            RationalMatrix next = gens[i].matrix * elements[head].matrix;
            if (seen.count(next)) continue;
            seen.insert(next);
            std::vector<int> word{i};
            word.insert(word.end(), elements[head].word.begin(), elements[head].word.end());
            elements.push_back(WeylElement{std::move(next), std::move(word)});
        }
    }
    return elements;
}

Covector reflect(const RootSystem& sys, const PositiveRoot& alpha, const Covector& lambda) {
    check_dim(sys, lambda);
    RationalVector a;
    for (int c : alpha.coeffs) a.emplace_back(c);
    const Covector alpha_vec(std::move(a));
    const Rational factor = Rational(2) * inner(sys, lambda, alpha_vec) / inner(sys, alpha_vec, alpha_vec);
    return lambda - factor * alpha_vec;
}

Covector rho(const RootSystem& sys) {
    RationalVector sum(sys.rank());
    for (const auto& r : sys.positive_roots())
        for (int i = 0; i < sys.rank(); ++i) sum[i] += Rational(static_cast<std::int64_t>(r.multiplicity) * r.coeffs[i]);
    for (auto& c : sum) c /= 2;
    return Covector(std::move(sum));
}

std::vector<Covector> fundamental_weights(const RootSystem& sys) {
    const int n = sys.rank();
    std::vector<Covector> out;
    for (int i = 0; i < n; ++i) {
        std::vector<int> twice(n, 0);
        twice[i] = 2;
        const std::int64_t ratio = sys.find_root(twice) >= 0 ? 2 : 1;
        RationalVector rhs(n);
        rhs[i] = sys.gram()(i, i) * Rational(ratio);
        out.emplace_back(solve(sys.gram(), rhs));
    }
    return out;
}

DominantResult dominant_representative(const RootSystem& sys, const Covector& lambda) {
    check_dim(sys, lambda);
    DominantResult result{lambda, WeylElement{RationalMatrix::identity(sys.rank()), {}}};
    for (;;) {
        const RationalVector pairs = simple_pairings(sys, result.dominant);
        int i = 0;
        while (i < sys.rank() && pairs[i].sign() >= 0) ++i;
        if (i == sys.rank()) return result;
        const WeylElement s = simple_reflection(sys, i);
        result.dominant = s.apply(result.dominant);
        result.element.matrix = s.matrix * result.element.matrix;
        result.element.word.insert(result.element.word.begin(), i);
    }
}

bool in_bounded_region(const RootSystem& sys, const Covector& eta) {
    const Covector gap = rho(sys) - dominant_representative(sys, eta).dominant;
    return std::all_of(gap.coords.begin(), gap.coords.end(), [](const Rational& c) { return c.sign() >= 0; });
}

}  // namespace kappa
