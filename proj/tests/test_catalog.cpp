#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "kappa/catalog.hpp"

using namespace kappa;

namespace {

// Closed-form table values, keyed by Cartan label and parameters.
Rational table_value(const SymmetricSpaceEntry& e) {
    const auto p = [&](const char* k) { return e.params.at(k); };
    const std::string& c = e.cartan_label;
    if (c == "complex-A") return p("n") - 1;
    if (c == "complex-B" || c == "complex-C") return 2 * p("n") - 1;
    if (c == "complex-D") {
        const int n = p("n");
        return n == 2 ? 1 : n == 3 ? 3 : 2 * n - 2;
    }
    if (c == "complex-G2") return 5;
    if (c == "complex-F4") return 15;
    if (c == "complex-E6") return 16;
    if (c == "complex-E7") return 27;
    if (c == "complex-E8") return 57;
    if (c == "AI") return Rational(p("n") - 1, 2);
    if (c == "AII") return 2 * (p("n") - 1);
    if (c == "AIII") return p("p") == 2 && p("q") == 2 ? Rational(2) : Rational(2 * (p("p") + p("q")) - 3, 2);
    if (c == "BDI") {
        if (p("p") == 2 && p("q") == 2) return Rational(1, 2);
        if (p("p") == 3 && p("q") == 3) return Rational(3, 2);
        return Rational(p("p") + p("q"), 2) - 1;
    }
    if (c == "CI") return Rational(2 * p("n") - 1, 2);
    if (c == "CII") return p("p") == 2 && p("q") == 2 ? Rational(5) : Rational(4 * (p("p") + p("q")) - 5, 2);
    if (c == "DIII-even") {
        const int n = p("n");
        return n <= 3 ? Rational(n) * Rational(2 * n - 1, 2) : Rational(8 * n - 7, 2);
    }
    if (c == "DIII-odd") return Rational(8 * p("n") - 3, 2);
    static const std::map<std::string, Rational> exceptional{
        {"EI", 8},  {"EII", Rational(21, 2)}, {"EIII", Rational(21, 2)}, {"EIV", 8},
        {"EV", Rational(27, 2)}, {"EVI", Rational(33, 2)}, {"EVII", Rational(27, 2)},
        {"EVIII", Rational(57, 2)}, {"EIX", Rational(57, 2)}, {"FI", Rational(15, 2)},
        {"FII", Rational(15, 2)}, {"G", Rational(5, 2)}};
    return exceptional.at(c);
}

const char* kMinimal = R"(format_version = 1

[entry]
id = AI-n3
label = SL(3,R)
cartan = AI
params = n:3
family = A rank:2
mult = all:1
kappa = 1
)";

std::string replace(std::string text, const std::string& from, const std::string& to) {
    text.replace(text.find(from), from.size(), to);
    return text;
}

}  // namespace

TEST_CASE("default catalog covers both tables") {
    const auto& cat = default_catalog();
    CHECK(cat.entries.size() >= 40);
    std::set<std::string> labels;
    for (const auto& e : cat.entries) labels.insert(e.cartan_label);
    for (const char* need : {"complex-A", "complex-B", "complex-C", "complex-D", "complex-E6", "complex-E7",
                             "complex-E8", "complex-F4", "complex-G2", "AI", "AII", "AIII", "BDI", "CI", "CII",
                             "DIII-even", "DIII-odd", "EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII",
                             "EIX", "FI", "FII", "G"}) {
        CHECK(labels.count(need) == 1);
    }
    CHECK_NOTHROW(cat.find("BDI-p2-q2"));
    CHECK_NOTHROW(cat.find("BDI-p3-q3"));
    CHECK_NOTHROW(cat.find("AIII-p2-q2"));
}

TEST_CASE("stored kappa equals the closed form, computed kappa equals both") {
    for (const auto& e : default_catalog().entries) {
        INFO(e.id);
        CHECK(e.expected_kappa == table_value(e));
        CHECK(kappa::kappa(instantiate(e)) == table_value(e));
    }
    for (const auto& row : kappa_table(default_catalog())) {
        INFO(row.id);
        CHECK(row.match);
        CHECK(row.error.empty());
    }
}

TEST_CASE("named table rows") {
    const auto& cat = default_catalog();
    CHECK(kappa::kappa(instantiate(cat.find("DIII-odd-n2"))) == Rational(13, 2));
    CHECK(kappa::kappa(instantiate(cat.find("G"))) == Rational(5, 2));
    CHECK(kappa::kappa(instantiate(cat.find("complex-E8"))) == 57);
    CHECK(kappa::kappa(instantiate(cat.find("BDI-p2-q2"))) == Rational(1, 2));
    CHECK(kappa::kappa(instantiate(cat.find("BDI-p3-q3"))) == Rational(3, 2));
}

TEST_CASE("instantiate examples") {
    const auto& cat = default_catalog();
    const auto ai = instantiate(cat.find("AI-n3"));
    CHECK(ai.family() == Family::A);
    CHECK(ai.rank() == 2);
    for (const auto& r : ai.positive_roots()) CHECK(r.multiplicity == 1);
    const auto sl4c = instantiate(cat.find("complex-A-n4"));
    CHECK(sl4c.rank() == 3);
    for (const auto& r : sl4c.positive_roots()) CHECK(r.multiplicity == 2);
    const auto su23 = instantiate(cat.find("AIII-p2-q3"));
    CHECK(su23.family() == Family::BC);
    CHECK(su23.multiplicities() == parse_mult("medium:2 short:2 long:1"));
    CHECK(kappa::kappa(su23) == Rational(7, 2));
}

TEST_CASE("serialize and reload is the identity") {
    const auto& cat = default_catalog();
    CHECK(load_catalog(serialize_catalog(cat)) == cat);
    CHECK(resolve_catalog("default") == cat);
    CHECK(resolve_catalog("") == cat);
}

TEST_CASE("empty catalog is valid") {
    const auto cat = load_catalog("format_version = 1\n");
    CHECK(cat.entries.empty());
    CHECK(kappa_table(cat).empty());
}

TEST_CASE("strict parser rejects malformed entries") {
    CHECK_NOTHROW(load_catalog(kMinimal));
    const std::string base = kMinimal;
    auto line_of = [](const std::string& text) {
        try {
            load_catalog(text);
        } catch (const CatalogError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK_THROWS_WITH(load_catalog(replace(base, "all:1", "all:0")), Catch::Matchers::ContainsSubstring("invalid multiplicity"));
    CHECK(line_of(replace(base, "all:1", "all:0")) == 9);
    CHECK_THROWS_AS(load_catalog(replace(base, "kappa = 1", "kappa = 1\ncolor = red")), CatalogError);
    CHECK_THROWS_AS(load_catalog(replace(base, "kappa = 1", "kappa = 1\nkappa = 1")), CatalogError);
    CHECK_THROWS_AS(load_catalog(replace(base, "kappa = 1\n", "")), CatalogError);
    CHECK_THROWS_AS(load_catalog(replace(base, "kappa = 1", "kappa = 1/3")), CatalogError);
    CHECK_THROWS_AS(load_catalog(replace(base, "kappa = 1", "kappa = -1")), CatalogError);
    CHECK_THROWS_AS(load_catalog(replace(base, "cartan = AI", "cartan = ZZ")), CatalogError);
    CHECK_THROWS_AS(load_catalog(replace(base, "[entry]", "[group]")), CatalogError);
    CHECK_THROWS_AS(load_catalog(base + "\n[entry]\nid = AI-n3\nlabel = x\ncartan = AI\nparams = n:3\nfamily = A rank:2\nmult = all:1\nkappa = 1\n"),
                    CatalogError);
    CHECK_THROWS_AS(load_catalog_file("/nonexistent/catalog.txt"), std::exception);
}

TEST_CASE("instantiate checks parameters against the label") {
    const std::string base = kMinimal;
    const auto wrong_rank = load_catalog(replace(base, "A rank:2", "A rank:3"));
    CHECK_THROWS_AS(instantiate(wrong_rank.entries[0]), std::invalid_argument);
    const auto rows = kappa_table(wrong_rank);
    CHECK_FALSE(rows[0].match);
    CHECK_FALSE(rows[0].error.empty());
}

TEST_CASE("product kappa") {
    const auto& cat = default_catalog();
    const auto& sl2 = cat.find("AI-n2");
    const auto& sl3 = cat.find("AI-n3");
    CHECK(product_kappa({sl2, sl3}, {false, false}) == Rational(1, 2));
    CHECK(product_kappa({sl3}, {false}) == 1);
    CHECK(product_kappa({sl3, sl2}, {true, false}) == Rational(1, 2));
    CHECK_THROWS_AS(product_kappa({sl3}, {true}), std::domain_error);
    CHECK_THROWS_AS(product_kappa({sl3}, {true, false}), std::invalid_argument);
}
