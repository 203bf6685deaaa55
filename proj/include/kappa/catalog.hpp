#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/rational.hpp"
#include "kappa/rootsys.hpp"

namespace kappa {

/// Parse or validation failure in catalog text; line() is 1-based, 0 if unknown.
class CatalogError : public std::runtime_error {
public:
    CatalogError(int line, const std::string& message);
    int line() const noexcept { return line_; }

private:
    int line_;
};

struct SymmetricSpaceEntry {
    std::string id;
    std::string group_name;
    std::string cartan_label;
    std::map<std::string, int> params;
    Family family = Family::A;
    int rank = 0;
    MultAssignment multiplicities;
    Rational expected_kappa;

    friend bool operator==(const SymmetricSpaceEntry&, const SymmetricSpaceEntry&) = default;
};

struct CatalogFile {
    int format_version = 1;
    std::vector<SymmetricSpaceEntry> entries;

    const SymmetricSpaceEntry& find(std::string_view id) const;

    friend bool operator==(const CatalogFile&, const CatalogFile&) = default;
};

CatalogFile load_catalog(std::string_view text);
CatalogFile load_catalog_file(const std::filesystem::path& path);
std::string serialize_catalog(const CatalogFile& catalog);

/// The catalog compiled into the library.
std::string_view default_catalog_text();
const CatalogFile& default_catalog();

/// "default" or empty selects the built-in catalog; anything else is a path.
CatalogFile resolve_catalog(const std::string& source);

/// Throws std::invalid_argument when params are out of range for the label or
/// the entry's family/rank does not fit it.
RootSystem instantiate(const SymmetricSpaceEntry& entry);

struct KappaRow {
    std::string id;
    std::string group_name;
    int rank = 0;
    Rational computed;
    Rational expected;
    bool match = false;
    std::string error;  // non-empty when instantiation failed
};

std::vector<KappaRow> kappa_table(const CatalogFile& catalog);

/// Minimum kappa over the noncompact factors of a product.
Rational product_kappa(const std::vector<SymmetricSpaceEntry>& factors, const std::vector<bool>& compact);

}  // namespace kappa
