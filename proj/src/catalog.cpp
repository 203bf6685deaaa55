#include "kappa/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "default_catalog.inc"

namespace kappa {

CatalogError::CatalogError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    const auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && issp(s.front())) s.remove_prefix(1);
    while (!s.empty() && issp(s.back())) s.remove_suffix(1);
    return s;
}

int parse_positive_int(std::string_view text, int line, const char* what) {
    const Rational r = [&] {
        try {
            return Rational::parse(text);
        } catch (const std::exception&) {
            throw CatalogError(line, std::string("malformed ") + what + " '" + std::string(text) + "'");
        }
    }();
    if (!r.is_integer() || r.num() <= 0 || r.num() > 1'000'000) {
        throw CatalogError(line, std::string("invalid ") + what + " '" + std::string(text) + "'");
    }
    return static_cast<int>(r.num());
}

std::map<std::string, int> parse_params(std::string_view text, int line) {
    std::map<std::string, int> out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        const auto colon = token.find(':');
        if (colon == std::string::npos || colon == 0) throw CatalogError(line, "malformed parameter '" + token + "'");
        const std::string key = token.substr(0, colon);
        if (!out.emplace(key, parse_positive_int(token.substr(colon + 1), line, "parameter")).second) {
            throw CatalogError(line, "parameter '" + key + "' repeated");
        }
    }
    return out;
}

std::string format_params(const std::map<std::string, int>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ' ';
        out += k + ":" + std::to_string(v);
    }
    return out;
}

struct PendingEntry {
    int line = 0;
    std::map<std::string, std::pair<std::string, int>> fields;  // key -> (value, line)
};

const std::vector<std::string> kKeys{"id", "label", "cartan", "params", "family", "mult", "kappa"};

const std::set<std::string> kCartanLabels{
    "complex-A", "complex-B", "complex-C", "complex-D", "complex-G2", "complex-F4", "complex-E6", "complex-E7",
    "complex-E8", "AI",       "AII",       "AIII",      "BDI",        "CI",         "CII",        "DIII-even",
    "DIII-odd",  "EI",        "EII",       "EIII",      "EIV",        "EV",         "EVI",        "EVII",
    "EVIII",     "EIX",       "FI",        "FII",       "G"};

SymmetricSpaceEntry finish_entry(const PendingEntry& pending) {
    for (const auto& key : kKeys) {
        if (!pending.fields.count(key)) throw CatalogError(pending.line, "entry is missing key '" + key + "'");
    }
    const auto value = [&](const std::string& key) { return pending.fields.at(key).first; };
    const auto line_of = [&](const std::string& key) { return pending.fields.at(key).second; };

    SymmetricSpaceEntry e;
    e.id = value("id");
    if (e.id.empty()) throw CatalogError(line_of("id"), "empty id");
    e.group_name = value("label");
    e.cartan_label = value("cartan");
    if (!kCartanLabels.count(e.cartan_label)) {
        throw CatalogError(line_of("cartan"), "unknown Cartan label '" + e.cartan_label + "'");
    }
    e.params = parse_params(value("params"), line_of("params"));

    {
        std::istringstream in(value("family"));
        std::string fam, rank_tok, extra;
        in >> fam >> rank_tok;
        if (fam.empty() || rank_tok.rfind("rank:", 0) != 0 || (in >> extra)) {
            throw CatalogError(line_of("family"), "expected 'family = <tag> rank:<r>'");
        }
        try {
            e.family = parse_family(fam);
        } catch (const std::invalid_argument& err) {
            throw CatalogError(line_of("family"), err.what());
        }
        e.rank = parse_positive_int(rank_tok.substr(5), line_of("family"), "rank");
    }
    try {
        e.multiplicities = parse_mult(value("mult"));
    } catch (const std::invalid_argument& err) {
        throw CatalogError(line_of("mult"), err.what());
    }
    if (e.multiplicities.empty()) throw CatalogError(line_of("mult"), "empty multiplicity assignment");
    try {
        e.expected_kappa = Rational::parse(value("kappa"));
    } catch (const std::exception&) {
        throw CatalogError(line_of("kappa"), "malformed kappa '" + value("kappa") + "'");
    }
    const Rational twice = e.expected_kappa * Rational(2);
    if (e.expected_kappa.sign() <= 0 || !twice.is_integer()) {
        throw CatalogError(line_of("kappa"), "kappa must be a positive half-integer, got " + value("kappa"));
    }
    return e;
}

int param(const SymmetricSpaceEntry& e, const std::string& key) {
    auto it = e.params.find(key);
    if (it == e.params.end()) {
        throw std::invalid_argument(e.id + ": parameter '" + key + "' required by " + e.cartan_label);
    }
    return it->second;
}

void expect_params(const SymmetricSpaceEntry& e, std::initializer_list<const char*> keys) {
    if (e.params.size() != keys.size()) {
        throw std::invalid_argument(e.id + ": wrong parameter set for " + e.cartan_label);
    }
    for (const char* k : keys) param(e, k);
}

// Family and rank of the restricted root system for a Cartan label.
std::pair<Family, int> structure_of(const SymmetricSpaceEntry& e) {
    const std::string& c = e.cartan_label;
    const auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw std::invalid_argument(e.id + ": parameters out of range for " + c + " (" + what + ")");
    };
    if (c.rfind("complex-", 0) == 0) {
        const std::string tag = c.substr(8);
        const Family f = parse_family(tag);
        if (fixed_rank(f)) {
            expect_params(e, {});
            return {f, fixed_rank(f)};
        }
        expect_params(e, {"n"});
        const int n = param(e, "n");
        if (f == Family::A) {
            need(n >= 2, "n >= 2");
            return {f, n - 1};
        }
        need(f != Family::D || n >= 2, "n >= 2");
        return {f, n};
    }
    if (c == "AI" || c == "AII") {
        expect_params(e, {"n"});
        need(param(e, "n") >= 2, "n >= 2");
        return {Family::A, param(e, "n") - 1};
    }
    if (c == "AIII" || c == "BDI" || c == "CII") {
        expect_params(e, {"p", "q"});
        const int p = param(e, "p"), q = param(e, "q");
        need(p <= q, "p <= q");
        need(c == "CII" || p + q >= 3, "p + q >= 3");
        if (c == "BDI") return {p == q ? Family::D : Family::B, p};
        return {p == q ? Family::C : Family::BC, p};
    }
    if (c == "CI" || c == "DIII-even" || c == "DIII-odd") {
        expect_params(e, {"n"});
        return {c == "DIII-odd" ? Family::BC : Family::C, param(e, "n")};
    }
    static const std::map<std::string, std::pair<Family, int>> exceptional{
        {"EI", {Family::E6, 6}}, {"EII", {Family::F4, 4}},   {"EIII", {Family::BC, 2}}, {"EIV", {Family::A, 2}},
        {"EV", {Family::E7, 7}}, {"EVI", {Family::F4, 4}},   {"EVII", {Family::C, 3}},  {"EVIII", {Family::E8, 8}},
        {"EIX", {Family::F4, 4}}, {"FI", {Family::F4, 4}},   {"FII", {Family::BC, 1}},  {"G", {Family::G2, 2}}};
    auto it = exceptional.find(c);
    if (it == exceptional.end()) throw std::invalid_argument(e.id + ": unknown Cartan label '" + c + "'");
    expect_params(e, {});
    return it->second;
}

}  // namespace

const SymmetricSpaceEntry& CatalogFile::find(std::string_view id) const {
    for (const auto& e : entries)
        if (e.id == id) return e;
    throw std::out_of_range("no catalog entry '" + std::string(id) + "'");
}

CatalogFile load_catalog(std::string_view text) {
    CatalogFile out;
    std::set<std::string> ids;
    std::optional<PendingEntry> pending;
    bool seen_version = false;

    const auto flush = [&] {
        if (!pending) return;
        SymmetricSpaceEntry e = finish_entry(*pending);
        if (!ids.insert(e.id).second) throw CatalogError(pending->line, "duplicate id '" + e.id + "'");
        out.entries.push_back(std::move(e));
        pending.reset();
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line == "[entry]") {
            flush();
            pending = PendingEntry{line_no, {}};
            continue;
        }
        if (line.front() == '[') throw CatalogError(line_no, "unknown section " + std::string(line));
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw CatalogError(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (!pending) {
            if (key != "format_version" || seen_version || !out.entries.empty()) {
                throw CatalogError(line_no, "unexpected key '" + key + "' outside an entry");
            }
            out.format_version = parse_positive_int(value, line_no, "format_version");
            if (out.format_version != 1) {
                throw CatalogError(line_no, "unsupported format_version " + std::to_string(out.format_version));
            }
            seen_version = true;
            continue;
        }
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
            throw CatalogError(line_no, "unknown key '" + key + "'");
        }
        if (!pending->fields.emplace(key, std::make_pair(value, line_no)).second) {
            throw CatalogError(line_no, "key '" + key + "' repeated");
        }
    }
    flush();
    return out;
}

CatalogFile load_catalog_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatalogError(0, "cannot open catalog '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_catalog(buf.str());
}

std::string serialize_catalog(const CatalogFile& catalog) {
    std::ostringstream out;
    out << "format_version = " << catalog.format_version << "\n";
    for (const auto& e : catalog.entries) {
        out << "\n[entry]\n"
            << "id = " << e.id << "\n"
            << "label = " << e.group_name << "\n"
            << "cartan = " << e.cartan_label << "\n"
            << "params = " << format_params(e.params) << "\n"
            << "family = " << family_name(e.family) << " rank:" << e.rank << "\n"
            << "mult = " << format_mult(e.multiplicities) << "\n"
            << "kappa = " << e.expected_kappa.to_string() << "\n";
    }
    return out.str();
}

std::string_view default_catalog_text() { return kDefaultCatalogText; }

const CatalogFile& default_catalog() {
    static const CatalogFile catalog = load_catalog(default_catalog_text());
    return catalog;
}

CatalogFile resolve_catalog(const std::string& source) {
    if (source.empty() || source == "default") return default_catalog();
    return load_catalog_file(source);
}

RootSystem instantiate(const SymmetricSpaceEntry& entry) {
    const auto [family, rank] = structure_of(entry);
    if (family != entry.family || rank != entry.rank) {
        throw std::invalid_argument(entry.id + ": " + entry.cartan_label + " with these parameters has family " +
                                    std::string(family_name(family)) + " rank " + std::to_string(rank) +
                                    ", entry says " + std::string(family_name(entry.family)) + " rank " +
                                    std::to_string(entry.rank));
    }
    if (entry.cartan_label.rfind("complex-", 0) == 0) {
        for (const auto& [cls, m] : entry.multiplicities) {
            if (m != 2) throw std::invalid_argument(entry.id + ": complex groups have all multiplicities 2");
        }
    }
    return build_root_system(entry.family, entry.rank, entry.multiplicities);
}

std::vector<KappaRow> kappa_table(const CatalogFile& catalog) {
    std::vector<KappaRow> rows;
    rows.reserve(catalog.entries.size());
    for (const auto& e : catalog.entries) {
        KappaRow row;
        row.id = e.id;
        row.group_name = e.group_name;
        row.rank = e.rank;
        row.expected = e.expected_kappa;
        try {
            row.computed = kappa(instantiate(e));
            row.match = row.computed == row.expected;
        } catch (const std::exception& err) {
            row.error = err.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational product_kappa(const std::vector<SymmetricSpaceEntry>& factors, const std::vector<bool>& compact) {
    if (factors.size() != compact.size()) throw std::invalid_argument("product_kappa: factor/flag count mismatch");
    std::optional<Rational> best;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (compact[i]) continue;
        const Rational k = kappa(instantiate(factors[i]));
        if (!best || k < *best) best = k;
    }
    if (!best) throw std::domain_error("product_kappa: every factor is compact, kappa is undefined");
    return *best;
}

}  // namespace kappa
