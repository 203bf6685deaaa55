#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kappa/acceptance.hpp"
#include "kappa/asymptotics.hpp"
#include "kappa/catalog.hpp"
#include "kappa/liegroup.hpp"
#include "kappa/rootsys.hpp"
#include "kappa/spherical.hpp"

namespace py = pybind11;

namespace {

py::object fraction(const kappa::Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.num(), r.den());
}

kappa::RootSystem system(const std::string& family, int rank, const std::string& mult) {
    const auto f = kappa::parse_family(family);
    if (rank == 0 && kappa::fixed_rank(f) > 0) rank = kappa::fixed_rank(f);
    return kappa::build_root_system(f, rank, kappa::parse_mult(mult));
}

kappa::Covector covector(const std::vector<py::object>& coords) {
    kappa::RationalVector out;
    for (const auto& c : coords) out.push_back(kappa::Rational::parse(py::str(c).cast<std::string>()));
    return kappa::Covector(std::move(out));
}

py::list weights_list(const kappa::RootSystem& sys) {
    py::list out;
    for (const auto& mu : kappa::fundamental_weights(sys)) {
        py::list coords;
        for (const auto& c : mu.coords) coords.append(fraction(c));
        out.append(coords);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(kappa, m) {
    m.doc() = "Regularity exponents of symmetric spaces and spherical-function numerics";

    py::register_exception<kappa::CatalogError>(m, "CatalogError", PyExc_ValueError);
    py::register_exception<kappa::QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);

    m.def("kappa", [](const std::string& family, int rank, const std::string& mult) {
        return fraction(kappa::kappa(system(family, rank, mult)));
    }, py::arg("family"), py::arg("rank") = 0, py::arg("mult"));

    m.def("n_of", [](const std::string& family, int rank, const std::string& mult, const std::vector<py::object>& lam) {
        return kappa::n_of(system(family, rank, mult), covector(lam));
    }, py::arg("family"), py::arg("rank"), py::arg("mult"), py::arg("coords"),
       "Multiplicity-weighted count of positive roots not orthogonal to lambda (simple-root coordinates).");

    m.def("positive_root_count", [](const std::string& family, int rank, const std::string& mult) {
        return system(family, rank, mult).positive_roots().size();
    }, py::arg("family"), py::arg("rank") = 0, py::arg("mult"));

    m.def("weyl_group_order", [](const std::string& family, int rank, const std::string& mult) {
        return kappa::weyl_group(system(family, rank, mult)).size();
    }, py::arg("family"), py::arg("rank") = 0, py::arg("mult"));

    m.def("fundamental_weights", [](const std::string& family, int rank, const std::string& mult) {
        return weights_list(system(family, rank, mult));
    }, py::arg("family"), py::arg("rank") = 0, py::arg("mult"));

    m.def("in_bounded_region", [](const std::string& family, int rank, const std::string& mult,
                                  const std::vector<py::object>& eta) {
        return kappa::in_bounded_region(system(family, rank, mult), covector(eta));
    }, py::arg("family"), py::arg("rank"), py::arg("mult"), py::arg("eta"));

    m.def("kappa_table", [](const std::string& catalog) {
        py::list rows;
        for (const auto& r : kappa::kappa_table(kappa::resolve_catalog(catalog))) {
            py::dict d;
            d["id"] = r.id;
            d["group"] = r.group_name;
            d["rank"] = r.rank;
            d["computed"] = r.error.empty() ? fraction(r.computed) : py::none();
            d["expected"] = fraction(r.expected);
            d["match"] = r.match;
            d["error"] = r.error;
            rows.append(d);
        }
        return rows;
    }, py::arg("catalog") = "default");

    m.def("iwasawa", [](const Eigen::MatrixXd& g) {
        const auto f = kappa::iwasawa(kappa::SpecialLinearElement(g));
        return py::make_tuple(f.k, f.h, f.nu);
    }, py::arg("g"), "(k, h, nu) with g / det(g)^(1/n) = k exp(diag h) nu.");

    m.def("iwasawa_projection", [](const Eigen::MatrixXd& g) {
        return Eigen::VectorXd(kappa::iwasawa_projection(kappa::SpecialLinearElement(g)));
    }, py::arg("g"));

    m.def("kak", [](const Eigen::MatrixXd& g) {
        const auto f = kappa::kak(kappa::SpecialLinearElement(g));
        return py::make_tuple(f.k1, f.a_log, f.k2);
    }, py::arg("g"), "(k1, a_log, k2) with g / det(g)^(1/n) = k1 exp(diag a_log) k2^T.");

    m.def("spherical_sl2", [](double xi, double eta, double y) {
        const auto v = kappa::spherical_sl2({{xi}, {eta}}, y);
        return py::make_tuple(v.value, v.estimated_error);
    }, py::arg("xi"), py::arg("eta") = 0.0, py::arg("y"));

    m.def("spherical_sl3", [](std::vector<double> xi, std::vector<double> eta, std::array<double, 2> a_log,
                              long samples, std::uint64_t seed) {
        const auto v = kappa::spherical_sl3({std::move(xi), std::move(eta)}, a_log, samples, seed);
        return py::make_tuple(v.value, v.estimated_error);
    }, py::arg("xi"), py::arg("eta") = std::vector<double>{}, py::arg("a_log"), py::arg("samples") = 20000,
       py::arg("seed") = 42);

    m.def("deriv_spherical_sl2", [](double xi, double eta, double t_scale, double y, int order) {
        return kappa::deriv_spherical_sl2({{xi}, {eta}}, t_scale, y, order);
    }, py::arg("xi"), py::arg("eta"), py::arg("t_scale"), py::arg("y"), py::arg("order"));

    m.def("legendre", &kappa::legendre, py::arg("n"), py::arg("x"));
    m.def("spherical_compact_su2", &kappa::spherical_compact_su2, py::arg("n"), py::arg("theta"));

    m.def("leading_term_sl2", [](double xi, double y, double t) {
        return kappa::leading_term_sl2(xi, y, t, kappa::sl2_spherical_amplitude(y)).total;
    }, py::arg("xi"), py::arg("y"), py::arg("t"));
    m.def("leading_term_su2", [](int n, double theta) { return kappa::leading_term_su2(n, theta).total; },
          py::arg("n"), py::arg("theta"));

    m.def("decay_fit", [](const std::vector<std::pair<double, double>>& samples) {
        const auto f = kappa::decay_fit(samples);
        py::dict d;
        d["slope"] = f.slope;
        d["intercept"] = f.intercept;
        d["r_squared"] = f.r_squared;
        return d;
    }, py::arg("samples"));

    m.def("exp_sum_separation", &kappa::exp_sum_separation, py::arg("f_x"), py::arg("f_y"), py::arg("u_x"),
          py::arg("u_y"), py::arg("m"), py::arg("n_terms"));

    m.def("run_criterion", [](int id, std::uint64_t seed) {
        kappa::AcceptanceOptions opts;
        opts.seed = seed;
        kappa::CriterionResult r;
        {
            py::gil_scoped_release release;
            r = kappa::run_criterion(id, opts);
        }
        py::dict d;
        d["id"] = r.id;
        d["title"] = r.title;
        d["passed"] = r.pass;
        d["detail"] = r.detail;
        d["seconds"] = r.seconds;
        return d;
    }, py::arg("id"), py::arg("seed") = 42);
}
