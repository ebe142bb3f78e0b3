#include "tmoments/cli.hpp"
#include "tmoments/error.hpp"
#include "tmoments/folded.hpp"
#include "tmoments/oracle.hpp"
#include "tmoments/student.hpp"
#include "tmoments/truncated.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace tmoments;

namespace {

Distribution make_dist(const std::string& dist, double mu, double nu, double sigma,
                       std::optional<double> lower)
{
    const StudentParams p{mu, nu, sigma};
    if (lower && dist != "truncated") {
        throw DomainError("lower is only valid with dist='truncated'");
    }
    if (dist == "student") {
        return p;
    }
    if (dist == "folded") {
        return FoldedT{p};
    }
    if (dist == "truncated") {
        return TruncatedT{p, lower.value_or(0.0)};
    }
    throw DomainError("dist must be 'student', 'folded' or 'truncated', got '" + dist + "'");
}

py::array_t<double> to_array(std::vector<double> v)
{
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::dict entry_dict(const VerificationEntry& e)
{
    py::dict d;
    d["mu"] = e.mu;
    d["nu"] = e.nu;
    d["quantity"] = std::string(to_string(e.quantity));
    d["closed_form"] = e.closed_form;
    d["quadrature"] = e.quadrature;
    d["mc_estimate"] = e.mc_estimate;
    d["mc_stderr"] = e.mc_stderr;
    d["rel_err"] = e.rel_err;
    d["mc_applicable"] = e.mc_applicable;
    d["verdict"] = std::string(to_string(e.verdict));
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Moments of folded and zero-truncated Student's t variates";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NonexistentMoment>(m, "NonexistentMoment", domain_error.ptr());
    py::register_exception<OracleError>(m, "OracleError", PyExc_RuntimeError);

    py::class_<Moments>(m, "Moments")
        .def_readonly("mean", &Moments::mean)
        .def_readonly("second_raw", &Moments::second_raw)
        .def_readonly("variance", &Moments::variance)
        .def("__repr__", [](const Moments& x) {
            return "Moments(mean=" + py::repr(py::float_(x.mean)).cast<std::string>()
                   + ", second_raw=" + py::repr(py::float_(x.second_raw)).cast<std::string>()
                   + ", variance=" + py::repr(py::float_(x.variance)).cast<std::string>() + ")";
        });

    m.def("pdf", [](double x, double mu, double nu, double sigma) {
        return pdf(x, {mu, nu, sigma});
    }, py::arg("x"), py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0);
    m.def("cdf", [](double x, double mu, double nu, double sigma) {
        return cdf(x, {mu, nu, sigma});
    }, py::arg("x"), py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0);
    m.def("quantile", [](double q, double mu, double nu, double sigma) {
        return quantile(q, {mu, nu, sigma});
    }, py::arg("q"), py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0);
    m.def("prob_positive", [](double mu, double nu, double sigma) {
        return prob_positive({mu, nu, sigma});
    }, py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0);

    m.def("mean_folded", [](double mu, double nu, double sigma) {
        return mean_folded(FoldedT{{mu, nu, sigma}});
    }, py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0);
    m.def("variance_folded", [](double mu, double nu, double sigma) {
        return variance_folded(FoldedT{{mu, nu, sigma}});
    }, py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0);
    m.def("moments_folded", [](double mu, double nu, double sigma) {
        return moments_folded(FoldedT{{mu, nu, sigma}});
    }, py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0);

    m.def("mean_truncated", [](double mu, double nu, double sigma, double lower) {
        return mean_truncated(TruncatedT{{mu, nu, sigma}, lower});
    }, py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0, py::arg("lower") = 0.0);
    m.def("second_moment_truncated", [](double mu, double nu, double sigma, double lower) {
        return second_moment_truncated(TruncatedT{{mu, nu, sigma}, lower});
    }, py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0, py::arg("lower") = 0.0);
    m.def("variance_truncated", [](double mu, double nu, double sigma, double lower) {
        return variance_truncated(TruncatedT{{mu, nu, sigma}, lower});
    }, py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0, py::arg("lower") = 0.0);
    m.def("moments_truncated", [](double mu, double nu, double sigma, double lower) {
        return moments_truncated(TruncatedT{{mu, nu, sigma}, lower});
    }, py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0, py::arg("lower") = 0.0);

    m.def("sample", [](const std::string& dist, double mu, double nu, double sigma,
                       std::optional<double> lower, std::size_t n, std::uint64_t seed) {
        const auto d = make_dist(dist, mu, nu, sigma, lower);
        std::vector<double> xs;
        {
            py::gil_scoped_release release;
            xs = draw(d, n, seed);
        }
        return to_array(std::move(xs));
    }, py::arg("dist"), py::arg("mu"), py::arg("nu"), py::arg("sigma") = 1.0,
       py::arg("lower") = py::none(), py::arg("n") = 1000, py::arg("seed") = 42);

    m.def("quad_moment", [](const std::string& dist, double mu, double nu, int power, double sigma,
                            std::optional<double> lower) {
        return quad_moment(make_dist(dist, mu, nu, sigma, lower), power);
    }, py::arg("dist"), py::arg("mu"), py::arg("nu"), py::arg("power"), py::arg("sigma") = 1.0,
       py::arg("lower") = py::none());

    m.def("sweep", [](const std::string& dist, double nu, double mu_min, double mu_max, int steps,
                      double sigma) {
        cli::SweepSpec spec;
        if (dist == "folded") {
            spec.dist = cli::DistKind::folded;
        } else if (dist == "truncated") {
            spec.dist = cli::DistKind::truncated;
        } else {
            throw DomainError("sweep: dist must be 'folded' or 'truncated'");
        }
        spec.nu = nu;
        spec.mu_min = mu_min;
        spec.mu_max = mu_max;
        spec.steps = steps;
        spec.sigma = sigma;
        std::vector<double> mu, mean, variance, gap;
        for (const auto& r : cli::sweep_rows(spec)) {
            mu.push_back(r.mu);
            mean.push_back(r.mean);
            variance.push_back(r.variance.value_or(std::numeric_limits<double>::quiet_NaN()));
            gap.push_back(r.diag_gap);
        }
        py::dict out;
        out["mu"] = to_array(std::move(mu));
        out["mean"] = to_array(std::move(mean));
        out["variance"] = to_array(std::move(variance));
        out["diag_gap"] = to_array(std::move(gap));
        return out;
    }, py::arg("dist"), py::arg("nu") = 2.0, py::arg("mu_min") = -5.0, py::arg("mu_max") = 10.0,
       py::arg("steps") = 301, py::arg("sigma") = 1.0);

    m.def("verify", [](std::vector<double> mu_grid, std::vector<double> nu_grid,
                       std::optional<std::vector<std::string>> quantities, double tol,
                       std::size_t mc_samples, std::uint64_t seed) {
        std::vector<Quantity> qs(std::begin(kAllQuantities), std::end(kAllQuantities));
        if (quantities) {
            qs.clear();
            for (const auto& name : *quantities) {
                const auto q = parse_quantity(name);
                if (!q) {
                    throw DomainError("unknown quantity '" + name + "'");
                }
                qs.push_back(*q);
            }
        }
        VerificationReport report;
        {
            py::gil_scoped_release release;
            report = verify_grid(mu_grid, nu_grid, qs, {}, McConfig{mc_samples, seed}, tol);
        }
        py::list entries;
        for (const auto& e : report.entries) {
            entries.append(entry_dict(e));
        }
        py::dict out;
        out["entries"] = entries;
        out["overall_pass"] = report.overall_pass;
        out["passed"] = report.passed();
        out["failed"] = report.failed();
        out["skipped"] = report.skipped();
        return out;
    }, py::arg("mu_grid"), py::arg("nu_grid"), py::arg("quantities") = py::none(),
       py::arg("tol") = 1e-8, py::arg("mc_samples") = 1'000'000, py::arg("seed") = 42);
}
