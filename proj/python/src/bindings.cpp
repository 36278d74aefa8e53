#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <cstring>

#include "kobs/blowup.hpp"
#include "kobs/config.hpp"
#include "kobs/errors.hpp"
#include "kobs/estimators.hpp"
#include "kobs/free_boundary.hpp"
#include "kobs/kinetic_geometry.hpp"
#include "kobs/parallel.hpp"
#include "kobs/presets.hpp"
#include "kobs/reference_solutions.hpp"
#include "kobs/report.hpp"
#include "kobs/stopping_mc.hpp"
#include "kobs/weiss_energy.hpp"

namespace py = pybind11;
using namespace kobs;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

KineticPoint point(const std::tuple<double, double, double>& z) {
    return KineticPoint::make1(std::get<0>(z), std::get<1>(z), std::get<2>(z));
}

std::tuple<double, double, double> tuple_of(const KineticPoint& z) {
    if (z.dim() != 1) throw ConfigError("python bindings are n = 1");
    return {z.t, z.x[0], z.v[0]};
}

Array to_numpy(const Field& u) {
    const Grid& g = u.grid();
    Array a({g.nt(), g.nx(), g.nv()});
    std::memcpy(a.mutable_data(), u.values().data(), u.size() * sizeof(double));
    return a;
}

Field from_numpy(const Grid& g, const Array& a) {
    if (a.ndim() != 3 || static_cast<std::size_t>(a.shape(0)) != g.nt() ||
        static_cast<std::size_t>(a.shape(1)) != g.nx() || static_cast<std::size_t>(a.shape(2)) != g.nv())
        throw ConfigError("array shape does not match the grid node counts (Nt+1, Nx+1, Nv+1)");
    std::vector<double> vals(a.data(), a.data() + a.size());
    return Field(g, std::move(vals));
}

}  // namespace

PYBIND11_MODULE(_kobs, m) {
    m.doc() = "Obstacle problems for the Kolmogorov operator (n = 1 grid pipeline).";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_IOError);
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    m.def("version", &version_string);
    m.def("set_thread_cap", &set_thread_cap, py::arg("n"));

    // geometry
    m.def("compose", [](const std::tuple<double, double, double>& a, const std::tuple<double, double, double>& b) {
        return tuple_of(compose(point(a), point(b)));
    });
    m.def("inverse", [](const std::tuple<double, double, double>& a) { return tuple_of(inverse(point(a))); });
    m.def("dilate", [](const std::tuple<double, double, double>& a, double r) { return tuple_of(dilate(point(a), r)); });
    m.def("kinetic_norm", [](const std::tuple<double, double, double>& a) { return kinetic_norm(point(a)); });
    m.def("kinetic_distance", [](const std::tuple<double, double, double>& a, const std::tuple<double, double, double>& b) {
        return kinetic_distance(point(a), point(b));
    });
    m.def("in_cylinder", [](const std::tuple<double, double, double>& z, const std::tuple<double, double, double>& z0,
                            double r) { return in_cylinder(point(z), point(z0), r); });

    py::class_<Grid>(m, "Grid")
        .def(py::init([](std::size_t Nt, std::size_t Nx, std::size_t Nv, double t_lo, double t_hi, double x_ext,
                         double v_ext) { return Grid::make(Nt, Nx, Nv, t_lo, t_hi, x_ext, v_ext); }),
             py::arg("Nt"), py::arg("Nx"), py::arg("Nv"), py::arg("t_lo") = -1.0, py::arg("t_hi") = 0.0,
             py::arg("x_extent") = 1.0, py::arg("v_extent") = 1.0)
        .def_readonly("Nt", &Grid::Nt)
        .def_readonly("Nx", &Grid::Nx)
        .def_readonly("Nv", &Grid::Nv)
        .def_readonly("t_lo", &Grid::t_lo)
        .def_readonly("t_hi", &Grid::t_hi)
        .def_readonly("x_extent", &Grid::x_ext)
        .def_readonly("v_extent", &Grid::v_ext)
        .def_property_readonly("shape", [](const Grid& g) { return py::make_tuple(g.nt(), g.nx(), g.nv()); })
        .def_property_readonly("t", [](const Grid& g) {
            std::vector<double> o(g.nt());
            for (std::size_t i = 0; i < g.nt(); ++i) o[i] = g.t(i);
            return o;
        })
        .def_property_readonly("x", [](const Grid& g) {
            std::vector<double> o(g.nx());
            for (std::size_t i = 0; i < g.nx(); ++i) o[i] = g.x(i);
            return o;
        })
        .def_property_readonly("v", [](const Grid& g) {
            std::vector<double> o(g.nv());
            for (std::size_t i = 0; i < g.nv(); ++i) o[i] = g.v(i);
            return o;
        })
        .def("__repr__", [](const Grid& g) {
            return "Grid(Nt=" + std::to_string(g.Nt) + ", Nx=" + std::to_string(g.Nx) + ", Nv=" + std::to_string(g.Nv) +
                   ")";
        });

    py::class_<Field>(m, "Field")
        .def(py::init(&from_numpy), py::arg("grid"), py::arg("values"))
        .def_property_readonly("grid", &Field::grid)
        .def("to_numpy", &to_numpy)
        .def("sup_norm", &Field::sup_norm)
        .def("interpolate", [](const Field& u, double t, double x, double v) { return interpolate(u, t, x, v); });

    m.def("load_field", &load_field, py::arg("path"));
    m.def("save_field", &save_field, py::arg("path"), py::arg("field"));
    m.def("apply_L", &apply_L);
    m.def("apply_Y", &apply_Y);

    // reference solutions
    m.def("reference_names", &reference_names);
    m.def(
        "sample_reference",
        [](const std::string& name, const Grid& g) { return sample(g, reference_by_name(name).u); }, py::arg("name"),
        py::arg("grid"));
    m.def(
        "operator_error", [](const std::string& name, const Grid& g) { return operator_error(reference_by_name(name), g); },
        py::arg("name"), py::arg("grid"));

    // solver
    m.def("scenario_names", &scenario_names);
    m.def(
        "solve",
        [](const std::string& config_json) {
            const RunConfig c = parse_config(config_json);
            py::gil_scoped_release nogil;
            return run_solver(c).u;
        },
        py::arg("config_json"), "Solve from a JSON config document; returns the field.");
    m.def(
        "solve_scenario",
        [](const std::string& name, std::size_t N) {
            const RunConfig c = scenario_config(name, N);
            py::gil_scoped_release nogil;
            return run_solver(c).u;
        },
        py::arg("name"), py::arg("N") = 64);
    m.def(
        "config_echo", [](const std::string& text) { return to_json(parse_config(text)).dump(); }, py::arg("config_json"));

    // free boundary
    m.def(
        "phase_counts",
        [](const Field& u, double tol_zero) {
            const Classification c = classify(u, tol_zero);
            return py::dict(py::arg("contact") = c.count(Phase::contact), py::arg("positive") = c.count(Phase::positive),
                            py::arg("ambiguous") = c.count(Phase::ambiguous), py::arg("gamma") = c.gamma_count());
        },
        py::arg("field"), py::arg("tol_zero") = 0.0);
    m.def(
        "free_boundary_point",
        [](const Field& u) -> std::tuple<double, double, double> {
            const Classification cls = classify(u);
            for (int dir : {1, -1})
                if (auto z = graph_point(extract_graph(u, cls, dir), u.grid().t_hi, 0.0)) return tuple_of(*z);
            throw DomainError("no free boundary column at t = t_hi, x = 0");
        },
        py::arg("field"));
    m.def(
        "thickness",
        [](const Field& u, const std::tuple<double, double, double>& z0, double r, bool star) {
            return (star ? thickness_delta_star(u, point(z0), r) : thickness_delta(u, point(z0), r)).delta;
        },
        py::arg("field"), py::arg("z0"), py::arg("r"), py::arg("star") = false);
    m.def(
        "growth_quotients",
        [](const Field& u, const std::tuple<double, double, double>& z0, const std::vector<double>& radii) {
            std::vector<double> q;
            for (const auto& row : growth_report(u, point(z0), radii)) q.push_back(row.quotient);
            return q;
        },
        py::arg("field"), py::arg("z0"), py::arg("radii"));

    // energy and blow-up
    m.def("omega_hat", &omega_hat);
    m.def(
        "weiss_reference",
        [](const std::string& name, const std::tuple<double, double, double>& z0, double r) {
            return weiss_I(source_from_reference(reference_by_name(name)), point(z0), r);
        },
        py::arg("name"), py::arg("z0"), py::arg("r"));
    m.def(
        "weiss_field",
        [](const Field& u, const std::tuple<double, double, double>& z0, double r) {
            return weiss_I(source_from_field(u), point(z0), r);
        },
        py::arg("field"), py::arg("z0"), py::arg("r"));
    m.def(
        "classify_point",
        [](const Field& u, const std::tuple<double, double, double>& z0, const std::vector<double>& radii,
           const std::vector<double>& energy_radii) {
            BlowupOptions opt;
            opt.energy_radii = energy_radii;
            const PointClassification c = classify_point(u, point(z0), radii, opt);
            return py::dict(py::arg("class") = to_string(c.cls), py::arg("reason") = c.reason,
                            py::arg("e") = c.fits.empty() ? 0.0 : c.fits.back().hs.e,
                            py::arg("energy_ratio") = c.energy.ratio);
        },
        py::arg("field"), py::arg("z0"), py::arg("radii"), py::arg("energy_radii") = std::vector<double>{});
    m.def(
        "transport_sup_scan",
        [](const Field& u, const std::tuple<double, double, double>& z0, const std::vector<double>& radii) {
            return transport_sup_scan(u, point(z0), radii).values;
        },
        py::arg("field"), py::arg("z0"), py::arg("radii"));

    // Monte Carlo; payoffs are chosen by name so worker threads never call into Python.
    m.def(
        "lsmc_price",
        [](const std::string& payoff, const std::tuple<double, double, double>& z0, double T, std::size_t paths,
           std::size_t steps, std::uint64_t seed, int degree) {
            Payoff psi;
            if (payoff == "constant") psi = [](double, double, double) { return 1.0; };
            else if (payoff == "bump") psi = [](double, double x, double v) { return std::exp(-x * x - v * v); };
            else if (payoff == "put") psi = [](double, double, double v) { return std::max(-v, 0.0); };
            else throw ConfigError("unknown payoff '" + payoff + "' (constant, bump, put)");
            LsmcOptions o;
            o.paths = paths;
            o.steps = steps;
            o.seed = seed;
            o.degree = degree;
            py::gil_scoped_release nogil;
            const LsmcResult r = lsmc_price(psi, point(z0), T, o);
            return std::make_pair(r.value, r.se);
        },
        py::arg("payoff"), py::arg("z0"), py::arg("T"), py::arg("paths") = 20000, py::arg("steps") = 50,
        py::arg("seed") = 1, py::arg("degree") = 3);
}
