#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vilenkin/characters.hpp"
#include "vilenkin/hardy.hpp"
#include "vilenkin/io.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/means.hpp"
#include "vilenkin/verify.hpp"

namespace py = pybind11;
using namespace vilenkin;

namespace {

py::array_t<Complex> to_array(std::span<const Complex> v) {
    py::array_t<Complex> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

GridFunction grid_from_array(const GroupSpec& g, int resolution, py::array_t<Complex, py::array::c_style | py::array::forcecast> a) {
    if (a.ndim() != 1) fail(ErrorKind::shape, "values must be one-dimensional");
    return GridFunction(g, resolution, std::vector<Complex>(a.data(), a.data() + a.size()));
}

WeightSequence weights_from(const std::string& name, double a, int b) {
    if (name == "constant") return WeightSequence::constant();
    if (name == "harmonic") return WeightSequence::harmonic();
    if (name == "power") return WeightSequence::power(a);
    if (name == "cesaro") return WeightSequence::cesaro(a);
    if (name == "iterated_log") return WeightSequence::iterated_log(a, b);
    fail(ErrorKind::invalid_params, "unknown weights: " + name);
}

MeanSpec mean_spec(const std::string& kind, double alpha, const std::optional<WeightSequence>& q) {
    MeanSpec s{mean_kind_from_string(kind), alpha, q};
    if (s.kind == MeanKind::v && !s.weights) s.weights = WeightSequence::power(alpha);
    return s;
}

py::dict record_dict(const VerificationRecord& r) {
    py::dict params;
    for (const auto& [k, v] : r.params) params[py::str(k)] = v;
    py::dict d;
    d["suite"] = r.suite;
    d["claim"] = r.claim;
    d["params"] = params;
    d["value"] = r.value;
    d["bound"] = r.bound;
    d["margin"] = r.margin;
    d["pass"] = r.pass;
    d["tolerance"] = r.tolerance;
    d["kind"] = std::string(to_string(r.kind));
    d["note"] = r.note;
    return d;
}

py::list record_list(const std::vector<VerificationRecord>& rs) {
    py::list out;
    for (const auto& r : rs) out.append(record_dict(r));
    return out;
}

} // namespace

PYBIND11_MODULE(_vilenkin, m) {
    m.doc() = "Vilenkin group harmonic analysis";

    py::register_exception<Error>(m, "VilenkinError", PyExc_ValueError);

    py::class_<GroupSpec>(m, "Group")
        .def(py::init([](std::vector<int> radices, int levels) { return make_group(radices, levels); }),
             py::arg("radices"), py::arg("levels"))
        .def_property_readonly("levels", &GroupSpec::levels)
        .def_property_readonly("radices", [](const GroupSpec& g) { return std::vector<int>(g.radices().begin(), g.radices().end()); })
        .def_property_readonly("blocks", [](const GroupSpec& g) { return std::vector<Nat>(g.blocks().begin(), g.blocks().end()); })
        .def_property_readonly("lam", &GroupSpec::lambda)
        .def("block", &GroupSpec::block)
        .def("digits", [](const GroupSpec& g, Nat n) { return digits_of(n, g).digits; })
        .def("hat_add", [](const GroupSpec& g, Nat n, Nat k) { return nat_hat_add(n, k, g); })
        .def("hat_sub", [](const GroupSpec& g, Nat n, Nat k) { return nat_hat_sub(n, k, g); })
        .def("__eq__", [](const GroupSpec& a, const GroupSpec& b) { return a == b; })
        .def("__repr__", [](const GroupSpec& g) {
            std::string s = "Group([";
            for (int k = 0; k < g.levels(); ++k) s += (k ? ", " : "") + std::to_string(g.radix(k));
            return s + "])";
        });

    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init(&grid_from_array), py::arg("group"), py::arg("resolution"), py::arg("values"))
        .def_property_readonly("group", &GridFunction::group)
        .def_property_readonly("resolution", &GridFunction::resolution)
        .def_property_readonly("values", [](const GridFunction& f) { return to_array(f.values()); })
        .def("integral", &GridFunction::integral)
        .def("lp_norm", [](const GridFunction& f, double p) { return lp_norm(f, p); }, py::arg("p"))
        .def("weak_lp", [](const GridFunction& f, double p) { return weak_lp(f, p); }, py::arg("p"))
        .def("__len__", &GridFunction::size);

    py::class_<WeightSequence>(m, "Weights")
        .def(py::init(&weights_from), py::arg("name"), py::arg("a") = 1.0, py::arg("b") = 1)
        .def("q", &WeightSequence::q)
        .def("Q", &WeightSequence::Q)
        .def_property_readonly("name", &WeightSequence::name);

    m.def("random_function", &random_function, py::arg("group"), py::arg("resolution"), py::arg("seed"));
    m.def("character", [](const GroupSpec& g, int N, Nat n) {
        return GridFunction::from_index(g, N, [&](Nat x) { return character_at(g, N, n, x); });
    }, py::arg("group"), py::arg("resolution"), py::arg("n"));

    m.def("transform", [](const GridFunction& f) { return to_array(transform_forward(f).coeffs); }, py::arg("f"));
    m.def("inverse_transform", [](const GroupSpec& g, int N, py::array_t<Complex, py::array::c_style | py::array::forcecast> c) {
        return transform_inverse(Spectrum{g, N, std::vector<Complex>(c.data(), c.data() + c.size())});
    }, py::arg("group"), py::arg("resolution"), py::arg("coeffs"));
    m.def("fourier_coeff", &fourier_coeff, py::arg("f"), py::arg("n"));
    m.def("convolve", &convolve, py::arg("f"), py::arg("g"));

    m.def("kernel", [](const std::string& kind, const GroupSpec& g, Nat n, int N, const std::optional<WeightSequence>& q) {
        return make_kernel(kernel_kind_from_string(kind), g, n, N, q ? &*q : nullptr);
    }, py::arg("kind"), py::arg("group"), py::arg("n"), py::arg("resolution"), py::arg("weights") = py::none());
    m.def("lebesgue_constant", &lebesgue_constant, py::arg("group"), py::arg("n"));
    m.def("lebesgue_bounds", [](const GroupSpec& g, Nat n, bool literal) {
        const auto b = lebesgue_bounds(g, n, literal ? VariationConvention::literal : VariationConvention::from_zero);
        py::dict d;
        d["v"] = b.v;
        d["vstar"] = b.vstar;
        d["lower"] = b.lower;
        d["upper"] = b.upper;
        return d;
    }, py::arg("group"), py::arg("n"), py::arg("literal") = false);

    m.def("mean", [](const GridFunction& f, const std::string& kind, Nat n, double alpha, const std::optional<WeightSequence>& q) {
        return apply_mean(f, mean_spec(kind, alpha, q), n);
    }, py::arg("f"), py::arg("kind"), py::arg("n"), py::arg("alpha") = 1.0, py::arg("weights") = py::none());

    m.def("hardy_quasinorm", [](const GridFunction& f, double p) { return hardy_quasinorm(regular_martingale(f), p); },
          py::arg("f"), py::arg("p"));

    m.def("counterexample", [](const GroupSpec& g, const std::string& kind, std::vector<int> alpha, double p, int rank) {
        const auto ex = counterexample(g, counterexample_kind_from_string(kind), CounterexampleParams{std::move(alpha), p, rank});
        return py::make_tuple(martingale_to_json(ex.mart), record_list(ex.records));
    }, py::arg("group"), py::arg("kind"), py::arg("alpha"), py::arg("p") = 0.4, py::arg("rank") = 0);

    m.def("verify", [](const std::string& suite, const GroupSpec& g, Nat n_max, int samples, std::uint64_t seed,
                       double tol, double margin_tol) {
        SuiteConfig cfg;
        cfg.n_max = n_max;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.tol = tol;
        cfg.margin_tol = margin_tol;
        std::vector<VerificationRecord> rs;
        {
            py::gil_scoped_release release;
            rs = run_suite(suite, g, cfg);
        }
        return record_list(rs);
    }, py::arg("suite"), py::arg("group"), py::arg("n_max") = 64, py::arg("samples") = 20, py::arg("seed") = 1,
       py::arg("tol") = 1e-12, py::arg("margin_tol") = 1e-10);
    m.def("suite_names", &suite_names);
    m.def("anchor_catalogue", &anchor_catalogue);
    m.def("anchor_of", &anchor_of);

    m.def("grid_to_json", &grid_to_json);
    m.def("grid_from_json", [](const std::string& s) { return grid_from_json(s); });
}
