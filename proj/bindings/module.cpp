#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracwave/uncertainty.hpp"

namespace py = pybind11;
using namespace fracwave;

namespace {

std::vector<cdouble> field_values(const SampledField& f) {
    return {f.values().begin(), f.values().end()};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "N-dimensional fractional Fourier and wavelet transforms";

    py::register_exception<Error>(m, "FracwaveError");

    py::class_<Grid>(m, "Grid")
        .def(py::init<std::vector<double>, std::vector<std::size_t>>(), py::arg("half_extents"),
             py::arg("samples"))
        .def_property_readonly("dims", &Grid::dims)
        .def_property_readonly("size", &Grid::size)
        .def("spacing", &Grid::spacing)
        .def("half_extent", &Grid::half_extent)
        .def("point", py::overload_cast<std::size_t>(&Grid::point, py::const_))
        .def("points", [](const Grid& g) {
            std::vector<std::vector<double>> out(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) out[i] = g.point(i);
            return out;
        });

    py::class_<SampledField>(m, "SampledField")
        .def(py::init<Grid, std::vector<cdouble>>(), py::arg("grid"), py::arg("values"))
        .def_property_readonly("grid", &SampledField::grid)
        .def_property_readonly("values", &field_values);

    py::class_<ScaleGrid>(m, "ScaleGrid")
        .def(py::init<std::size_t, double, double, std::size_t, bool>(), py::arg("dims"),
             py::arg("a_min"), py::arg("a_max"), py::arg("count"), py::arg("signed_axes"))
        .def_property_readonly("size", &ScaleGrid::size)
        .def("point",
             [](const ScaleGrid& s, std::size_t i) {
                 auto p = s.point(i);
                 return std::vector<double>(p.begin(), p.end());
             })
        .def("weight_inv_square", &ScaleGrid::weight_inv_square)
        .def("weight_inv_abs", &ScaleGrid::weight_inv_abs);

    py::class_<FracOrder>(m, "FracOrder")
        .def(py::init<std::vector<double>, double>(), py::arg("alpha"), py::arg("lambda_"))
        .def_property_readonly("alpha",
                               [](const FracOrder& o) { return o.alpha(); })
        .def_property_readonly("lambda_", &FracOrder::lambda)
        .def_property_readonly("alpha_lambda", &FracOrder::alpha_lambda)
        .def_property_readonly("front_factor", &FracOrder::front_factor)
        .def_property_readonly("modified_axis_product", &FracOrder::modified_axis_product)
        .def("negated", &FracOrder::negated);

    py::class_<Spectrum>(m, "Spectrum")
        .def_property_readonly("field", [](const Spectrum& s) { return s.field; })
        .def_property_readonly("order", [](const Spectrum& s) { return s.order; });

    py::class_<Generator>(m, "Generator")
        .def_static("gaussian", &Generator::gaussian)
        .def_static("hermite1", &Generator::hermite1)
        .def_static("gabor", &Generator::gabor)
        .def_static("chirped_gaussian", &Generator::chirped_gaussian)
        .def_static("hermite_superposition", &Generator::hermite_superposition, py::arg("dims"),
                    py::arg("seed"), py::arg("max_order") = 5)
        .def("__call__",
             [](const Generator& g, const std::vector<double>& p) { return g(p); })
        .def_property_readonly("id", &Generator::id);

    py::class_<WaveletCoefficients>(m, "WaveletCoefficients")
        .def_property_readonly("values",
                               [](const WaveletCoefficients& w) { return w.values; })
        .def_property_readonly("wavelet_id",
                               [](const WaveletCoefficients& w) { return w.wavelet_id; })
        .def("at", &WaveletCoefficients::at);

    py::class_<AdmissibilityReport>(m, "AdmissibilityReport")
        .def_readonly("constant", &AdmissibilityReport::constant)
        .def_readonly("converged", &AdmissibilityReport::converged)
        .def_readonly("diverging", &AdmissibilityReport::diverging)
        .def_readonly("integrand", &AdmissibilityReport::integrand);

    py::class_<UncertaintyReport>(m, "UncertaintyReport")
        .def_readonly("inequality", &UncertaintyReport::inequality)
        .def_readonly("lhs", &UncertaintyReport::lhs)
        .def_readonly("rhs", &UncertaintyReport::rhs)
        .def_readonly("ratio", &UncertaintyReport::ratio)
        .def_readonly("satisfied", &UncertaintyReport::satisfied)
        .def_readonly("constants", &UncertaintyReport::constants);

    py::class_<Box>(m, "Box")
        .def(py::init([](std::vector<double> lo, std::vector<double> hi) {
                 return Box{std::move(lo), std::move(hi)};
             }),
             py::arg("lo"), py::arg("hi"));
    py::class_<Region>(m, "Region").def(py::init([](std::vector<Box> boxes) {
        return Region{std::move(boxes)};
    }));

    m.def("sample", &sample);
    m.def("normalize", &normalize);
    m.def("inner_product", &inner_product);
    m.def("l2_norm", &l2_norm);

    m.def("chirp", &chirp, py::arg("grid"), py::arg("order"), py::arg("sign"));
    m.def("eval_kernel", [](const std::vector<double>& x, const std::vector<double>& xi,
                            const FracOrder& o) { return eval_kernel(x, xi, o); });
    m.def("induced_spectral_grid", &induced_spectral_grid);
    m.def("frft_direct", &frft_direct);
    m.def("frft_fast", &frft_fast);
    m.def("ifrft", &ifrft);
    m.def("parseval_residual", &parseval_residual);

    m.def("daughter", [](const Generator& psi, const std::vector<double>& a,
                         const std::vector<double>& b, const FracOrder& o, const Grid& g) {
        return daughter(psi, a, b, o, g);
    });
    m.def("wavelet_coefficient",
          [](const SampledField& f, const Generator& psi, const std::vector<double>& a,
             const std::vector<double>& b, const FracOrder& o) {
              return wavelet_coefficient(f, psi, a, b, o);
          });
    m.def("admissibility_constant", &admissibility_constant);
    m.def("admissibility_auto", &admissibility_auto);
    m.def("mfrwt_direct", &mfrwt_direct);
    m.def("mfrwt_spectral", &mfrwt_spectral);
    m.def("inner_product_relation_check", &inner_product_relation_check);
    m.def("reconstruct", &reconstruct);
    m.def("reproducing_kernel",
          [](const std::vector<double>& a0, const std::vector<double>& b0,
             const std::vector<double>& a, const std::vector<double>& b, const Generator& psi,
             const FracOrder& o, const Grid& g) {
              return reproducing_kernel(a0, b0, a, b, psi, o, g);
          });

    m.def("digamma", &digamma);
    m.def("dispersion2", &dispersion2);
    m.def("log_moment", &log_moment);
    m.def("heisenberg_mfrft", &heisenberg_mfrft);
    m.def("heisenberg_mfrwt", &heisenberg_mfrwt);
    m.def("log_uncertainty_mfrft", &log_uncertainty_mfrft);
    m.def("log_uncertainty_mfrwt", &log_uncertainty_mfrwt);
    m.def("local_uncertainty", &local_uncertainty);
    m.def("local_uncertainty_mfrwt", &local_uncertainty_mfrwt);
}
