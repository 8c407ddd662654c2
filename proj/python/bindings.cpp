#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mdglct/experiments.hpp"

namespace py = pybind11;
using namespace mdglct;

namespace {

using CArray = py::array_t<Complex, py::array::f_style | py::array::forcecast>;

// numpy arrays travel in Fortran order so the flat buffer matches the
// library's axis-0-fastest linearization.
SignalNd to_signal(const CArray& arr) {
  std::vector<std::size_t> shape(arr.shape(), arr.shape() + arr.ndim());
  if (shape.empty()) shape.push_back(1);
  CVector values(static_cast<Eigen::Index>(arr.size()));
  std::copy(arr.data(), arr.data() + arr.size(), values.data());
  return SignalNd(std::move(shape), std::move(values));
}

CArray to_array(const SignalNd& x) {
  std::vector<py::ssize_t> shape(x.shape.begin(), x.shape.end());
  CArray out(shape);
  std::copy(x.values.data(), x.values.data() + x.values.size(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_mdglct, m) {
  m.doc() = "Multi-dimensional graph linear canonical transforms";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidSizeError>(m, "InvalidSizeError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<DeterminantError>(m, "DeterminantError", error);
  py::register_exception<ShapeMismatchError>(m, "ShapeMismatchError", error);
  py::register_exception<DegenerateSignalError>(m, "DegenerateSignalError", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<NumericalError>(m, "NumericalError", error);

  py::enum_<GsoKind>(m, "GsoKind").value("LAPLACIAN", GsoKind::Laplacian).value("ADJACENCY", GsoKind::Adjacency);
  py::enum_<GlctVariant>(m, "GlctVariant").value("CDDHFS", GlctVariant::Cddhfs).value("CMCCM", GlctVariant::CmCcCm);
  py::enum_<ZeroBVariant>(m, "ZeroBVariant").value("EQ30", ZeroBVariant::Eq30).value("EQ31", ZeroBVariant::Eq31);
  py::enum_<TransformOp>(m, "TransformOp")
      .value("GFT", TransformOp::Gft)
      .value("IGFT", TransformOp::Igft)
      .value("GFRFT", TransformOp::Gfrft)
      .value("GCM", TransformOp::Gcm)
      .value("GSCALE", TransformOp::Gscale)
      .value("GLCT_CDDHFS", TransformOp::GlctCddhfs)
      .value("GLCT_CMCCM", TransformOp::GlctCmCcCm);
  py::enum_<ComplexityCase>(m, "ComplexityCase")
      .value("CDDHFS", ComplexityCase::Cddhfs)
      .value("CMCCM_GENERAL_B", ComplexityCase::CmCcCmGeneralB)
      .value("CMCCM_ZERO_B", ComplexityCase::CmCcCmZeroB);

  py::class_<LctParams>(m, "LctParams")
      .def(py::init([](double a, double b, double c, double d) { return LctParams{a, b, c, d}; }), py::arg("a") = 1.0,
           py::arg("b") = 0.0, py::arg("c") = 0.0, py::arg("d") = 1.0)
      .def_readwrite("a", &LctParams::a)
      .def_readwrite("b", &LctParams::b)
      .def_readwrite("c", &LctParams::c)
      .def_readwrite("d", &LctParams::d)
      .def("det", &LctParams::det)
      .def("matrix", &LctParams::matrix)
      .def_static("from_matrix", &LctParams::from_matrix)
      .def(py::self == py::self)
      .def("__repr__", [](const LctParams& p) {
        return "LctParams(" + format_double(p.a) + ", " + format_double(p.b) + ", " + format_double(p.c) + ", " +
               format_double(p.d) + ")";
      });
  m.def("validate", &validate);
  m.def("inverse", &inverse);
  m.def("compose", &compose, py::arg("p1"), py::arg("p2"));
  m.def("parse_params", [](const std::string& s) { return parse_params(s); });
  m.def("sample_random_params", &sample_random_params, py::arg("seed"), py::arg("lo") = -2.0, py::arg("hi") = 2.0);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges) {
             std::vector<Edge> es;
             for (const auto& [i, j, w] : edges) es.push_back({i, j, w});
             return Graph(n, std::move(es));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::tuple<std::size_t, std::size_t, double>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.i, e.j, e.w);
                               return out;
                             })
      .def("adjacency", &Graph::adjacency)
      .def("laplacian", &Graph::laplacian)
      .def("degrees", &Graph::degrees);
  m.def("make_ring", &make_ring);
  m.def("make_path", &make_path);
  m.def("make_complete", &make_complete);
  m.def("make_comet", &make_comet, py::arg("n"), py::arg("head") = py::none());
  m.def("make_low_stretch_tree", &make_low_stretch_tree);

  py::class_<ProductGraph>(m, "ProductGraph")
      .def(py::init<std::vector<Graph>>())
      .def_property_readonly("shape", &ProductGraph::shape)
      .def_property_readonly("factors", &ProductGraph::factors)
      .def("vertex_count", &ProductGraph::vertex_count)
      .def("gso", &ProductGraph::gso, py::arg("kind") = GsoKind::Laplacian)
      .def("flatten", &ProductGraph::flatten);

  py::class_<ProductSpectrum>(m, "ProductSpectrum")
      .def(py::init<const ProductGraph&, GsoKind>(), py::arg("graph"), py::arg("kind") = GsoKind::Laplacian)
      .def_property_readonly("shape", &ProductSpectrum::shape)
      .def_property_readonly("kind", &ProductSpectrum::kind)
      .def("fourier", [](const ProductSpectrum& ps, std::size_t axis) {
        if (axis >= ps.factors().size()) throw ShapeMismatchError("axis out of range");
        return ps.factors()[axis].fourier;
      });

  m.def(
      "gft",
      [](const CArray& x, const ProductSpectrum& ps) { return to_array(gft_nd(to_signal(x), ps)); },
      py::arg("x"), py::arg("spectrum"));
  m.def(
      "igft",
      [](const CArray& x, const ProductSpectrum& ps) { return to_array(igft_nd(to_signal(x), ps)); },
      py::arg("x"), py::arg("spectrum"));
  m.def(
      "gfrft", [](const CArray& x, double alpha, const ProductSpectrum& ps) {
        return to_array(gfrft_nd(to_signal(x), alpha, ps));
      },
      py::arg("x"), py::arg("alpha"), py::arg("spectrum"));
  m.def(
      "gcm", [](const CArray& x, double xi, const ProductSpectrum& ps) { return to_array(gcm_nd(to_signal(x), xi, ps)); },
      py::arg("x"), py::arg("xi"), py::arg("spectrum"));
  m.def(
      "gscale",
      [](const CArray& x, double sigma, const ProductSpectrum& ps) { return to_array(gscale_nd(to_signal(x), sigma, ps)); },
      py::arg("x"), py::arg("sigma"), py::arg("spectrum"));
  m.def(
      "glct",
      [](const CArray& x, const LctParams& p, const ProductSpectrum& ps, GlctVariant variant, ZeroBVariant zero_b) {
        return to_array(glct_nd(to_signal(x), p, variant, zero_b, ps));
      },
      py::arg("x"), py::arg("params"), py::arg("spectrum"), py::arg("variant") = GlctVariant::CmCcCm,
      py::arg("zero_b") = ZeroBVariant::Eq30);

  py::class_<TransformDescriptor>(m, "TransformDescriptor")
      .def(py::init<>())
      .def_readwrite("op", &TransformDescriptor::op)
      .def_readwrite("alpha", &TransformDescriptor::alpha)
      .def_readwrite("xi", &TransformDescriptor::xi)
      .def_readwrite("sigma", &TransformDescriptor::sigma)
      .def_readwrite("params", &TransformDescriptor::params)
      .def_readwrite("zero_b", &TransformDescriptor::zero_b)
      .def_readwrite("gso", &TransformDescriptor::gso)
      .def("to_json", [](const TransformDescriptor& d) { return descriptor_to_json(d).dump(); });
  m.def(
      "apply_transform",
      [](const TransformDescriptor& d, const CArray& x, const ProductSpectrum& ps) {
        return to_array(apply_transform(d, to_signal(x), ps));
      },
      py::arg("descriptor"), py::arg("x"), py::arg("spectrum"));
  m.def("inverse_descriptor", &inverse_descriptor);
  m.def("dense_operator", &dense_operator, py::arg("descriptor"), py::arg("spectrum"));
  m.def(
      "mult_count",
      [](const TransformDescriptor& d, const std::vector<std::size_t>& shape) { return mult_count(d, shape); },
      py::arg("descriptor"), py::arg("shape"));
  m.def("complexity_model", &complexity_model, py::arg("n1"), py::arg("n2"), py::arg("case"));

  m.def(
      "benchmark_signal",
      [](int which) {
        auto b = make_benchmark_signal(which);
        return py::make_tuple(b.name, b.graph, to_array(b.signal));
      },
      py::arg("which"));
  m.def("nmse", [](const CArray& ref, const CArray& approx) {
    return nmse(to_signal(ref).values, to_signal(approx).values);
  });
  m.def(
      "nmse_additivity",
      [](const CArray& x, const LctParams& p1, const LctParams& p2, GlctVariant v, const ProductSpectrum& ps,
         ZeroBVariant zb) { return nmse_additivity(to_signal(x), p1, p2, v, ps, zb); },
      py::arg("x"), py::arg("p1"), py::arg("p2"), py::arg("variant"), py::arg("spectrum"),
      py::arg("zero_b") = ZeroBVariant::Eq30);
  m.def(
      "nmse_reversibility",
      [](const CArray& x, const LctParams& p, GlctVariant v, const ProductSpectrum& ps, ZeroBVariant zb) {
        return nmse_reversibility(to_signal(x), p, v, ps, zb);
      },
      py::arg("x"), py::arg("params"), py::arg("variant"), py::arg("spectrum"), py::arg("zero_b") = ZeroBVariant::Eq30);

  py::class_<CompressionMetrics>(m, "CompressionMetrics")
      .def_readonly("re", &CompressionMetrics::re)
      .def_readonly("nrms", &CompressionMetrics::nrms)
      .def_readonly("cc", &CompressionMetrics::cc)
      .def("__repr__", [](const CompressionMetrics& c) {
        return "CompressionMetrics(re=" + format_double(c.re) + ", nrms=" + format_double(c.nrms) +
               ", cc=" + format_double(c.cc) + ")";
      });
  m.def("compression_metrics", &compression_metrics, py::arg("x"), py::arg("x_com"));
  m.def("retained_count", &retained_count, py::arg("gamma"), py::arg("n"));
  m.def(
      "compress",
      [](const CArray& x, const LctParams& p, double gamma, const ProductSpectrum& ps, GlctVariant v, ZeroBVariant zb) {
        auto r = compress(to_signal(x), p, v, gamma, ps, zb);
        return py::make_tuple(to_array(r.reconstructed), r.report.kept, r.report.metrics);
      },
      py::arg("x"), py::arg("params"), py::arg("gamma"), py::arg("spectrum"), py::arg("variant") = GlctVariant::CmCcCm,
      py::arg("zero_b") = ZeroBVariant::Eq30);
  m.def(
      "published_compression_params",
      [] {
        std::vector<std::tuple<std::string, double, LctParams, LctParams>> out;
        for (const auto& p : published_compression_params()) out.emplace_back(p.table, p.gamma, p.printed, p.effective());
        return out;
      },
      "Rows of (table, gamma, printed, effective).");
}
