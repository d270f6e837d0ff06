// Python bindings for the main operations: catalog access, immersion

// analysis, the frequency chart with its weight, windows, and the frame
// verification entry points.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieframe/catalog.hpp"
#include "lieframe/frame_analysis.hpp"
#include "lieframe/specfile.hpp"

namespace py = pybind11;
using namespace lieframe;

namespace {

Vec to_vec(const std::vector<double>& v) {
  Vec out(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<int>(i)] = v[i];
  return out;
}

std::vector<double> from_vec(const Vec& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

/// Catalog entry plus its validated chart, exposed as one handle.
struct EntryHandle {
  CatalogEntry entry;
  std::shared_ptr<const ThetaChart> chart;

  explicit EntryHandle(const std::string& id) : entry(get_entry(id)) {
    chart = make_entry_chart(entry);
  }

  py::dict info() const {
    py::dict d;
    d["id"] = entry.id;
    d["description"] = entry.description;
    d["n_dim"] = entry.spec->n_dim;
    d["r_dim"] = entry.spec->r_dim;
    d["h_solvable"] = entry.spec->h_solvable;
    d["o_radii"] = from_vec(chart->domain().radii());
    return d;
  }

  bool validate() const { return validate_spec(*entry.spec).passed(); }

  py::dict immersion() const {
    auto report = immersion_check(*entry.spec, entry.lambda);
    py::dict d;
    d["passed"] = report.passed;
    d["gram_det"] = report.gram_det;
    d["threshold"] = report.threshold;
    std::vector<int> j;
    for (int idx : report.J) j.push_back(idx + 1);
    d["J"] = j;
    return d;
  }

  std::vector<double> beta(const std::vector<double>& t) const {
    return from_vec(beta_eval(*entry.group, entry.lambda, GroupPointH(to_vec(t))));
  }

  std::vector<double> theta(const std::vector<double>& t) const {
    return from_vec(chart->theta(to_vec(t)));
  }

  std::vector<double> theta_inverse(const std::vector<double>& xi) const {
    return from_vec(chart->theta_inverse(to_vec(xi)));
  }

  double weight(const std::vector<double>& xi) const { return chart->weight(to_vec(xi)); }

  double weight_at_point(const std::vector<double>& t) const {
    return chart->weight_at_point(to_vec(t));
  }
};

/// Parseval-window verification on a solvable catalog entry; returns the
/// estimated bounds and the seeded frame-sum ratios.
py::dict run_parseval_check(const std::string& id, std::uint64_t seed, int bumps, int order) {
  EntryHandle handle(id);
  const auto& entry = handle.entry;
  if (!entry.spec->h_solvable)
    throw UnsupportedError("run_parseval_check: needs a solvable entry");
  auto chart = handle.chart;
  const int r = entry.spec->r_dim;
  std::vector<PartitionWindow1d> factors;
  for (int k = 0; k < r; ++k) {
    double eps = (order + 1) / (static_cast<double>(order) * chart->domain().hi[k] * 0.995);
    factors.push_back(partition_window_1d(eps, order));
  }
  auto [s, steps] = product_window_solvable(*entry.group, factors);
  auto [box, lattice] = compute_frequency_box(*chart);
  CoverGammaH cover = build_tiling_cover(*entry.group, chart->domain().radii(), steps,
                                         3.0 * chart->domain().radii());
  Window f = parseval_window(chart, s, box.volume);
  Box cell = Box::centered(0.5 * cover.step);
  BoundsResult bounds = estimate_frame_bounds(*chart, f, cover, box.volume, cell);
  Rng rng(seed);
  std::vector<double> ratios;
  for (int i = 0; i < bumps; ++i) {
    Window g = random_bump_combination(rng, Box::centered(0.9 * chart->domain().radii()));
    FrameSumResult sum = frame_sum(*chart, g, f, cover, lattice);
    ratios.push_back(sum.value / window_norm_sq(*chart, g));
  }
  py::dict d;
  d["A"] = bounds.A;
  d["B"] = bounds.B;
  d["m_hat"] = bounds.m_hat;
  d["M_hat"] = bounds.M_hat;
  d["c_volume"] = box.volume;
  d["ratios"] = ratios;
  return d;
}

/// Gram patch residual for the indicator construction on an entry whose plan
/// pins integer lattices.
double run_onb_gram(const std::string& id, int ell_range, int kappa_shells) {
  EntryHandle handle(id);
  const auto& entry = handle.entry;
  if (!entry.plan || !entry.plan->gamma_n_spacing)
    throw UnsupportedError("run_onb_gram: entry has no pinned lattice");
  Window f = indicator_window(handle.chart);
  LatticeGammaN lattice;
  lattice.spacing = *entry.plan->gamma_n_spacing;
  const int r = entry.spec->r_dim;
  std::vector<GroupPointH> ells;
  std::vector<int> offs;
  for (int a = -ell_range; a <= ell_range; ++a) offs.push_back(a);
  std::size_t total = 1;
  for (int k = 0; k < r; ++k) total *= offs.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    Vec coords(r);
    for (int k = 0; k < r; ++k) {
      coords[k] = (*entry.plan->gamma_h_step)[k] * offs[rem % offs.size()];
      rem /= offs.size();
    }
    ells.emplace_back(coords);
  }
  return verify_onb_gram_residual(*handle.chart, f, ells, lattice.enumerate(kappa_shells),
                                  lattice);
}

}  // namespace

PYBIND11_MODULE(_lieframe, m) {
  m.doc() = "compactly supported frames on Lie groups: coadjoint charts, "
            "weights, windows and frame verification";

  m.def("catalog_ids", &catalog_ids, "ids of the built-in groups");
  m.def("bspline", &bspline, py::arg("n"), py::arg("t"),
        "n-fold self-convolution of the unit indicator");
  m.def(
      "partition_window",
      [](double eps, int n) {
        PartitionWindow1d w = partition_window_1d(eps, n);
        py::dict d;
        d["step"] = w.step;
        d["support_radius"] = w.support_radius;
        d["eval"] = py::cpp_function([w](double t) { return w.eval(t); });
        return d;
      },
      py::arg("epsilon"), py::arg("n"),
      "1-d partition-of-unity window and its translation step");

  py::class_<EntryHandle>(m, "Entry")
      .def(py::init<const std::string&>(), py::arg("id"))
      .def("info", &EntryHandle::info)
      .def("validate", &EntryHandle::validate)
      .def("immersion", &EntryHandle::immersion)
      .def("beta", &EntryHandle::beta, py::arg("t"))
      .def("theta", &EntryHandle::theta, py::arg("t"))
      .def("theta_inverse", &EntryHandle::theta_inverse, py::arg("xi"))
      .def("weight", &EntryHandle::weight, py::arg("xi"))
      .def("weight_at_point", &EntryHandle::weight_at_point, py::arg("t"));

  m.def("parseval_check", &run_parseval_check, py::arg("id"), py::arg("seed") = 1,
        py::arg("bumps") = 3, py::arg("order") = 2,
        "bounds and seeded frame-sum ratios for the spline Parseval window");
  m.def("onb_gram_residual", &run_onb_gram, py::arg("id"), py::arg("ell_range") = 1,
        py::arg("kappa_shells") = 1,
        "max |Gram - Id| over a patch of the indicator construction");
}
