#include "lieframe/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lieframe {

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson vec_to_json(const Vec& v) {
  OrderedJson arr = OrderedJson::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

std::string csv_num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::string report_to_json(const FrameReport& report) {
  OrderedJson j;
  j["input"] = report.input;
  j["window"] = report.window;
  j["seed"] = report.seed;
  j["c_volume"] = report.c_volume;
  j["bounds"] = {{"m_hat", report.bounds.m_hat},
                 {"M_hat", report.bounds.M_hat},
                 {"A", report.bounds.A},
                 {"B", report.bounds.B},
                 {"f_norm_sq", report.bounds.f_norm_sq},
                 {"is_frame", report.bounds.is_frame},
                 {"tight", report.bounds.tight},
                 {"onb_candidate", report.bounds.onb_candidate},
                 {"grid_points_per_axis", report.bounds.grid_points_per_axis},
                 {"grid_change", report.bounds.grid_change}};
  j["necessity_ok"] = report.necessity_ok;
  OrderedJson rows = OrderedJson::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"index", row.index},
                    {"norm_sq", row.norm_sq},
                    {"frame_sum", row.frame_sum},
                    {"ratio", row.ratio},
                    {"tail_increment", row.tail_increment},
                    {"shells", row.shells},
                    {"quad_converged", row.quad_converged},
                    {"oracle_residual", row.oracle_residual},
                    {"within_bounds", row.within_bounds}});
  }
  j["test_functions"] = rows;
  if (report.gram_residual)
    j["gram_residual"] = *report.gram_residual;
  else
    j["gram_residual"] = nullptr;
  j["verdict"] = report.verdict;
  j["all_ok"] = report.all_ok;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const FrameReport& report) {
  std::ostringstream os;
  os << "index,norm_sq,frame_sum,ratio,tail_increment,shells,quad_converged,oracle_residual,"
        "within_bounds\n";
  for (const auto& row : report.rows) {
    os << row.index << "," << csv_num(row.norm_sq) << "," << csv_num(row.frame_sum) << ","
       << csv_num(row.ratio) << "," << csv_num(row.tail_increment) << "," << row.shells << ","
       << (row.quad_converged ? 1 : 0) << "," << csv_num(row.oracle_residual) << ","
       << (row.within_bounds ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string sampling_to_json(const SamplingDescription& plan) {
  OrderedJson j;
  j["input"] = plan.input;
  j["frequency_box"] = {{"varsigma", plan.box.varsigma},
                        {"r", plan.box.r},
                        {"volume", plan.box.volume},
                        {"image_is_C", plan.box.image_is_C}};
  OrderedJson jj = OrderedJson::array();
  for (int idx : plan.box.J) jj.push_back(idx + 1);
  j["frequency_box"]["J"] = jj;
  j["gamma_n"] = {{"spacing", vec_to_json(plan.lattice.spacing)},
                  {"truncation_radius", plan.lattice.truncation_radius}};
  j["o_domain"] = {{"lo", vec_to_json(plan.o_domain.lo)}, {"hi", vec_to_json(plan.o_domain.hi)}};
  OrderedJson cover;
  cover["kind"] = plan.cover.kind == CoverKind::Tiling ? "tiling" : "dense_separated";
  if (plan.cover.step.size() > 0) cover["step"] = vec_to_json(plan.cover.step);
  cover["z_radius"] = plan.cover.z_radius;
  cover["v_radius"] = plan.cover.v_radius;
  cover["count"] = plan.cover.elements.size();
  OrderedJson els = OrderedJson::array();
  for (const auto& e : plan.cover.elements) els.push_back(vec_to_json(e.coords));
  cover["elements"] = els;
  j["gamma_h"] = cover;
  return j.dump(2) + "\n";
}

std::string window_to_csv(const Window& window, int samples_per_axis) {
  const int d = window.support.dim();
  std::ostringstream os;
  for (int k = 0; k < d; ++k) os << "t" << k + 1 << ",";
  os << "value\n";
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= samples_per_axis;
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    Vec t(d);
    for (int k = 0; k < d; ++k) {
      int ik = static_cast<int>(rem % samples_per_axis);
      rem /= samples_per_axis;
      t[k] = window.support.lo[k] +
             (window.support.hi[k] - window.support.lo[k]) * ik / (samples_per_axis - 1.0);
    }
    for (int k = 0; k < d; ++k) os << csv_num(t[k]) << ",";
    os << csv_num(window(t)) << "\n";
  }
  return os.str();
}

Thresholds load_thresholds(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DimensionError("thresholds: cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  Thresholds t;
  t.frame_ratio = j.value("frame_ratio", t.frame_ratio);
  t.frame_slack = j.value("frame_slack", t.frame_slack);
  t.oracle_residual = j.value("oracle_residual", t.oracle_residual);
  t.gram_residual = j.value("gram_residual", t.gram_residual);
  t.tail = j.value("tail", t.tail);
  return t;
}

}  // namespace lieframe
