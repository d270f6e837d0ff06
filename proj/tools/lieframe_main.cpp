// Batch front-end: load a group spec or catalog entry, then run the
// analyze / build / verify pipelines and emit machine-readable reports.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "lieframe/catalog.hpp"
#include "lieframe/frame_analysis.hpp"
#include "lieframe/report.hpp"
#include "lieframe/specfile.hpp"

namespace fs = std::filesystem;
using namespace lieframe;
using OrderedJson = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string input;
  std::string window = "parseval";  // parseval | indicator | custom-file
  std::string window_file;
  int window_order = 2;
  double o_radius = 0.0;  // 0: use the catalog default (or 1.0 for files)
  int quad_order = 32;
  int grid = 64;
  int trunc = 64;
  int test_functions = 5;
  std::uint64_t seed = 1;
  double greedy_region = 0.0;
  double greedy_z = 0.0;
  std::string out_dir = ".";
  std::string thresholds_file;
  std::string out_file;  // export-spec target
};

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

CatalogEntry load_input(const RunConfig& config) {
  for (const auto& id : catalog_ids())
    if (id == config.input) return get_entry(id);
  if (!fs::exists(config.input))
    throw DimensionError("input '" + config.input + "' is neither a catalog id nor a file");
  GroupSpecFile file = load_spec_file(config.input);
  CatalogEntry entry;
  entry.id = file.spec.name.empty() ? config.input : file.spec.name;
  entry.description = "user spec file " + config.input;
  entry.spec = std::make_shared<LieSplitSpec>(std::move(file.spec));
  entry.group = std::make_shared<HGroup>(entry.spec);
  entry.lambda = file.lambda;
  entry.default_o_radii = Vec::Constant(entry.spec->r_dim, 1.0);
  return entry;
}

struct AnalyzeResult {
  CatalogEntry entry;
  ValidationReport validation;
  ImmersionReport immersion;
  std::shared_ptr<const ThetaChart> chart;  // null if immersion failed
};

OrderedJson immersion_json(const ImmersionReport& report) {
  OrderedJson j;
  OrderedJson rows = OrderedJson::array();
  for (int i = 0; i < report.D.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (int k = 0; k < report.D.cols(); ++k) row.push_back(report.D(i, k));
    rows.push_back(row);
  }
  j["D"] = rows;
  j["gram_det"] = report.gram_det;
  j["threshold"] = report.threshold;
  j["condition_number"] = report.condition_number;
  OrderedJson jj = OrderedJson::array();
  for (int idx : report.J) jj.push_back(idx + 1);
  j["J"] = jj;
  j["passed"] = report.passed;
  return j;
}

AnalyzeResult run_analyze(const RunConfig& config) {
  AnalyzeResult result{load_input(config), {}, {}, nullptr};
  result.validation = validate_spec(*result.entry.spec);
  if (!result.validation.passed()) return result;
  result.immersion = immersion_check(*result.entry.spec, result.entry.lambda);
  if (!result.immersion.passed || result.entry.spec->r_dim == 0) return result;
  Vec radii = config.o_radius > 0 ? Vec::Constant(result.entry.spec->r_dim, config.o_radius)
                                  : result.entry.default_o_radii;
  result.chart = make_entry_chart(result.entry, radii);
  return result;
}

int cmd_analyze(const RunConfig& config) {
  AnalyzeResult result = run_analyze(config);
  OrderedJson j;
  j["input"] = config.input;
  if (!result.validation.passed()) {
    std::cout << "spec validation failed:\n";
    OrderedJson issues = OrderedJson::array();
    for (const auto& issue : result.validation.issues) {
      std::cout << "  [" << issue.invariant << "] " << issue.detail << "\n";
      issues.push_back({{"invariant", issue.invariant},
                        {"detail", issue.detail},
                        {"residual", issue.residual}});
    }
    j["validation"] = issues;
    write_file(fs::path(config.out_dir) / "analyze.json", j.dump(2) + "\n");
    return 2;
  }
  j["validation"] = "passed";
  j["immersion"] = immersion_json(result.immersion);
  std::cout << "det(D^T D) = " << result.immersion.gram_det
            << " (threshold " << result.immersion.threshold << ")\n";
  if (!result.immersion.passed) {
    std::cout << "immersion fails\n";
    write_file(fs::path(config.out_dir) / "analyze.json", j.dump(2) + "\n");
    return 1;
  }
  std::cout << "immersion passes, J = {";
  for (std::size_t i = 0; i < result.immersion.J.size(); ++i)
    std::cout << (i ? "," : "") << result.immersion.J[i] + 1;
  std::cout << "}\n";
  if (result.chart) {
    const auto& diag = result.chart->diagnostics();
    OrderedJson cj;
    OrderedJson radii = OrderedJson::array();
    for (int k = 0; k < result.chart->domain().dim(); ++k)
      radii.push_back(result.chart->domain().hi[k]);
    cj["o_radii"] = radii;
    cj["min_singular_value"] = diag.min_singular_value;
    cj["max_image_norm"] = diag.max_image_norm;
    cj["halvings"] = diag.halvings;
    // sample table of the weight along the first chart direction
    OrderedJson samples = OrderedJson::array();
    const int r = result.chart->r();
    for (int i = 0; i <= 8; ++i) {
      Vec t = Vec::Zero(r);
      t[0] = result.chart->domain().lo[0] +
             (result.chart->domain().hi[0] - result.chart->domain().lo[0]) * (i + 0.5) / 9.0;
      Vec xi = result.chart->theta_unchecked(t);
      OrderedJson row;
      row["t1"] = t[0];
      row["xi1"] = xi[0];
      row["W"] = result.chart->weight_at_point(t);
      samples.push_back(row);
    }
    cj["weight_samples"] = samples;
    j["chart"] = cj;
    std::cout << "O radii:";
    for (int k = 0; k < result.chart->domain().dim(); ++k)
      std::cout << " " << result.chart->domain().hi[k];
    std::cout << "\nmin singular value on grid: " << diag.min_singular_value << "\n";
  }
  write_file(fs::path(config.out_dir) / "analyze.json", j.dump(2) + "\n");
  return 0;
}

struct BuildResult {
  AnalyzeResult analysis;
  FrequencyBox box;
  LatticeGammaN lattice;
  CoverGammaH cover;
  Window f;
  Box cell;         // fundamental cell for the periodization extremes
  Box test_region;  // seeded test functions live here
  bool regional = false;
};

Window load_window_file(const std::string& path, const ThetaChart& chart) {
  if (!fs::exists(path)) throw DimensionError("window file '" + path + "' not found");
  if (chart.r() != 1)
    throw UnsupportedError("custom window files support 1-dimensional H only");
  std::ifstream in(path);
  std::vector<double> ts, vs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || !(std::isdigit(line[0]) || line[0] == '-' || line[0] == '+')) continue;
    for (auto& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ls(line);
    double t, v;
    if (ls >> t >> v) {
      ts.push_back(t);
      vs.push_back(v);
    }
  }
  if (ts.size() < 2) throw DimensionError("window file needs at least two samples");
  Window w;
  w.kind = Window::Kind::Custom;
  w.support = Box{Vec::Constant(1, ts.front()), Vec::Constant(1, ts.back())};
  w.breakpoints = {std::vector<double>(ts.begin() + 1, ts.end() - 1)};
  w.eval = [ts, vs](const Vec& p) {
    double t = p[0];
    auto it = std::upper_bound(ts.begin(), ts.end(), t);
    if (it == ts.begin() || it == ts.end()) return 0.0;
    std::size_t i = static_cast<std::size_t>(it - ts.begin());
    double u = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
    return (1 - u) * vs[i - 1] + u * vs[i];
  };
  return w;
}

BuildResult run_build(const RunConfig& config) {
  BuildResult out{run_analyze(config), {}, {}, {}, {}, {}, {}, false};
  const AnalyzeResult& a = out.analysis;
  if (!a.validation.passed()) throw DimensionError("spec validation failed; run analyze");
  if (!a.immersion.passed) throw UnsupportedError("immersion fails; no chart to build on");
  if (!a.chart) throw UnsupportedError("trivial H: nothing to build");
  const auto& entry = a.entry;
  const auto& chart = a.chart;
  const int r = chart->r();

  // frequency box and lattice, honoring a pinned catalog plan
  bool plan_used = false;
  if (entry.plan && entry.plan->cli_applicable && config.o_radius <= 0) {
    const PlanOverride& plan = *entry.plan;
    out.box.r = r;
    out.box.J = chart->index_set();
    out.box.image_is_C = plan.image_is_C;
    out.box.varsigma = plan.varsigma.value_or(0.0);
    out.box.volume = plan.c_volume.value_or(std::pow(2.0 * out.box.varsigma, r));
    out.lattice.spacing = plan.gamma_n_spacing.value_or(
        Vec::Constant(r, 1.0 / (2.0 * out.box.varsigma)));
    plan_used = true;
  } else {
    auto computed = compute_frequency_box(*chart);
    out.box = computed.first;
    out.lattice = computed.second;
  }
  out.lattice.truncation_radius = config.trunc;

  // window
  const double c_volume = out.box.volume;
  if (config.window == "parseval") {
    if (!entry.spec->h_solvable)
      throw UnsupportedError("parseval window needs solvable H (tiling construction)");
    std::vector<PartitionWindow1d> factors;
    for (int k = 0; k < r; ++k) {
      double radius = chart->domain().hi[k];
      double eps = (config.window_order + 1) /
                   (static_cast<double>(config.window_order) * radius * 0.995);
      factors.push_back(partition_window_1d(eps, config.window_order));
    }
    auto [s, steps] = product_window_solvable(*entry.group, factors);
    out.f = parseval_window(chart, s, c_volume);
    out.cover = build_tiling_cover(*entry.group, chart->domain().radii(), steps,
                                   3.0 * chart->domain().radii());
  } else if (config.window == "indicator") {
    Window raw = indicator_window(chart);
    const double scale = 1.0 / std::sqrt(c_volume);
    Window scaled = raw;
    scaled.eval = [raw, scale](const Vec& t) { return scale * raw(t); };
    out.f = scaled;
    if (entry.spec->h_solvable) {
      Vec steps = (plan_used && entry.plan->gamma_h_step) ? *entry.plan->gamma_h_step
                                                          : Vec(2.0 * chart->domain().radii());
      out.cover = build_tiling_cover(*entry.group, chart->domain().radii(), steps,
                                     3.0 * chart->domain().radii());
    }
  } else if (config.window == "custom-file") {
    out.f = load_window_file(config.window_file, *chart);
    if (entry.spec->h_solvable) {
      // overlap factor 2: generic windows vanish at their support edge, so
      // edge-to-edge tiles would puncture the periodization
      Vec steps = 0.5 * (out.f.support.hi - out.f.support.lo);
      out.cover = build_tiling_cover(*entry.group, chart->domain().radii(), steps,
                                     3.0 * chart->domain().radii());
    }
  } else {
    throw DimensionError("unknown window kind '" + config.window + "'");
  }

  if (!entry.spec->h_solvable) {
    if (config.greedy_region <= 0 || config.greedy_z <= 0)
      throw UnsupportedError(
          "non-solvable H needs --greedy-region and --greedy-z for the cover");
    out.cover = build_greedy_cover(*entry.group, config.greedy_region, config.greedy_z);
    out.regional = true;
    out.cell = Box::centered(Vec::Constant(r, config.greedy_region));
  } else {
    out.cell = Box::centered(0.5 * out.cover.step);
  }
  if (out.regional)
    out.test_region = Box::centered(0.6 * out.cell.radii());
  else if (config.window == "indicator")
    out.test_region = Box::centered(0.9 * out.cell.radii());  // keep bumps inside one tile
  else
    out.test_region = Box::centered(0.9 * chart->domain().radii());
  return out;
}

int cmd_build(const RunConfig& config) {
  BuildResult build = run_build(config);
  SamplingDescription plan;
  plan.input = config.input;
  plan.box = build.box;
  plan.lattice = build.lattice;
  plan.cover = build.cover;
  plan.o_domain = build.analysis.chart->domain();
  write_file(fs::path(config.out_dir) / "sampling.json", sampling_to_json(plan));
  write_file(fs::path(config.out_dir) / "window.csv", window_to_csv(build.f, 129));
  std::cout << "|C| = " << build.box.volume << ", lattice spacing";
  for (int k = 0; k < build.lattice.spacing.size(); ++k)
    std::cout << " " << build.lattice.spacing[k];
  std::cout << ", cover size " << build.cover.elements.size() << "\n";
  return 0;
}

int cmd_verify(const RunConfig& config) {
  Thresholds th;
  if (!config.thresholds_file.empty()) th = load_thresholds(config.thresholds_file);
  BuildResult build = run_build(config);
  const auto& chart = build.analysis.chart;
  const auto& entry = build.analysis.entry;

  QuadConfig quad;
  quad.base_order = config.quad_order;
  TruncationConfig trunc;
  trunc.max_shell = config.trunc;
  trunc.tail_rtol = th.tail;

  FrameReport report;
  report.input = config.input;
  report.window = config.window;
  report.seed = config.seed;
  report.c_volume = build.box.volume;
  report.bounds = estimate_frame_bounds(*chart, build.f, build.cover, build.box.volume,
                                        build.cell, config.grid);
  report.necessity_ok = necessity_check(report.bounds.A, report.bounds.B, report.bounds.m_hat,
                                        report.bounds.M_hat, build.box.volume);

  if (!report.bounds.is_frame) {
    report.verdict = "not-a-frame";
    report.all_ok = false;
    write_file(fs::path(config.out_dir) / "report.json", report_to_json(report));
    write_file(fs::path(config.out_dir) / "report.csv", report_to_csv(report));
    std::cout << "verdict: not-a-frame (m_hat = " << report.bounds.m_hat << ")\n";
    return 1;
  }

  Rng rng(config.seed);
  bool rows_ok = true;
  for (int i = 0; i < config.test_functions; ++i) {
    Window g = random_bump_combination(rng, build.test_region);
    TestFunctionRow row;
    row.index = i;
    row.norm_sq = window_norm_sq(*chart, g, quad);
    FrameSumResult sum = frame_sum(*chart, g, build.f, build.cover, build.lattice, quad, trunc);
    row.frame_sum = sum.value;
    row.ratio = row.norm_sq > 0 ? sum.value / row.norm_sq : 0.0;
    row.tail_increment = sum.tail_increment;
    row.shells = sum.shells_used;
    row.quad_converged = sum.quad_converged && sum.tail_converged;
    OracleResult oracle = oracle_identity_check(*chart, g, build.f, build.cover, build.lattice,
                                                build.box.volume, quad, trunc, &sum);
    row.oracle_residual = oracle.residual;
    row.within_bounds = sum.value >= report.bounds.A * row.norm_sq * (1 - th.frame_slack) &&
                        sum.value <= report.bounds.B * row.norm_sq * (1 + th.frame_slack);
    rows_ok = rows_ok && row.within_bounds && row.oracle_residual < th.oracle_residual;
    report.rows.push_back(row);
  }

  const bool parseval_claim = std::abs(report.bounds.A - 1.0) < 1e-6 &&
                              std::abs(report.bounds.B - 1.0) < 1e-6;
  if (parseval_claim)
    for (const auto& row : report.rows)
      rows_ok = rows_ok && std::abs(row.ratio - 1.0) < th.frame_ratio + th.frame_slack;

  bool gram_ok = true;
  if (report.bounds.onb_candidate && entry.group->h_abelian()) {
    const int r = chart->r();
    std::vector<GroupPointH> ells;
    std::vector<int> offsets = {-1, 0, 1};
    std::size_t total = 1;
    for (int k = 0; k < r; ++k) total *= offsets.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rem = flat;
      Vec coords(r);
      for (int k = 0; k < r; ++k) {
        coords[k] = build.cover.step[k] * offsets[rem % offsets.size()];
        rem /= offsets.size();
      }
      ells.emplace_back(coords);
    }
    std::vector<std::vector<int>> kappas = build.lattice.enumerate(2);
    report.gram_residual =
        verify_onb_gram_residual(*chart, build.f, ells, kappas, build.lattice, quad);
    gram_ok = *report.gram_residual < th.gram_residual;
  }

  if (report.bounds.onb_candidate && gram_ok && report.gram_residual)
    report.verdict = "onb";
  else if (parseval_claim)
    report.verdict = "parseval";
  else if (report.bounds.tight)
    report.verdict = "tight-frame";
  else
    report.verdict = "frame";
  if (build.regional) report.verdict += " (regional)";

  report.all_ok = rows_ok && gram_ok && report.necessity_ok;
  write_file(fs::path(config.out_dir) / "report.json", report_to_json(report));
  write_file(fs::path(config.out_dir) / "report.csv", report_to_csv(report));
  std::cout << "verdict: " << report.verdict << "  A = " << report.bounds.A
            << "  B = " << report.bounds.B << "  all_ok = " << (report.all_ok ? "yes" : "no")
            << "\n";
  return report.all_ok ? 0 : 1;
}

int cmd_catalog_list() {
  for (const auto& id : catalog_ids()) {
    auto entry = get_entry(id);
    std::cout << id << "  (n=" << entry.spec->n_dim << ", r=" << entry.spec->r_dim << ")  "
              << entry.description << "\n";
  }
  return 0;
}

int cmd_export_spec(const RunConfig& config) {
  CatalogEntry entry = load_input(config);
  std::string path = config.out_file.empty()
                         ? (fs::path(config.out_dir) / (entry.id + ".spec")).string()
                         : config.out_file;
  save_spec_file(*entry.spec, entry.lambda, path);
  std::cout << "wrote " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compactly supported frame construction and verification on Lie groups"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input", config.input, "catalog id or group spec file")->required();
    cmd->add_option("--out-dir", config.out_dir, "output directory");
    cmd->add_option("--o-radius", config.o_radius, "chart neighborhood radius override");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "immersion test and chart diagnostics");
  add_common(analyze, true);

  CLI::App* build = app.add_subcommand("build", "sampling plan and window construction");
  add_common(build, true);
  CLI::App* verify = app.add_subcommand("verify", "frame bound estimation and verification");
  add_common(verify, true);
  for (CLI::App* cmd : {build, verify}) {
    cmd->add_option("--window", config.window, "parseval | indicator | custom-file");
    cmd->add_option("--window-file", config.window_file, "sample table for custom-file");
    cmd->add_option("--window-order", config.window_order, "spline order for parseval");
    cmd->add_option("--greedy-region", config.greedy_region,
                    "cover region radius (non-solvable H)");
    cmd->add_option("--greedy-z", config.greedy_z, "cover separation radius (non-solvable H)");
  }
  verify->add_option("--quad-order", config.quad_order, "base quadrature order per axis");
  verify->add_option("--grid", config.grid, "periodization grid density");
  verify->add_option("--trunc", config.trunc, "max lattice truncation shell");
  verify->add_option("--seed", config.seed, "seed for the test functions");
  verify->add_option("--test-functions", config.test_functions,
                     "number of seeded test functions");
  verify->add_option("--thresholds-file", config.thresholds_file,
                     "verdict threshold overrides (json)");

  app.add_subcommand("catalog-list", "list the built-in groups");
  CLI::App* exportspec = app.add_subcommand("export-spec", "write a catalog entry as a spec file");
  add_common(exportspec, true);
  exportspec->add_option("--out", config.out_file, "target file path");

  CLI11_PARSE(app, argc, argv);
  try {
    if (analyze->parsed()) return cmd_analyze(config);
    if (build->parsed()) return cmd_build(config);
    if (verify->parsed()) return cmd_verify(config);
    if (app.get_subcommand("catalog-list")->parsed()) return cmd_catalog_list();
    if (exportspec->parsed()) return cmd_export_spec(config);
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    OrderedJson j;
    j["error"] = e.what();
    try {
      write_file(fs::path(config.out_dir) / "report.json", j.dump(2) + "\n");
    } catch (...) {
    }
    std::cerr << "pipeline error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
