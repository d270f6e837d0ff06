#ifndef LIEFRAME_REPORT_HPP
#define LIEFRAME_REPORT_HPP

#include <optional>
#include <string>

#include "lieframe/frame_analysis.hpp"

namespace lieframe {

/// Verdict thresholds; all overridable from a thresholds file.
struct Thresholds {
  double frame_ratio = 1e-3;     // |ratio - 1| for Parseval claims
  double frame_slack = 2e-3;     // slack on A <= ratio <= B
  double oracle_residual = 1e-3;
  double gram_residual = 1e-6;
  double tail = 1e-4;
};

struct TestFunctionRow {
  int index = 0;
  double norm_sq = 0.0;
  double frame_sum = 0.0;
  double ratio = 0.0;
  double tail_increment = 0.0;
  int shells = 0;
  bool quad_converged = true;
  double oracle_residual = 0.0;
  bool within_bounds = false;
};

struct FrameReport {
  std::string input;
  std::string window;
  std::uint64_t seed = 0;
  double c_volume = 0.0;
  BoundsResult bounds;
  bool necessity_ok = false;
  std::vector<TestFunctionRow> rows;
  std::optional<double> gram_residual;
  std::string verdict;  // frame | tight-frame | parseval | onb | not-a-frame
  bool all_ok = false;
};

std::string report_to_json(const FrameReport& report);
std::string report_to_csv(const FrameReport& report);

struct SamplingDescription {
  std::string input;
  FrequencyBox box;
  LatticeGammaN lattice;
  CoverGammaH cover;
  Box o_domain;
};

std::string sampling_to_json(const SamplingDescription& plan);

/// Sampled table of a window (grid coordinate columns then the value).
std::string window_to_csv(const Window& window, int samples_per_axis);

Thresholds load_thresholds(const std::string& path);

}  // namespace lieframe

#endif
