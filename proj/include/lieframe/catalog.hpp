#ifndef LIEFRAME_CATALOG_HPP
#define LIEFRAME_CATALOG_HPP

#include <optional>

#include "lieframe/coadjoint.hpp"

namespace lieframe {

/// Pinned sampling data for entries where the frequency set and lattices are
/// known exactly (e.g. when the chart image itself tiles under the lattice).
struct PlanOverride {
  std::optional<double> varsigma;
  bool image_is_C = false;
  std::optional<double> c_volume;
  std::optional<Vec> gamma_n_spacing;
  std::optional<Vec> gamma_h_step;
  // false when the pinned data assumes a window placement the batch driver
  // does not reproduce (e.g. an off-center support)
  bool cli_applicable = true;
};

/// A worked group: split spec, functional, chart data, and closed forms used
/// as oracles by the verification suites.
struct CatalogEntry {
  std::string id;
  std::string description;
  std::shared_ptr<const LieSplitSpec> spec;
  std::shared_ptr<const HGroup> group;
  Vec lambda;
  Vec default_o_radii;
  std::vector<int> index_set;  // pinned ordered J (0-based); empty -> automatic

  std::function<Vec(const Vec&)> beta_closed;       // beta at chart coords
  std::function<Vec(const Vec&)> theta_closed;      // Theta(t)
  std::function<Vec(const Vec&)> theta_inv_closed;  // Theta^{-1}(xi)
  std::function<double(const Vec&)> weight_closed;  // W(xi)

  std::optional<PlanOverride> plan;
  bool onb_recipe = false;
  bool parseval_recipe = false;
};

std::vector<std::string> catalog_ids();
CatalogEntry get_entry(const std::string& id);

/// Chart for an entry on the given (or default) neighborhood radii, using the
/// pinned index set when present.
std::shared_ptr<const ThetaChart> make_entry_chart(const CatalogEntry& entry,
                                                   std::optional<Vec> o_radii = std::nullopt,
                                                   int grid_per_axis = 17);

/// Data for the block-matrix construction: a connected matrix subgroup
/// K <= GL(n,R) given by a Lie algebra basis.
struct EmbedKSpec {
  int n = 0;
  std::vector<Mat> k_basis;
  std::optional<int> nilpotency_step;
  bool solvable = false;
  bool exponential = false;
};

/// G = N x| H with N = gl(n,R) as the upper-right block and H = K embedded
/// diagonally; lambda is the trace pairing against the identity, for which
/// beta(h) = (h^{-1})^T and the immersion always holds.
std::pair<LieSplitSpec, Vec> embed_construction(const EmbedKSpec& k);

}  // namespace lieframe

#endif
