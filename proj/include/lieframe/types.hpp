#ifndef LIEFRAME_TYPES_HPP
#define LIEFRAME_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieframe {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Cplx = std::complex<double>;

/// Axis-aligned box centered at the origin unless lo/hi given explicitly.
struct Box {
  Vec lo;
  Vec hi;

  Box() = default;
  Box(Vec lo_, Vec hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {}

  /// Symmetric box [-r_k, r_k] per axis.
  static Box centered(const Vec& radii) { return Box(-radii, radii); }

  int dim() const { return static_cast<int>(lo.size()); }

  bool contains(const Vec& x, double pad = 0.0) const {
    for (int k = 0; k < dim(); ++k)
      if (x[k] < lo[k] - pad || x[k] > hi[k] + pad) return false;
    return true;
  }

  double volume() const {
    double v = 1.0;
    for (int k = 0; k < dim(); ++k) v *= hi[k] - lo[k];
    return v;
  }

  Vec center() const { return 0.5 * (lo + hi); }
  Vec radii() const { return 0.5 * (hi - lo); }
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ChartDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ChartDegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Newton-type iteration failed; carries the last residual seen.
struct ConvergenceError : std::runtime_error {
  double last_residual;
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), last_residual(residual) {}
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic 64-bit generator (splitmix-style); seeded runs do not
/// depend on libstdc++ distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    state_ = seed + 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < 4; ++i) next_u64();
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace lieframe

#endif
