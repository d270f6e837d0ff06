#include "lieframe/frame_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>

#include "lieframe/quadrature.hpp"

namespace lieframe {

namespace {

constexpr double kTwoPi = 6.283185307179586476925;

/// Cover elements that can contribute to <g(ell^{-1} .), f>: on abelian H the
/// condition is ell in supp f - supp g, axis by axis. Otherwise keep all.
std::vector<GroupPointH> prune_cover(const HGroup& group, const CoverGammaH& cover,
                                     const Box& g_support, const Box& f_support) {
  if (!group.h_abelian()) return cover.elements;
  std::vector<GroupPointH> kept;
  for (const auto& ell : cover.elements) {
    bool ok = true;
    for (int k = 0; k < group.r() && ok; ++k) {
      double lo = f_support.lo[k] - g_support.hi[k];
      double hi = f_support.hi[k] - g_support.lo[k];
      if (ell.coords[k] < lo - 1e-12 || ell.coords[k] > hi + 1e-12) ok = false;
    }
    if (ok) kept.push_back(ell);
  }
  return kept;
}

/// Per-axis breakpoints of t -> g(coords(ell^{-1} t)) inside the f-box:
/// g's breaks and support edges shifted by ell (abelian charts only).
std::vector<std::vector<double>> merged_breakpoints(const HGroup& group, const Window& g,
                                                    const Window& f, const GroupPointH& ell) {
  std::vector<std::vector<double>> breaks = f.breakpoints;
  breaks.resize(f.support.dim());
  if (!group.h_abelian()) return breaks;
  for (int k = 0; k < f.support.dim(); ++k) {
    if (k < static_cast<int>(g.breakpoints.size()))
      for (double b : g.breakpoints[k]) breaks[k].push_back(b + ell.coords[k]);
    breaks[k].push_back(g.support.lo[k] + ell.coords[k]);
    breaks[k].push_back(g.support.hi[k] + ell.coords[k]);
  }
  return breaks;
}

/// Quadrature nodes over supp f with the ell-dependent real factor
/// g(ell^{-1} t) f(t) rho(t) w_i and Theta(t) cached per node. For the shell
/// sweeps the unit phases exp(-2 pi i Theta_k(t) spacing_k) are tabulated as
/// integer powers per node, so one lattice coefficient costs one complex
/// multiply-add per node instead of a trig call.
struct CoefficientBlock {
  std::vector<double> base;
  std::vector<Vec> theta;
  int max_power = 0;
  int axes = 0;
  // powers[axis][(k+R) * nodes + i] = exp(-2 pi i theta_axis spacing_axis k);
  // power-major layout keeps the per-coefficient node loop contiguous
  std::vector<std::vector<Cplx>> powers;

  void tabulate(const Vec& spacing, int max_shell) {
    max_power = max_shell;
    axes = static_cast<int>(spacing.size());
    const std::size_t nodes = base.size();
    powers.assign(axes, {});
    for (int a = 0; a < axes; ++a) {
      powers[a].resize((2 * static_cast<std::size_t>(max_power) + 1) * nodes);
      Cplx* data = powers[a].data();
      std::vector<Cplx> unit(nodes);
      for (std::size_t i = 0; i < nodes; ++i) {
        double phase = -kTwoPi * theta[i][a] * spacing[a];
        unit[i] = Cplx(std::cos(phase), std::sin(phase));
        data[static_cast<std::size_t>(max_power) * nodes + i] = 1.0;
      }
      for (int k = 1; k <= max_power; ++k) {
        const Cplx* prev = data + (static_cast<std::size_t>(max_power) + k - 1) * nodes;
        Cplx* pos = data + (static_cast<std::size_t>(max_power) + k) * nodes;
        Cplx* neg = data + (static_cast<std::size_t>(max_power) - k) * nodes;
        for (std::size_t i = 0; i < nodes; ++i) {
          pos[i] = prev[i] * unit[i];
          neg[i] = std::conj(pos[i]);
        }
      }
    }
  }
};

CoefficientBlock make_block(const ThetaChart& chart, const Window& g, const Window& f,
                            const GroupPointH& ell, int order) {
  const HGroup& group = chart.group();
  GroupPointH ell_inv = group.inverse(ell);
  // on abelian H the integrand lives on supp f intersected with ell + supp g
  Box domain = f.support;
  if (group.h_abelian()) {
    for (int k = 0; k < domain.dim(); ++k) {
      domain.lo[k] = std::max(domain.lo[k], g.support.lo[k] + ell.coords[k]);
      domain.hi[k] = std::min(domain.hi[k], g.support.hi[k] + ell.coords[k]);
      if (domain.hi[k] <= domain.lo[k]) return {};
    }
  }
  TensorGrid grid = tensor_grid(domain, merged_breakpoints(group, g, f, ell), order);
  CoefficientBlock block;
  block.base.reserve(grid.points.size());
  block.theta.reserve(grid.points.size());
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const Vec& t = grid.points[i];
    double fv = f(t);
    if (fv == 0.0) continue;
    double gv = g(group.product(ell_inv, GroupPointH(t)).coords);
    if (gv == 0.0) continue;
    double rho = group.haar_density(t);
    block.base.push_back(grid.weights[i] * gv * fv * rho);
    block.theta.push_back(chart.theta_unchecked(t));
  }
  return block;
}

Cplx block_coefficient(const CoefficientBlock& block, const Vec& freq) {
  Cplx sum = 0.0;
  for (std::size_t i = 0; i < block.base.size(); ++i) {
    double phase = -kTwoPi * block.theta[i].dot(freq);
    sum += block.base[i] * Cplx(std::cos(phase), std::sin(phase));
  }
  return sum;
}

Cplx block_coefficient_indexed(const CoefficientBlock& block, const std::vector<int>& kappa) {
  const std::size_t nodes = block.base.size();
  const Cplx* row0 = block.powers[0].data() +
                     static_cast<std::size_t>(kappa[0] + block.max_power) * nodes;
  double re = 0.0, im = 0.0;
  if (block.axes == 1) {
    for (std::size_t i = 0; i < nodes; ++i) {
      re += block.base[i] * row0[i].real();
      im += block.base[i] * row0[i].imag();
    }
    return {re, im};
  }
  const Cplx* row1 = block.powers[1].data() +
                     static_cast<std::size_t>(kappa[1] + block.max_power) * nodes;
  if (block.axes == 2) {
    for (std::size_t i = 0; i < nodes; ++i) {
      double pr = row0[i].real() * row1[i].real() - row0[i].imag() * row1[i].imag();
      double pi = row0[i].real() * row1[i].imag() + row0[i].imag() * row1[i].real();
      re += block.base[i] * pr;
      im += block.base[i] * pi;
    }
    return {re, im};
  }
  Cplx sum = 0.0;
  for (std::size_t i = 0; i < nodes; ++i) {
    Cplx p = row0[i] * row1[i];
    for (int a = 2; a < block.axes; ++a)
      p *= block.powers[a][(static_cast<std::size_t>(kappa[a]) + block.max_power) * nodes + i];
    sum += block.base[i] * p;
  }
  return sum;
}

struct ShellSumResult {
  double value = 0.0;
  int shells_used = 0;
  double tail_increment = 0.0;
  bool tail_converged = false;
};

/// Deterministic parallel map-reduce over a shell: fixed chunks, partial sums
/// accumulated in chunk order.
double shell_increment(const std::vector<CoefficientBlock>& blocks,
                       const std::vector<std::vector<int>>& indices) {
  const std::size_t chunk = 64;
  std::vector<std::future<double>> futures;
  for (std::size_t start = 0; start < indices.size(); start += chunk) {
    std::size_t stop = std::min(indices.size(), start + chunk);
    futures.push_back(std::async(std::launch::async | std::launch::deferred, [&, start, stop] {
      double part = 0.0;
      for (std::size_t i = start; i < stop; ++i)
        for (const auto& block : blocks) part += std::norm(block_coefficient_indexed(block, indices[i]));
      return part;
    }));
  }
  double inc = 0.0;
  for (auto& fut : futures) inc += fut.get();
  return inc;
}

ShellSumResult shell_sum(const std::vector<CoefficientBlock>& blocks,
                         const LatticeGammaN& lattice, const TruncationConfig& trunc) {
  ShellSumResult out;
  double total = 0.0;
  for (int s = 0; s <= trunc.max_shell; ++s) {
    double inc = shell_increment(blocks, lattice.shell_indices(s));
    total += inc;
    out.shells_used = s;
    double prev_increment = out.tail_increment;
    out.tail_increment = inc / std::max(total, 1e-300);
    if (s >= 2 && out.tail_increment < trunc.tail_rtol && prev_increment < trunc.tail_rtol) {
      out.tail_converged = true;
      break;
    }
  }
  out.value = total;
  return out;
}

}  // namespace

Cplx rep_apply_modulation(const ThetaChart& chart, const Vec& x_in_n, const Window& f,
                          const GroupPointH& h) {
  double fv = f(h.coords);
  if (fv == 0.0) return 0.0;
  Vec beta = beta_eval(chart.group(), chart.lambda(), h);
  double phase = kTwoPi * beta.dot(x_in_n);
  return fv * Cplx(std::cos(phase), std::sin(phase));
}

double rep_apply_translation(const ThetaChart& chart, const GroupPointH& z, const Window& f,
                             const GroupPointH& h) {
  const HGroup& group = chart.group();
  return f(group.product(group.inverse(z), h).coords);
}

Cplx frame_element_value(const ThetaChart& chart, const Window& f, const LatticeGammaN& lattice,
                         const FrameIndex& gamma, const GroupPointH& h) {
  const HGroup& group = chart.group();
  GroupPointH lh = group.product(gamma.ell, h);
  double fv = f(lh.coords);
  if (fv == 0.0) return 0.0;
  Vec y = lattice.frequency(gamma.kappa);
  double phase = kTwoPi * chart.theta_unchecked(lh.coords).dot(y);
  return fv * Cplx(std::cos(phase), std::sin(phase));
}

Cplx frame_coefficient(const ThetaChart& chart, const Window& g, const Window& f,
                       const FrameIndex& gamma, const LatticeGammaN& lattice,
                       const QuadConfig& quad, bool* converged) {
  Vec y = lattice.frequency(gamma.kappa);
  int order = quad.base_order;
  Cplx prev = block_coefficient(make_block(chart, g, f, gamma.ell, order), y);
  for (int pass = 0; pass < quad.max_doublings; ++pass) {
    order *= 2;
    Cplx next = block_coefficient(make_block(chart, g, f, gamma.ell, order), y);
    double scale = std::max({std::abs(prev), std::abs(next), 1e-14});
    if (std::abs(next - prev) / scale < quad.rtol) {
      if (converged) *converged = true;
      return next;
    }
    prev = next;
  }
  if (converged) *converged = false;
  return prev;
}

double periodization_F(const ThetaChart& chart, const Window& f, const CoverGammaH& cover,
                       const GroupPointH& h) {
  const HGroup& group = chart.group();
  double sum = 0.0;
  for (const auto& ell : cover.elements) {
    GroupPointH lh = group.product(ell, h);
    double fv = f(lh.coords);
    if (fv == 0.0) continue;
    sum += fv * fv * chart.weight_at_point(lh.coords);
  }
  return sum;
}

double window_norm_sq(const ThetaChart& chart, const Window& f, const QuadConfig& quad) {
  if (f.is_zero()) return 0.0;
  const HGroup& group = chart.group();
  auto integrand = [&](const Vec& t) {
    double v = f(t);
    return v == 0.0 ? 0.0 : v * v * group.haar_density(t);
  };
  return integrate_box_adaptive(integrand, f.support, f.breakpoints, quad.base_order, quad.rtol,
                                quad.max_doublings);
}

BoundsResult estimate_frame_bounds(const ThetaChart& chart, const Window& f,
                                   const CoverGammaH& cover, double c_volume,
                                   const Box& fundamental, int grid_density) {
  BoundsResult out;
  const int d = fundamental.dim();
  auto extremes = [&](int g, double* lo, double* hi) {
    std::size_t total = 1;
    for (int k = 0; k < d; ++k) total *= g;
    double mn = std::numeric_limits<double>::infinity();
    double mx = -mn;
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rem = flat;
      Vec t(d);
      for (int k = 0; k < d; ++k) {
        int ik = static_cast<int>(rem % g);
        rem /= g;
        t[k] = fundamental.lo[k] + (fundamental.hi[k] - fundamental.lo[k]) * (ik + 0.5) / g;
      }
      double v = periodization_F(chart, f, cover, GroupPointH(t));
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    *lo = mn;
    *hi = mx;
  };

  int g = grid_density;
  double mn, mx;
  extremes(g, &mn, &mx);
  out.grid_change = std::numeric_limits<double>::infinity();
  const std::size_t budget = 400000;
  while (true) {
    std::size_t next_total = 1;
    for (int k = 0; k < d; ++k) next_total *= 2 * g;
    if (next_total > budget) break;
    double mn2, mx2;
    extremes(2 * g, &mn2, &mx2);
    out.grid_change = std::max(std::abs(mn2 - mn), std::abs(mx2 - mx)) / std::max(1.0, mx2);
    mn = mn2;
    mx = mx2;
    g *= 2;
    if (out.grid_change < 1e-6) break;
  }
  out.m_hat = mn;
  out.M_hat = mx;
  out.grid_points_per_axis = g;
  out.A = mn * c_volume;
  out.B = mx * c_volume;
  out.is_frame = mn > 1e-12;
  out.tight = std::abs(mx - mn) <= 1e-9 * std::max(1.0, std::abs(mx));
  out.f_norm_sq = window_norm_sq(chart, f);
  out.onb_candidate = out.tight && std::abs(out.A - 1.0) < 1e-6 && std::abs(out.B - 1.0) < 1e-6 &&
                      std::abs(out.f_norm_sq - 1.0) < 1e-6;
  return out;
}

FrameSumResult frame_sum(const ThetaChart& chart, const Window& g, const Window& f,
                         const CoverGammaH& cover, const LatticeGammaN& lattice,
                         const QuadConfig& quad, const TruncationConfig& trunc) {
  FrameSumResult out;
  if (g.is_zero() || f.is_zero()) {
    out.tail_converged = true;
    return out;
  }
  std::vector<GroupPointH> ells = prune_cover(chart.group(), cover, g.support, f.support);
  out.cover_terms = static_cast<int>(ells.size());
  if (ells.empty()) {
    out.tail_converged = true;
    return out;
  }

  // A coarse probe determines the truncation horizon first; the accurate
  // passes then sweep block by block with bounded phase-power tables.
  int horizon = trunc.max_shell;
  {
    // coarse nodes (no panel splitting) keep the probe tables small; only the
    // decay profile matters here, not coefficient accuracy
    const HGroup& group = chart.group();
    std::vector<CoefficientBlock> probe;
    std::vector<GroupPointH> kept;
    for (const auto& ell : ells) {
      Box domain = f.support;
      if (group.h_abelian()) {
        bool empty = false;
        for (int k = 0; k < domain.dim(); ++k) {
          domain.lo[k] = std::max(domain.lo[k], g.support.lo[k] + ell.coords[k]);
          domain.hi[k] = std::min(domain.hi[k], g.support.hi[k] + ell.coords[k]);
          if (domain.hi[k] <= domain.lo[k]) empty = true;
        }
        if (empty) continue;
      }
      TensorGrid grid = tensor_grid(domain, {}, 16);
      CoefficientBlock block;
      GroupPointH ell_inv = group.inverse(ell);
      for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const Vec& t = grid.points[i];
        double fv = f(t);
        if (fv == 0.0) continue;
        double gv = g(group.product(ell_inv, GroupPointH(t)).coords);
        if (gv == 0.0) continue;
        block.base.push_back(grid.weights[i] * gv * fv * group.haar_density(t));
        block.theta.push_back(chart.theta_unchecked(t));
      }
      block.tabulate(lattice.spacing, trunc.max_shell);
      probe.push_back(std::move(block));
      // support pruning for covers without the abelian interval arithmetic:
      // a block whose probe grid never meets supp g cannot contribute
      if (!group.h_abelian() && probe.back().base.empty()) probe.pop_back();
      if (!group.h_abelian() && (probe.empty() || probe.back().base.empty())) continue;
      kept.push_back(ell);
    }
    if (!group.h_abelian() && !kept.empty()) {
      ells = kept;
      out.cover_terms = static_cast<int>(ells.size());
    }
    ShellSumResult probed = shell_sum(probe, lattice, trunc);
    if (probed.tail_converged)
      horizon = std::min(trunc.max_shell, probed.shells_used + 3);
  }

  auto run_at_order = [&](int order) {
    ShellSumResult res;
    std::vector<double> inc(static_cast<std::size_t>(horizon) + 1, 0.0);
    for (const auto& ell : ells) {
      CoefficientBlock block = make_block(chart, g, f, ell, order);
      block.tabulate(lattice.spacing, horizon);
      for (int s = 0; s <= horizon; ++s)
        for (const auto& idx : lattice.shell_indices(s))
          inc[static_cast<std::size_t>(s)] += std::norm(block_coefficient_indexed(block, idx));
    }
    double total = 0.0;
    for (int s = 0; s <= horizon; ++s) {
      double prev_increment = res.tail_increment;
      total += inc[static_cast<std::size_t>(s)];
      res.shells_used = s;
      res.tail_increment = inc[static_cast<std::size_t>(s)] / std::max(total, 1e-300);
      if (s >= 2 && res.tail_increment < trunc.tail_rtol && prev_increment < trunc.tail_rtol) {
        res.tail_converged = true;
        break;
      }
    }
    res.value = total;
    return res;
  };

  int order = quad.base_order;
  ShellSumResult prev = run_at_order(order);
  ShellSumResult accepted = prev;
  out.quad_converged = false;
  for (int pass = 0; pass < quad.max_doublings; ++pass) {
    order *= 2;
    ShellSumResult next = run_at_order(order);
    accepted = next;
    double scale = std::max({prev.value, next.value, 1e-300});
    if (std::abs(next.value - prev.value) / scale < quad.rtol) {
      out.quad_converged = true;
      break;
    }
    prev = next;
  }
  out.value = accepted.value;
  out.shells_used = accepted.shells_used;
  out.tail_increment = accepted.tail_increment;
  out.tail_converged = accepted.tail_converged;
  return out;
}

OracleResult oracle_identity_check(const ThetaChart& chart, const Window& g, const Window& f,
                                   const CoverGammaH& cover, const LatticeGammaN& lattice,
                                   double c_volume, const QuadConfig& quad,
                                   const TruncationConfig& trunc,
                                   const FrameSumResult* precomputed_sum) {
  OracleResult out;
  out.sum = precomputed_sum ? *precomputed_sum : frame_sum(chart, g, f, cover, lattice, quad, trunc);
  out.lhs = out.sum.value;
  if (g.is_zero() || f.is_zero()) {
    out.rhs = 0.0;
    out.residual = 0.0;
    return out;
  }
  const HGroup& group = chart.group();
  // breakpoints of F under the g-integral: translated f-breaks on abelian H
  std::vector<std::vector<double>> breaks = g.breakpoints;
  breaks.resize(g.support.dim());
  if (group.h_abelian()) {
    std::vector<GroupPointH> ells = prune_cover(group, cover, g.support, f.support);
    for (int k = 0; k < g.support.dim(); ++k)
      for (const auto& ell : ells) {
        if (k < static_cast<int>(f.breakpoints.size()))
          for (double b : f.breakpoints[k]) breaks[k].push_back(b - ell.coords[k]);
        breaks[k].push_back(f.support.lo[k] - ell.coords[k]);
        breaks[k].push_back(f.support.hi[k] - ell.coords[k]);
      }
  }
  auto integrand = [&](const Vec& t) {
    double gv = g(t);
    if (gv == 0.0) return 0.0;
    GroupPointH h(t);
    return gv * gv * periodization_F(chart, f, cover, h) * group.haar_density(t);
  };
  out.rhs = c_volume *
            integrate_box_adaptive(integrand, g.support, breaks, quad.base_order, quad.rtol,
                                   quad.max_doublings);
  out.residual = std::abs(out.lhs - out.rhs) / std::max({std::abs(out.lhs), std::abs(out.rhs), 1e-300});
  return out;
}

double verify_onb_gram_residual(const ThetaChart& chart, const Window& f,
                                const std::vector<GroupPointH>& ells,
                                const std::vector<std::vector<int>>& kappas,
                                const LatticeGammaN& lattice, const QuadConfig& quad) {
  const HGroup& group = chart.group();
  if (!group.h_abelian())
    throw UnsupportedError("verify_onb_gram_residual: patch Gram needs abelian H");
  const int d = group.r();

  struct Key {
    std::size_t e1, e2;
    std::vector<int> dk;
    bool operator<(const Key& other) const {
      return std::tie(e1, e2, dk) < std::tie(other.e1, other.e2, other.dk);
    }
  };
  std::map<Key, Cplx> cache;

  auto pair_inner = [&](std::size_t i1, const std::vector<int>& k1, std::size_t i2,
                        const std::vector<int>& k2) -> Cplx {
    const Vec& l1 = ells[i1].coords;
    const Vec& l2 = ells[i2].coords;
    // overlap of the translated supports
    Box overlap{Vec(d), Vec(d)};
    for (int k = 0; k < d; ++k) {
      overlap.lo[k] = std::max(f.support.lo[k] - l1[k], f.support.lo[k] - l2[k]);
      overlap.hi[k] = std::min(f.support.hi[k] - l1[k], f.support.hi[k] - l2[k]);
      if (overlap.hi[k] - overlap.lo[k] < 1e-12) return 0.0;
    }
    std::vector<int> dk(d);
    for (int k = 0; k < d; ++k) dk[k] = k1[k] - k2[k];
    const bool same_ell = i1 == i2;
    if (same_ell) {
      // phase difference depends only on k1 - k2
      Key key{i1, i2, dk};
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
    }
    Vec y1 = lattice.frequency(k1);
    Vec y2 = lattice.frequency(k2);
    std::vector<std::vector<double>> breaks(d);
    for (int k = 0; k < d; ++k) {
      if (k < static_cast<int>(f.breakpoints.size()))
        for (double b : f.breakpoints[k]) {
          breaks[k].push_back(b - l1[k]);
          breaks[k].push_back(b - l2[k]);
        }
    }
    auto integrand = [&](const Vec& t) -> Cplx {
      Vec t1 = t + l1;
      Vec t2 = t + l2;
      double v = f(t1) * f(t2);
      if (v == 0.0) return 0.0;
      double phase = kTwoPi * (chart.theta_unchecked(t1).dot(y1) - chart.theta_unchecked(t2).dot(y2));
      return v * group.haar_density(t) * Cplx(std::cos(phase), std::sin(phase));
    };
    Cplx prev = integrate_box_complex(integrand, overlap, breaks, quad.base_order);
    Cplx value = prev;
    for (int pass = 0; pass < quad.max_doublings; ++pass) {
      Cplx next = integrate_box_complex(integrand, overlap, breaks, quad.base_order << (pass + 1));
      value = next;
      if (std::abs(next - prev) < quad.rtol * std::max(1.0, std::abs(next))) break;
      prev = next;
    }
    if (same_ell) cache[Key{i1, i2, dk}] = value;
    return value;
  };

  double residual = 0.0;
  const std::size_t ne = ells.size(), nk = kappas.size();
  for (std::size_t a = 0; a < ne * nk; ++a) {
    std::size_t ia = a / nk, ka = a % nk;
    for (std::size_t b = a; b < ne * nk; ++b) {
      std::size_t ib = b / nk, kb = b % nk;
      Cplx gram = pair_inner(ia, kappas[ka], ib, kappas[kb]);
      double target = (a == b) ? 1.0 : 0.0;
      residual = std::max(residual, std::abs(gram - target));
    }
  }
  return residual;
}

bool necessity_check(double A, double B, double m_hat, double M_hat, double c_volume, double tol) {
  if (c_volume <= 0.0) return false;
  return A / c_volume <= m_hat + tol && M_hat <= B / c_volume + tol;
}

Window random_bump_combination(Rng& rng, const Box& region, int max_bumps, int order) {
  const int d = region.dim();
  const int count = rng.uniform_int(1, max_bumps);
  struct Bump {
    Vec center;
    double radius;
    double amplitude;
    PartitionWindow1d profile;
  };
  std::vector<Bump> bumps;
  Vec lo = region.hi, hi = region.lo;
  for (int i = 0; i < count; ++i) {
    Bump b;
    double min_radius = 0.35 * region.radii().minCoeff();
    double max_radius = 0.55 * region.radii().minCoeff();
    b.radius = rng.uniform(min_radius, max_radius);
    b.center = Vec(d);
    for (int k = 0; k < d; ++k) {
      double margin = region.radii()[k] - b.radius;
      b.center[k] = region.center()[k] + rng.uniform(-margin, margin);
    }
    b.amplitude = rng.uniform(0.3, 1.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    // epsilon giving the profile a support radius of exactly b.radius
    double eps = (order + 1) / (static_cast<double>(order) * b.radius);
    b.profile = partition_window_1d(eps, order);
    for (int k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], b.center[k] - b.radius);
      hi[k] = std::max(hi[k], b.center[k] + b.radius);
    }
    bumps.push_back(std::move(b));
  }
  Window w;
  w.kind = Window::Kind::Custom;
  w.order = order;
  w.support = Box(lo, hi);
  w.breakpoints.assign(d, {});
  for (const auto& b : bumps)
    for (int k = 0; k < d; ++k) {
      for (double brk : b.profile.breakpoints) w.breakpoints[k].push_back(b.center[k] + brk);
      w.breakpoints[k].push_back(b.center[k] - b.radius);
      w.breakpoints[k].push_back(b.center[k] + b.radius);
    }
  w.eval = [bumps](const Vec& t) {
    double sum = 0.0;
    for (const auto& b : bumps) {
      double v = b.amplitude;
      for (int k = 0; k < t.size(); ++k) {
        v *= b.profile.eval(t[k] - b.center[k]);
        if (v == 0.0) break;
      }
      sum += v;
    }
    return sum;
  };
  return w;
}

}  // namespace lieframe
