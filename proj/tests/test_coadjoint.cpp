#include <doctest.h>

#include <cmath>

#include "lieframe/catalog.hpp"
#include "lieframe/coadjoint.hpp"

using namespace lieframe;

TEST_CASE("beta on ax+b is e^{-a} X*") {
  auto entry = get_entry("axb");
  for (double a : {-1.2, 0.0, 0.8}) {
    Vec beta = beta_eval(*entry.group, entry.lambda, GroupPointH(Vec::Constant(1, a)));
    CHECK(beta[0] == doctest::Approx(std::exp(-a)).epsilon(1e-12));
  }
}

TEST_CASE("beta at the identity is lambda") {
  for (const auto& id : catalog_ids()) {
    auto entry = get_entry(id);
    Vec beta = beta_eval(*entry.group, entry.lambda, entry.group->identity());
    CHECK((beta - entry.lambda).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("beta on the rotation+dilation group is (-sin t, cos t, 0)") {
  auto entry = get_entry("solv_oscillator");
  for (double t : {-0.6, 0.3, 1.1}) {
    Vec beta = beta_eval(*entry.group, entry.lambda, GroupPointH(Vec::Constant(1, t)));
    CHECK(beta[0] == doctest::Approx(-std::sin(t)).epsilon(1e-12));
    CHECK(beta[1] == doctest::Approx(std::cos(t)).epsilon(1e-12));
    CHECK(beta[2] == doctest::Approx(0.0));
  }
}

TEST_CASE("beta cocycle: beta(a b) = Ad(a^{-1})* beta(b)") {
  for (const auto& id : catalog_ids()) {
    auto entry = get_entry(id);
    Rng rng(59);
    const int r = entry.group->r();
    for (int trial = 0; trial < 10; ++trial) {
      Vec a(r), b(r);
      for (int i = 0; i < r; ++i) {
        a[i] = rng.uniform(-0.2, 0.2);
        b[i] = rng.uniform(-0.2, 0.2);
      }
      GroupPointH pa(a), pb(b);
      Vec lhs = beta_eval(*entry.group, entry.lambda, entry.group->product(pa, pb));
      Vec rhs = entry.group->coadjoint_transpose(pa) * beta_eval(*entry.group, entry.lambda, pb);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("coadjoint jacobian closed forms") {
  SUBCASE("ax+b: D = [-1]") {
    auto entry = get_entry("axb");
    Mat d = coadjoint_jacobian(*entry.spec, entry.lambda);
    CHECK(d(0, 0) == doctest::Approx(-1.0));
  }
  SUBCASE("abelian algebra: D = 0") {
    LieSplitSpec spec;
    spec.n_dim = 2;
    spec.r_dim = 1;
    spec.allocate();
    Vec omega = (Vec(2) << 0.3, -0.7).finished();
    CHECK(coadjoint_jacobian(spec, omega).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("rotation+dilation: D = (-1, 0, 0)^T") {
    auto entry = get_entry("solv_oscillator");
    Mat d = coadjoint_jacobian(*entry.spec, entry.lambda);
    CHECK(d(0, 0) == doctest::Approx(-1.0));
    CHECK(d(1, 0) == doctest::Approx(0.0));
    CHECK(d(2, 0) == doctest::Approx(0.0));
  }
}

TEST_CASE("coadjoint jacobian matches finite differences of beta through the chart") {
  // central differences of t -> beta(phi^{-1}(t)) at 0, every catalog entry
  const double h = 1e-6;
  for (const auto& id : catalog_ids()) {
    auto entry = get_entry(id);
    Mat d = coadjoint_jacobian(*entry.spec, entry.lambda);
    const int r = entry.group->r();
    for (int k = 0; k < r; ++k) {
      Vec tp = Vec::Zero(r), tm = Vec::Zero(r);
      tp[k] = h;
      tm[k] = -h;
      Vec col = (beta_eval(*entry.group, entry.lambda, GroupPointH(tp)) -
                 beta_eval(*entry.group, entry.lambda, GroupPointH(tm))) /
                (2 * h);
      CHECK((col - d.col(k)).cwiseAbs().maxCoeff() < 1e-6);
    }
  }
}

TEST_CASE("immersion check passes on ax+b with det 1") {
  auto entry = get_entry("axb");
  auto report = immersion_check(*entry.spec, entry.lambda);
  CHECK(report.passed);
  CHECK(report.gram_det == doctest::Approx(1.0));
  CHECK(report.J == std::vector<int>{0});
}

TEST_CASE("immersion fails on an abelian algebra with det exactly zero") {
  LieSplitSpec spec;
  spec.n_dim = 2;
  spec.r_dim = 1;
  spec.allocate();
  auto report = immersion_check(spec, (Vec(2) << 1.0, 2.0).finished());
  CHECK(!report.passed);
  CHECK(report.gram_det == 0.0);
}

TEST_CASE("immersion passes for the unitriangular block construction") {
  EmbedKSpec k;
  k.n = 3;
  Mat e12 = Mat::Zero(3, 3), e13 = Mat::Zero(3, 3), e23 = Mat::Zero(3, 3);
  e12(0, 1) = 1;
  e13(0, 2) = 1;
  e23(1, 2) = 1;
  k.k_basis = {e12, e13, e23};
  k.nilpotency_step = 2;
  k.solvable = true;
  k.exponential = true;
  auto [spec, lambda] = embed_construction(k);
  CHECK(spec.n_dim == 9);
  CHECK(spec.r_dim == 3);
  CHECK(validate_spec(spec).passed());
  CHECK(immersion_check(spec, lambda).passed);
}

TEST_CASE("index set selection") {
  SUBCASE("single row") {
    Mat d(1, 1);
    d << -1.0;
    CHECK(select_index_set_J(d) == std::vector<int>{0});
  }
  SUBCASE("step-three group picks rows 2 and 3") {
    auto entry = get_entry("onb_step3");
    Mat d = coadjoint_jacobian(*entry.spec, entry.lambda);
    CHECK(select_index_set_J(d) == std::vector<int>{1, 2});
  }
  SUBCASE("rank deficiency throws") {
    Mat d = Mat::Zero(3, 2);
    d(0, 0) = 1.0;
    CHECK_THROWS_AS(select_index_set_J(d), UnsupportedError);
  }
}

TEST_CASE("theta closed forms on the catalog") {
  SUBCASE("rotation+dilation: Theta(t) = -sin t") {
    auto entry = get_entry("solv_oscillator");
    auto chart = make_entry_chart(entry);
    for (double t : {-0.7, -0.2, 0.5})
      CHECK(chart->theta(Vec::Constant(1, t))[0] == doctest::Approx(-std::sin(t)).epsilon(1e-12));
  }
  SUBCASE("shearlet: Theta(t1,t2) = (e^{-t2}, -e^{-t2} t1)") {
    auto entry = get_entry("toeplitz_shearlet");
    auto chart = make_entry_chart(entry);
    Vec t = (Vec(2) << 0.4, -0.8).finished();
    Vec got = chart->theta(t);
    CHECK(got[0] == doctest::Approx(std::exp(0.8)).epsilon(1e-12));
    CHECK(got[1] == doctest::Approx(-std::exp(0.8) * 0.4).epsilon(1e-12));
  }
  SUBCASE("step-three group: Theta(t1,t2) = (t1, t1^2/2 + t2)") {
    auto entry = get_entry("onb_step3");
    auto chart = make_entry_chart(entry);
    Vec t = (Vec(2) << 0.3, -0.1).finished();
    Vec got = chart->theta(t);
    CHECK(got[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(got[1] == doctest::Approx(0.5 * 0.09 - 0.1).epsilon(1e-12));
  }
}

TEST_CASE("theta evaluation outside O raises a domain error") {
  auto entry = get_entry("solv_oscillator");
  auto chart = make_entry_chart(entry);
  CHECK_THROWS_AS(chart->theta(Vec::Constant(1, 2.0)), ChartDomainError);
}

TEST_CASE("theta inverse on the rotation+dilation group is -arcsin") {
  auto entry = get_entry("solv_oscillator");
  auto chart = make_entry_chart(entry);
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    double xi = rng.uniform(-0.69, 0.69);
    Vec t = chart->theta_inverse(Vec::Constant(1, xi));
    CHECK(std::abs(t[0] - (-std::asin(xi))) < 1e-10);
  }
}

TEST_CASE("theta inverse of the center image is the origin") {
  for (const auto& id : catalog_ids()) {
    auto entry = get_entry(id);
    auto chart = make_entry_chart(entry);
    Vec xi0 = chart->theta(Vec::Zero(entry.group->r()));
    CHECK(chart->theta_inverse(xi0).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("theta inverse matches the shearlet closed form") {
  auto entry = get_entry("toeplitz_shearlet");
  auto chart = make_entry_chart(entry);
  Rng rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    Vec t = (Vec(2) << rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9)).finished();
    Vec xi = chart->theta(t);
    Vec back = chart->theta_inverse(xi);
    Vec closed = entry.theta_inv_closed(xi);
    CHECK((back - t).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((closed - t).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("round trip Theta(Theta^{-1}(xi)) = xi on random in-image points") {
  for (const auto& id : catalog_ids()) {
    auto entry = get_entry(id);
    auto chart = make_entry_chart(entry);
    Rng rng(71);
    const int r = entry.group->r();
    for (int trial = 0; trial < 100; ++trial) {
      Vec t(r);
      for (int i = 0; i < r; ++i)
        t[i] = rng.uniform(0.9 * chart->domain().lo[i], 0.9 * chart->domain().hi[i]);
      Vec xi = chart->theta(t);
      Vec back = chart->theta_inverse(xi);
      CHECK((chart->theta(back) - xi).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("weights match the closed forms") {
  SUBCASE("rotation+dilation: W = 1/sqrt(1 - xi^2)") {
    auto entry = get_entry("solv_oscillator");
    auto chart = make_entry_chart(entry);
    for (double xi : {-0.6, -0.2, 0.1, 0.5}) {
      double w = chart->weight(Vec::Constant(1, xi), WeightMethod::Pushforward);
      CHECK(w == doctest::Approx(1.0 / std::sqrt(1 - xi * xi)).epsilon(1e-8));
    }
  }
  SUBCASE("step-three group: W = 1") {
    auto entry = get_entry("onb_step3");
    auto chart = make_entry_chart(entry);
    Vec xi = chart->theta((Vec(2) << 0.2, 0.3).finished());
    CHECK(chart->weight(xi) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("ax+b: W = 1/xi via pushforward with flat Haar") {
    auto entry = get_entry("axb");
    auto chart = make_entry_chart(entry);
    for (double t : {-0.5, 0.0, 0.7}) {
      Vec xi = chart->theta(Vec::Constant(1, t));
      CHECK(chart->weight(xi) == doctest::Approx(1.0 / xi[0]).epsilon(1e-8));
    }
  }
}

TEST_CASE("eigenvalue and pushforward weight methods agree") {
  // exponential solvable entries with log-like charts
  for (const auto& id : {"axb", "heisenberg", "solv_oscillator", "toeplitz_shearlet",
                         "onb_step3", "free_nilpotent_step2"}) {
    auto entry = get_entry(id);
    auto chart = make_entry_chart(entry);
    Rng rng(73);
    const int r = entry.group->r();
    for (int trial = 0; trial < 10; ++trial) {
      Vec t(r);
      for (int i = 0; i < r; ++i)
        t[i] = rng.uniform(0.8 * chart->domain().lo[i], 0.8 * chart->domain().hi[i]);
      Vec xi = chart->theta(t);
      double we = chart->weight(xi, WeightMethod::Eigenvalue);
      double wp = chart->weight(xi, WeightMethod::Pushforward);
      CHECK(we == doctest::Approx(wp).epsilon(1e-6));
    }
  }
}

TEST_CASE("eigenvalue weight is nontrivial on a nonabelian exponential h") {
  // block construction over the ax+b matrix group: h has eigenvalue pairs
  // {0, -a} so the eigenvalue factors differ from 1 away from the identity
  EmbedKSpec k;
  k.n = 2;
  Mat a1(2, 2), a2(2, 2);
  a1 << 1, 0, 0, 0;
  a2 << 0, 1, 0, 0;
  k.k_basis = {a1, a2};
  k.solvable = true;
  k.exponential = true;
  auto [spec, lambda] = embed_construction(k);
  auto spec_ptr = std::make_shared<LieSplitSpec>(spec);
  auto group = std::make_shared<HGroup>(spec_ptr, ChartKind::Log);
  auto report = immersion_check(*spec_ptr, lambda);
  REQUIRE(report.passed);
  auto chart = std::make_shared<ThetaChart>(
      select_neighborhood_O(group, lambda, report.J, Vec::Constant(2, 0.4)));
  Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    Vec t = (Vec(2) << rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)).finished();
    Vec xi = chart->theta(t);
    double we = chart->weight(xi, WeightMethod::Eigenvalue);
    double wp = chart->weight(xi, WeightMethod::Pushforward);
    CHECK(we == doctest::Approx(wp).epsilon(1e-6));
  }
}

TEST_CASE("weight positivity on the validation grid") {
  for (const auto& id : catalog_ids()) {
    auto entry = get_entry(id);
    auto chart = make_entry_chart(entry);
    const int r = entry.group->r();
    const int g = 9;
    std::size_t total = 1;
    for (int k = 0; k < r; ++k) total *= g;
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rem = flat;
      Vec t(r);
      for (int k = 0; k < r; ++k) {
        int ik = static_cast<int>(rem % g);
        rem /= g;
        t[k] = chart->domain().lo[k] + (chart->domain().hi[k] - chart->domain().lo[k]) *
                                           (ik + 0.5) / g;
      }
      CHECK(chart->weight_at_point(t) > 0.0);
    }
  }
}

TEST_CASE("neighborhood selection accepts the catalog boxes unshrunk") {
  SUBCASE("rotation+dilation keeps (-pi/4, pi/4)") {
    auto entry = get_entry("solv_oscillator");
    auto chart = make_entry_chart(entry);
    CHECK(chart->domain().hi[0] == doctest::Approx(3.14159265358979323846 / 4.0));
    CHECK(chart->diagnostics().halvings == 0);
  }
  SUBCASE("shearlet boxes pass at any radius (global diffeomorphism)") {
    auto entry = get_entry("toeplitz_shearlet");
    auto chart = make_entry_chart(entry, Vec::Constant(2, 2.0));
    CHECK(chart->diagnostics().halvings == 0);
  }
  SUBCASE("step-three group keeps [-1/2, 1/2)^2") {
    auto entry = get_entry("onb_step3");
    auto chart = make_entry_chart(entry);
    CHECK(chart->domain().hi[1] == doctest::Approx(0.5));
    CHECK(chart->diagnostics().halvings == 0);
  }
}

TEST_CASE("neighborhood selection shrinks past a fold") {
  // Theta = -sin t: at radius pi the grid points 0 and pi collide in the
  // image, and at radius pi/2 the chart Jacobian degenerates at the edge;
  // both trigger halving down to pi/4.
  auto entry = get_entry("solv_oscillator");
  const double pi = 3.14159265358979323846;
  auto chart = make_entry_chart(entry, Vec::Constant(1, pi));
  CHECK(chart->diagnostics().halvings == 2);
  CHECK(chart->domain().hi[0] == doctest::Approx(pi / 4.0));
}
