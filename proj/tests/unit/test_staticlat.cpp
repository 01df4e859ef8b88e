#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>
#include <random>

#include "floqlat/numerics/eigen.hpp"
#include "floqlat/staticlat/chain.hpp"
#include "floqlat/staticlat/nogo.hpp"
#include "floqlat/staticlat/stagger.hpp"
#include "floqlat/staticlat/static_model.hpp"
#include "oracles.hpp"

using namespace floqlat;
using std::numbers::pi;

namespace {

ModelParams with_jt(double jt, Variant v = Variant::A, std::size_t n = 6) {
  ModelParams p;
  p.jt = jt;
  p.variant = v;
  p.n_minus = n;
  p.n_plus = n;
  return p;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

std::vector<double> eigs(const ComplexMatrix& m) { return hermitian_eig(m).values; }

const double kInvSqrt2 = std::sqrt(0.5);

}  // namespace

TEST_CASE("stagger_bloch algebra") {
  CHECK(max_abs_diff(stagger_bloch(StaggerKind::SinType, 0.0), ComplexMatrix(2, 2)) == 0.0);
  CHECK(max_abs_diff(stagger_bloch(StaggerKind::CosType, pi), ComplexMatrix(2, 2)) < 1e-16);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int i = 0; i < 100; ++i) {
    const double k = u(rng);
    const auto h1 = stagger_bloch(StaggerKind::SinType, k);
    const auto h2 = stagger_bloch(StaggerKind::CosType, k);
    CHECK(hermiticity_error(h1) == 0.0);
    const double s2 = std::pow(std::sin(k / 2), 2), c2 = std::pow(std::cos(k / 2), 2);
    CHECK(max_abs_diff(h1 * h1, Complex{s2, 0} * ComplexMatrix::identity(2)) < 1e-12);
    CHECK(max_abs_diff(h2 * h2, Complex{c2, 0} * ComplexMatrix::identity(2)) < 1e-12);
    CHECK(max_abs_diff(anticommutator(h1, h2), ComplexMatrix(2, 2)) < 1e-12);
    CHECK(std::abs(eigs(h1)[1] - std::abs(std::sin(k / 2))) < 1e-12);
    CHECK(std::abs(eigs(h2)[1] - std::abs(std::cos(k / 2))) < 1e-12);
  }
}

TEST_CASE("stagger_position entries and Fourier blocks") {
  for (std::size_t n : {4u, 6u}) {
    const auto h1 = stagger_position(StaggerKind::SinType, n, Boundary::Periodic);
    const auto h2 = stagger_position(StaggerKind::CosType, n, Boundary::Periodic);
    const std::size_t sites = 2 * n;
    for (std::size_t i = 0; i < sites; ++i) {
      const std::size_t j = (i + 1) % sites;
      CHECK(h2(i, j) == Complex{0.5, 0});
      CHECK(h2(j, i) == Complex{0.5, 0});
      CHECK(h1(i, j) == Complex{i % 2 == 0 ? 0.5 : -0.5, 0});
      CHECK(h1(i, i) == Complex{});
    }
    CHECK(max_abs_diff(anticommutator(h1, h2), ComplexMatrix(sites, sites)) < 1e-12);
    for (double k : brillouin_line(n)) {
      CHECK(max_abs_diff(oracle::fourier_block(h1, 2, k), stagger_bloch(StaggerKind::SinType, k)) <
            1e-14);
      CHECK(max_abs_diff(oracle::fourier_block(h2, 2, k), stagger_bloch(StaggerKind::CosType, k)) <
            1e-14);
    }
  }
  const auto open = stagger_position(StaggerKind::CosType, 3, Boundary::Open);
  CHECK(open(0, 5) == Complex{});
  CHECK(open(5, 0) == Complex{});
  CHECK_THROWS_AS(stagger_position(StaggerKind::SinType, 1, Boundary::Open), std::invalid_argument);
}

TEST_CASE("periodic h1 on 4 cells has the Bloch spectrum") {
  const auto got = eigs(stagger_position(StaggerKind::SinType, 4, Boundary::Periodic));
  std::vector<double> want;
  for (double k : brillouin_line(4)) {
    want.push_back(std::abs(std::sin(k / 2)));
    want.push_back(-std::abs(std::sin(k / 2)));
  }
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);
}

TEST_CASE("time derivatives") {
  const double t = 0.8;
  for (double k0 : {-3.0, -0.4, 0.0, 1.1, 3.9}) {
    const auto d = time_derivative_bloch(TimeScheme::Staggered, k0, t);
    CHECK(hermiticity_error(d) == 0.0);
    const auto e = eigs(d);
    CHECK(std::abs(e[1] - std::abs(std::sin(k0 * t / 2)) / t) < 1e-12);
    CHECK(std::abs(e[0] + e[1]) < 1e-12);
    const auto nv = time_derivative_bloch(TimeScheme::Naive, k0, t);
    CHECK(nv.rows() == 1);
    CHECK(std::abs(nv(0, 0).real() - std::sin(k0 * t) / t) < 1e-14);
  }
  auto pos = stagger_position(StaggerKind::SinType, 5, Boundary::Open);
  pos *= 1.0 / t;
  CHECK(max_abs_diff(staggered_time_derivative(5, t, Boundary::Open), pos) < 1e-15);
}

TEST_CASE("discrete_time_frequencies") {
  const auto s0 = discrete_time_frequencies(0.0, 1.0, TimeScheme::Staggered);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0] == 0.0);
  const auto n0 = discrete_time_frequencies(0.0, 1.0, TimeScheme::Naive);
  REQUIRE(n0.size() == 2);
  CHECK(n0[0] == 0.0);
  CHECK(n0[1] == doctest::Approx(pi));
  // eps' T = -pi/4.
  const double eps_prime = -pi / 4;
  const auto s = discrete_time_frequencies(std::sin(eps_prime), 1.0, TimeScheme::Staggered);
  CHECK(std::abs(s[0] - 2 * eps_prime) < 1e-12);
  // Naive pairs differ by pi/T; staggered gives one solution.
  for (double x : {-0.9, -0.3, 0.2, 0.7}) {
    const auto nv = discrete_time_frequencies(x / 2.0, 2.0, TimeScheme::Naive);
    REQUIRE(nv.size() == 2);
    CHECK(std::abs(wrap_quasienergy(nv[0] + nv[1] - pi / 2.0, 2.0)) < 1e-12);
    for (double k0 : nv) CHECK(std::abs(std::sin(k0 * 2.0) / 2.0 - x / 2.0) < 1e-12);
  }
  CHECK_THROWS_AS(discrete_time_frequencies(1.01, 1.0, TimeScheme::Staggered), std::domain_error);
  CHECK_THROWS_AS(discrete_time_frequencies(-0.6, 2.0, TimeScheme::Naive), std::domain_error);
}

TEST_CASE("chain builders") {
  const WilsonDiracParams wd{-kInvSqrt2, (1 + kInvSqrt2) / 2};
  const SshParams ssh{0.3, -0.8};
  for (ChainParams cp : {ChainParams{wd}, ChainParams{ssh}}) {
    for (double k : {-2.0, 0.0, 0.5, pi}) {
      const auto b = chain_bloch(cp, k);
      CHECK(hermiticity_error(b) == 0.0);
      CHECK(std::abs(b.trace()) < 1e-15);
    }
    const auto ring = chain_build({cp, 6, Boundary::Periodic});
    CHECK(hermiticity_error(ring) < 1e-15);
    for (double k : brillouin_line(6))
      CHECK(max_abs_diff(oracle::fourier_block(ring, 2, k), chain_bloch(cp, k)) < 1e-14);
  }
  for (double k : {-2.0, 0.3, 1.7}) {
    const double wde = std::sqrt(std::pow(wd.r * std::sin(k), 2) +
                                 std::pow(wd.m0 + wd.r * (1 - std::cos(k)), 2));
    CHECK(std::abs(eigs(chain_bloch(wd, k))[1] - wde) < 1e-12);
    CHECK(std::abs(eigs(chain_bloch(ssh, k))[1] - std::abs(ssh.v + ssh.w * std::polar(1.0, k))) <
          1e-12);
  }
  CHECK(std::abs(eigs(chain_bloch(wd, 0.0))[1] - kInvSqrt2) < 1e-12);

  const auto sp = chain_build({ssh, 5, Boundary::Open});
  for (std::size_t i = 0; i < sp.rows(); ++i)
    for (std::size_t j = 0; j < sp.cols(); ++j)
      if ((i + j) % 2 == 0) CHECK(sp(i, j) == Complex{});

  const auto dimer = eigs(chain_build({SshParams{0.0, 1.0}, 4, Boundary::Open}));
  CHECK(std::count_if(dimer.begin(), dimer.end(), [](double e) { return std::abs(e) < 1e-14; }) == 2);

  const auto wd_open = eigs(chain_build({wd, 6, Boundary::Open}));
  CHECK(std::count_if(wd_open.begin(), wd_open.end(),
                      [](double e) { return std::abs(e) <= 1e-2; }) == 2);
  CHECK_THROWS_AS(chain_build({wd, 1, Boundary::Open}), std::invalid_argument);
}

TEST_CASE("variant_params") {
  const auto a = std::get<WilsonDiracParams>(variant_params(Variant::A, -kInvSqrt2));
  CHECK(a.m0 == doctest::Approx(-0.70711).epsilon(1e-5));
  CHECK(a.r == doctest::Approx(0.85355).epsilon(1e-5));
  const auto b = std::get<SshParams>(variant_params(Variant::B, -kInvSqrt2));
  CHECK(b.v == doctest::Approx(0.14645).epsilon(1e-4));
  CHECK(b.w == doctest::Approx(-0.85355).epsilon(1e-5));
  CHECK(chain_has_end_modes(a));
  CHECK(chain_has_end_modes(b));
  CHECK_FALSE(chain_has_end_modes(variant_params(Variant::A, kInvSqrt2)));
  CHECK_FALSE(chain_has_end_modes(variant_params(Variant::B, kInvSqrt2)));
  CHECK_THROWS_AS(variant_params(Variant::A, 1.1), std::domain_error);
}

TEST_CASE("chain_dispersion matches both variants") {
  const auto e0 = chain_dispersion(0.0, -0.3);
  CHECK(e0.first == doctest::Approx(0.3));
  CHECK(e0.second == doctest::Approx(-0.3));
  CHECK(chain_dispersion(pi, 0.4).first == doctest::Approx(1.0));
  CHECK(chain_dispersion(pi / 2, -kInvSqrt2).first == doctest::Approx(std::sqrt(0.75)));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-pi, pi), um(-1, 1);
  for (int i = 0; i < 100; ++i) {
    const double k = u(rng), m = um(rng);
    const auto ea = eigs(chain_bloch(variant_params(Variant::A, m), k));
    const auto eb = eigs(chain_bloch(variant_params(Variant::B, m), k));
    const double e = chain_dispersion(k, m).first;
    CHECK(std::abs(ea[1] - e) < 1e-12);
    CHECK(std::abs(eb[1] - e) < 1e-12);
    CHECK(std::abs(ea[0] - eb[0]) < 1e-12);
  }
}

TEST_CASE("zeta") {
  ModelParams p;
  CHECK(zeta({0, 0}, p) == doctest::Approx(kInvSqrt2).epsilon(1e-14));
  for (double km : {-2.0, 0.0, 1.0, pi}) CHECK(std::abs(zeta({pi, km}, p) - 1.0) < 1e-12);
  CHECK(zeta({0, 0}, with_jt(pi)) < 1e-7);
  p.period = 2.0;
  CHECK(zeta({0, 0}, p) == doctest::Approx(kInvSqrt2 / 2));
}

TEST_CASE("hs_bloch spectrum, degeneracy and sum rule") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-pi, pi), ujt(0.05, 2 * pi - 0.05);
  for (int i = 0; i < 100; ++i) {
    const MomentumPoint k{u(rng), u(rng)};
    const double jt = ujt(rng);
    for (Variant v : {Variant::A, Variant::B}) {
      const ModelParams p = with_jt(jt, v);
      const auto h = hs_bloch(k, p);
      CHECK(hermiticity_error(h) < 1e-15);
      const auto e = eigs(h);
      const double z = zeta(k, p);
      CHECK(std::abs(e[0] + z) < 1e-10);
      CHECK(std::abs(e[1] + z) < 1e-10);
      CHECK(std::abs(e[2] - z) < 1e-10);
      CHECK(std::abs(e[3] - z) < 1e-10);
      CHECK(e[1] - e[0] <= 1e-9);
      CHECK(e[3] - e[2] <= 1e-9);
      const auto th = Complex{p.period, 0} * h;
      const double eab = chain_dispersion(k.k_minus, p.m()).first;
      const double rhs = std::pow(std::sin(k.k_plus / 2), 2) +
                         std::pow(std::cos(k.k_plus / 2), 2) * eab * eab;
      CHECK(max_abs_diff(th * th, Complex{rhs, 0} * ComplexMatrix::identity(4)) < 1e-10);
      const auto swapped = eigs(hs_bloch({k.k_minus, k.k_plus}, p));
      for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(swapped[j] - e[j]) < 1e-10);
    }
  }
  for (double km : {0.0, 1.3}) {
    const auto e = eigs(hs_bloch({pi, km}, ModelParams{}));
    CHECK(std::abs(e[0] + 1) < 1e-12);
    CHECK(std::abs(e[3] - 1) < 1e-12);
  }
  const auto e0 = eigs(hs_bloch({0, 0}, ModelParams{}));
  CHECK(std::abs(e0[3] - 0.70711) < 1e-5);
}

TEST_CASE("open x- strip factorizes through the open chain") {
  for (Variant v : {Variant::A, Variant::B})
    for (double jt : {0.5 * pi, 1.5 * pi}) {
      const ModelParams p = with_jt(jt, v, 6);
      for (double k : brillouin_line(12)) {
        const auto h = hs_strip(OpenDirection::XMinus, k, p);
        CHECK(hermiticity_error(h) < 1e-15);
        const auto e = eigs(h);
        REQUIRE(e.size() == 24);
        const auto closed = strip_closed_form(k, p);
        for (std::size_t j = 0; j < 12; ++j) {
          CHECK(e[2 * j + 1] - e[2 * j] <= 1e-9);
          CHECK(std::abs(e[2 * j] - closed[j]) < 1e-10);
        }
      }
    }
}

TEST_CASE("open x- strip: in-gap branches at +-sin(k/2)/T only for JT > pi") {
  const auto grid = brillouin_line(16);
  for (Variant v : {Variant::A, Variant::B}) {
    const auto s = static_strip_spectrum(grid, with_jt(1.5 * pi, v), OpenDirection::XMinus);
    CHECK(s.flavors == 2);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double target = std::abs(std::sin(grid[i] / 2));
      if (target >= 0.6) continue;  // branch has merged with the bulk
      std::size_t near = 0;
      for (double e : s.values[i])
        if (std::abs(std::abs(e) - target) < 1e-4 && std::abs(e) < kInvSqrt2) ++near;
      CHECK(near == 4);
    }
    const auto t = static_strip_spectrum(grid, with_jt(0.5 * pi, v), OpenDirection::XMinus);
    for (const auto& row : t.values)
      for (double e : row) CHECK(std::abs(e) >= kInvSqrt2 - 1e-12);
  }
}

TEST_CASE("open x+ strip: flat zero band, without exact flavor pairing") {
  const auto grid = brillouin_line(16);
  for (Variant v : {Variant::A, Variant::B}) {
    const auto s = static_strip_spectrum(grid, with_jt(1.5 * pi, v), OpenDirection::XPlus);
    bool unpaired = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& row = s.values[i];
      REQUIRE(row.size() == 24);
      // Measured splitting of the zero pair peaks at 2.1e-5 (k- = 0).
      const auto zeros =
          std::count_if(row.begin(), row.end(), [](double e) { return std::abs(e) < 1e-4; });
      CHECK(zeros >= 2);
      for (std::size_t j = 0; j + 1 < row.size(); j += 2)
        if (row[j + 1] - row[j] > 1e-9) unpaired = true;
    }
    CHECK(unpaired);
  }
}

TEST_CASE("static_pbc_spectrum layout") {
  const auto t = static_pbc_spectrum(4, ModelParams{});
  CHECK(t.points.size() == 16);
  CHECK(t.bands() == 4);
  CHECK_NOTHROW(t.validate());
}

TEST_CASE("Wilson-Dirac no-go") {
  const auto r = wd2p1_nogo(-kInvSqrt2, 1.0);
  CHECK_FALSE(r.compatible);
  CHECK(r.required_abs_m == 3.0);
  CHECK(r.mass_pos == -3.0);
  CHECK(r.r_pos == 1.0);
  CHECK(r.mass_neg == 3.0);
  CHECK(r.r_neg == -1.0);
  CHECK_FALSE(r.violated.empty());
  CHECK_FALSE(wd2p1_nogo(0.0, 1.0).compatible);
  // The derived (M, R) do flatten the k+ = pi line at 1/T and give 3/T at k = 0.
  for (double km : {-2.5, 0.0, 1.0, pi}) {
    CHECK(std::abs(wilson_dirac_2d_energy({pi, km}, r.mass_pos, r.r_pos) - 1.0) < 1e-12);
    CHECK(std::abs(wilson_dirac_2d_energy({pi, km}, r.mass_neg, r.r_neg) - 1.0) < 1e-12);
  }
  CHECK(wilson_dirac_2d_energy({0, 0}, r.mass_pos, r.r_pos) == doctest::Approx(3.0));
  for (int i = 0; i <= 2000; ++i) CHECK_FALSE(wd2p1_nogo(-1.0 + i * 1e-3, 1.0).compatible);
  CHECK_THROWS_AS(wd2p1_nogo(1.5, 1.0), std::domain_error);
}
