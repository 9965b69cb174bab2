#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <Eigen/Eigenvalues>

#include "lrferm/model.hpp"

using namespace lrferm;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("standard parameter point") {
  const auto p = KitaevParams::standard(10, 0.5, 1.5);
  CHECK(p.delta == 1.0);
  CHECK(p.t == 0.5);
  CHECK(p.delta == 2 * p.t);
  CHECK(p.boundary == Boundary::AntiPeriodic);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_kitaev(KitaevParams::standard(1, 0.0, 1.0)), InvalidArgument);
  CHECK_THROWS_AS(build_kitaev(KitaevParams::standard(4, 0.0, 0.0)), InvalidArgument);
  CHECK_THROWS_AS(build_kitaev(KitaevParams::standard(4, 0.0, -1.0)), InvalidArgument);
  CHECK_NOTHROW(build_kitaev(KitaevParams::standard(2, 0.0, 1.0)));
}

TEST_CASE("closed-chain distance") {
  CHECK(chain_distance(1, 10) == 1);
  CHECK(chain_distance(9, 10) == 1);
  CHECK(chain_distance(5, 10) == 5);
  CHECK(chain_distance(4, 9) == 4);
  CHECK(chain_distance(5, 9) == 4);
}

TEST_CASE("boundary parsing") {
  CHECK(parse_boundary("Periodic") == Boundary::Periodic);
  CHECK(parse_boundary("anti-periodic") == Boundary::AntiPeriodic);
  CHECK(to_string(Boundary::AntiPeriodic) == "antiperiodic");
  CHECK_THROWS_AS(parse_boundary("open"), InvalidArgument);
}

TEST_CASE("BdG matrix is exactly Hermitian") {
  for (auto b : {Boundary::Periodic, Boundary::AntiPeriodic})
    for (int L : {2, 3, 7, 30}) {
      auto p = KitaevParams::standard(L, 0.7, 1.3);
      p.boundary = b;
      p.t = 0.37;
      const Eigen::MatrixXcd h = build_kitaev(p).matrix();
      CHECK(max_abs(h - h.adjoint()) == 0.0);
    }
}

TEST_CASE("pair coefficient of a_1 a_3 at L=4") {
  auto p = KitaevParams::standard(4, 0.0, 1.0);
  const auto H = build_kitaev(p);
  const auto P = H.pairing_block();
  CHECK(P(0, 2).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(P(2, 0).real() == doctest::Approx(-0.5).epsilon(1e-15));
  // Stored BdG entries: h(C_1, A_3) = 0.5, h(C_3, A_1) = -0.5.
  CHECK(H.matrix()(mode_index(1, true), mode_index(3, false)).real() == doctest::Approx(0.5));
  CHECK(H.matrix()(mode_index(3, true), mode_index(1, false)).real() == doctest::Approx(-0.5));
}

TEST_CASE("periodic closure cancels the pair term") {
  for (int L : {2, 3, 4, 5, 50, 51}) {
    auto p = KitaevParams::standard(L, 0.5, 1.7);
    p.boundary = Boundary::Periodic;
    CHECK(max_abs(build_kitaev(p).pairing_block()) == 0.0);
    p.boundary = Boundary::AntiPeriodic;
    CHECK(max_abs(build_kitaev(p).pairing_block()) > 0.0);
  }
}

TEST_CASE("anti-periodic pair block equals the reduced single-sum form") {
  for (int L : {4, 7, 50}) {
    const auto p = KitaevParams::standard(L, 0.5, 2.3);
    const Eigen::MatrixXcd diff = build_kitaev(p).pairing_block() - reduced_pairing_block(p).cast<Complex>();
    CHECK(max_abs(diff) < 1e-15);
  }
}

TEST_CASE("zero pairing leaves only hopping and chemical potential") {
  for (auto b : {Boundary::Periodic, Boundary::AntiPeriodic}) {
    auto p = KitaevParams::standard(6, 0.8, 1.5);
    p.delta = 0.0;
    p.boundary = b;
    const auto H = build_kitaev(p);
    CHECK(max_abs(H.pairing_block()) == 0.0);

    CouplingSpec spec;
    spec.L = 6;
    for (int i = 1; i <= 6; ++i) {
      const int next = i == 6 ? 1 : i + 1;
      const double sign = (i == 6) ? boundary_sign(b) : 1.0;
      spec.terms.push_back({"hop", i, next, -p.t * sign, SiteOp::Creation, SiteOp::Annihilation});
      spec.on_site.push_back({i, -p.mu});
    }
    CHECK(max_abs(H.matrix() - build_generic(spec).matrix()) < 1e-15);
  }
}

TEST_CASE("BdG spectrum comes in +-eps pairs") {
  auto p = KitaevParams::standard(9, 0.3, 1.1);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(build_kitaev(p).matrix());
  const auto& e = es.eigenvalues();
  for (Eigen::Index k = 0; k < e.size(); ++k) CHECK(std::abs(e(k) + e(e.size() - 1 - k)) < 1e-12);
}

TEST_CASE("translation covariance under the signed shift") {
  for (auto b : {Boundary::Periodic, Boundary::AntiPeriodic}) {
    auto p = KitaevParams::standard(8, 0.4, 1.5);
    p.boundary = b;
    const Eigen::MatrixXcd h = build_kitaev(p).matrix();
    const Eigen::MatrixXcd S = shift_operator(8, b).cast<Complex>();
    CHECK(max_abs(S * h - h * S) < 1e-14);
  }
}

TEST_CASE("energy offset of the chemical potential term") {
  // -mu (n - 1/2) contributes nothing to the offset in the symmetric BdG form.
  const auto H = build_kitaev(KitaevParams::standard(5, 0.9, 1.0));
  CHECK(H.offset() == doctest::Approx(0.0));
  CHECK(H.source().find("kitaev") != std::string::npos);
}

TEST_CASE("generic builder") {
  SUBCASE("empty spec gives the zero matrix") {
    CouplingSpec spec;
    spec.L = 3;
    const auto H = build_generic(spec);
    CHECK(H.matrix().isZero(0.0));
  }
  SUBCASE("hopping term matches the Kitaev normal block") {
    // Single bond (1,2) with strength -t in a 4-site chain without pairing.
    CouplingSpec spec;
    spec.L = 4;
    spec.terms.push_back({"hop", 1, 2, -0.5, SiteOp::Creation, SiteOp::Annihilation});
    auto p = KitaevParams::standard(4, 0.0, 1.0);
    p.delta = 0.0;
    const auto hk = build_kitaev(p).matrix();
    const auto hg = build_generic(spec).matrix();
    for (int a : {0, 1, 2, 3})
      for (int c : {0, 1, 2, 3}) CHECK(std::abs(hg(a, c) - hk(a, c)) < 1e-15);
  }
  SUBCASE("term-by-term Kitaev expansion reproduces build_kitaev") {
    for (auto b : {Boundary::Periodic, Boundary::AntiPeriodic}) {
      auto p = KitaevParams::standard(6, 0.35, 1.25);
      p.boundary = b;
      const auto diff = build_kitaev(p).matrix() - build_generic(kitaev_coupling_spec(p)).matrix();
      CHECK(max_abs(diff) < 1e-15);
    }
  }
  SUBCASE("non-quadratic tags are rejected") {
    CouplingSpec spec;
    spec.L = 3;
    spec.terms.push_back({"nn", 1, 2, 1.0, SiteOp::Number, SiteOp::Number});
    CHECK_THROWS_AS(build_generic(spec), UnsupportedModel);
    spec.terms[0] = {"x", 1, 2, 1.0, SiteOp::Other, SiteOp::Annihilation};
    CHECK_THROWS_AS(build_generic(spec), UnsupportedModel);
  }
  SUBCASE("same-site and out-of-range terms are rejected") {
    CouplingSpec spec;
    spec.L = 3;
    spec.terms.push_back({"bad", 2, 2, 1.0, SiteOp::Creation, SiteOp::Annihilation});
    CHECK_THROWS_AS(build_generic(spec), InvalidArgument);
    spec.terms[0] = {"bad", 1, 4, 1.0, SiteOp::Creation, SiteOp::Annihilation};
    CHECK_THROWS_AS(build_generic(spec), InvalidArgument);
  }
}

TEST_CASE("decay precondition") {
  SUBCASE("Kitaev chain at L=100") {
    for (double alpha : {0.5, 1.5, 3.0}) {
      const auto rep = check_decay_precondition(kitaev_coupling_spec(KitaevParams::standard(100, 0.5, alpha)));
      CHECK(rep.satisfied);
      CHECK(rep.worst_ratio <= 1.0 + 1e-12);
    }
  }
  SUBCASE("a single strong coupling violates it") {
    CouplingSpec spec;
    spec.L = 20;
    spec.J = 1.0;
    spec.alpha = 2.0;
    spec.terms.push_back({"k", 1, 5, 10.0, SiteOp::Creation, SiteOp::Annihilation});
    const auto rep = check_decay_precondition(spec);
    CHECK_FALSE(rep.satisfied);
    CHECK(rep.worst_pair == std::pair{1, 5});
    CHECK(rep.worst_ratio == doctest::Approx(160.0));
  }
  SUBCASE("alpha = 2D is not enough") {
    CouplingSpec spec;
    spec.L = 10;
    spec.alpha = 2.0;
    spec.D = 1;
    const auto rep = check_decay_precondition(spec);
    CHECK(rep.required_alpha_margin == 0.0);
    CHECK_FALSE(rep.hypothesis_met);
    spec.alpha = 2.5;
    CHECK(check_decay_precondition(spec).hypothesis_met);
  }
}

TEST_CASE("model parameters from YAML") {
  const std::string path = "test_model_params.yaml";
  {
    std::ofstream f(path);
    f << "L: 12\nt: 0.25\nmu: 1.5\ndelta: 0.75\nalpha: 2.5\nboundary: periodic\n";
  }
  const auto p = read_kitaev_params(path);
  CHECK(p.L == 12);
  CHECK(p.t == 0.25);
  CHECK(p.mu == 1.5);
  CHECK(p.delta == 0.75);
  CHECK(p.alpha == 2.5);
  CHECK(p.boundary == Boundary::Periodic);
  {
    std::ofstream f(path);
    f << "L: 1\n";
  }
  CHECK_THROWS_AS(read_kitaev_params(path), InvalidArgument);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_kitaev_params("does/not/exist.yaml"), InvalidArgument);
}
