#include <doctest.h>

#include <cmath>
#include <limits>

#include "netctrl/numalg.hpp"

using namespace netctrl;

TEST_CASE("num_rank") {
  CHECK(num_rank(Eigen::MatrixXd(Eigen::MatrixXd::Identity(3, 3))) == 3);
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 2, 4 + 1e-14;
  CHECK(num_rank(m) == 1);
  NumericTolerance tight;
  tight.rank_tol = 1e-16;
  CHECK(num_rank(m, tight) == 2);
  CHECK(num_rank(Eigen::MatrixXd(Eigen::MatrixXd::Zero(2, 3))) == 0);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(num_rank(m), std::invalid_argument);
  m(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(num_rank(m), std::invalid_argument);
}

TEST_CASE("tolerance validation") {
  NumericTolerance t;
  CHECK_NOTHROW(t.validate());
  t.rank_tol = 0;
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  t.rank_tol = 1e-9;
  t.residual_tol = std::nan("");
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}

TEST_CASE("spectrum splits rational and irrational parts") {
  SpectrumReport sp = spectrum(RMatrix{{0, 1}, {0, 0}});
  CHECK(sp.fully_exact);
  CHECK(sp.exact_roots == std::vector<Rational>{0, 0});

  sp = spectrum(RMatrix{{1, 8, 7}, {4, 5, 6}, {1, 2, 3}});
  CHECK_FALSE(sp.fully_exact);
  CHECK(sp.exact_roots == std::vector<Rational>{-3});
  REQUIRE(sp.numeric_roots.size() == 2);
  for (Complex z : sp.numeric_roots) CHECK(std::abs(z * z - 12.0 * z + 8.0) < 1e-9);

  sp = spectrum(RMatrix{{0, -1}, {1, 0}});
  CHECK(sp.exact_roots.empty());
  REQUIRE(sp.numeric_roots.size() == 2);
  CHECK(std::abs(std::abs(sp.numeric_roots[0].imag()) - 1.0) < 1e-12);
}

TEST_CASE("numeric left nullspace") {
  Eigen::MatrixXcd m(3, 2);
  m << 1, 0, 0, 1, 1, 1;
  Eigen::MatrixXcd w = numeric_left_nullspace(m);
  REQUIRE(w.rows() == 1);
  CHECK((w * m).norm() < 1e-12);
  CHECK(std::abs(w.row(0).norm() - 1.0) < 1e-12);
}

TEST_CASE("witness residual") {
  const RMatrix phi{{2, 0}, {0, 3}};
  const RMatrix psi{{0}, {1}};
  Eigen::RowVectorXcd alpha(2);
  alpha << 1, 0;
  CHECK(witness_residual(2.0, alpha, phi, psi) == 0.0);
  CHECK(witness_residual(3.0, alpha, phi, psi) > 0.5);
  CHECK_THROWS_AS(witness_residual(2.0, Eigen::RowVectorXcd::Zero(2), phi, psi), std::invalid_argument);
  CHECK_THROWS_AS(witness_residual(2.0, Eigen::RowVectorXcd::Ones(3), phi, psi), std::invalid_argument);
}

TEST_CASE("polynomial roots") {
  auto roots = polynomial_roots(Poly{6, -5, 1});
  REQUIRE(roots.size() == 2);
  double lo = std::min(roots[0].real(), roots[1].real());
  CHECK(std::abs(lo - 2.0) < 1e-12);
  CHECK(polynomial_roots(Poly::constant(3)).empty());
}
