#include <cmath>

#include "doctest.h"
#include "witnesskit/criteria.hpp"
#include "witnesskit/states.hpp"
#include "witnesskit/tensor.hpp"
#include "witnesskit/witness.hpp"

using namespace witnesskit;

TEST_CASE("singlet and maximally entangled") {
  Mat red = partial_trace(singlet().projector().matrix, Dims({2, 2}), {1});
  CHECK((red - Mat::Identity(2, 2) / 2.0).norm() < 1e-14);

  Vec expect(4);
  expect << 1, 0, 0, 1;
  expect /= std::sqrt(2.0);
  CHECK((maximally_entangled(2).amplitudes - expect).norm() < 1e-15);

  auto s = schmidt(maximally_entangled(3), Bipartition::make({0}, 2));
  for (int i = 0; i < 3; ++i)
    CHECK(s.coefficients(i) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("ghz stabilizer eigenvalues") {
  Vec g = ghz(3, -1).amplitudes;
  Mat xyy = kron(kron(pauli_matrix('X'), pauli_matrix('Y')), pauli_matrix('Y'));
  Mat xxx = kron(kron(pauli_matrix('X'), pauli_matrix('X')), pauli_matrix('X'));
  CHECK((xyy * g - g).norm() < 1e-14);
  CHECK((xxx * g + g).norm() < 1e-14);
  Vec gp = ghz(3).amplitudes;
  CHECK((xxx * gp - gp).norm() < 1e-14);

  CHECK(w_state().amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w_state().amplitudes(1).real() == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("werner family") {
  for (double lam : {0.6, 1.0, 3.0}) {
    auto w = werner(3, lam);
    CHECK(std::abs(w.state.matrix.trace() - Complex(1.0)) < 1e-12);
    Mat pt = partial_transpose(w.state.matrix, w.state.layout, {1});
    CHECK(hermitian_eig(pt).values.minCoeff() < -1e-8);  // whole family is NPT
  }
  CHECK(werner(3, 1.9).conjectured_nondistillable == false);
  CHECK(werner(3, 2.0).conjectured_nondistillable == true);
  CHECK(werner(4, 1.0).conjectured_nondistillable == true);
  CHECK(werner(2, 5.0).conjectured_nondistillable == false);
  CHECK_THROWS_AS(werner(3, -10.0), std::invalid_argument);
}

TEST_CASE("isotropic family") {
  DensityMatrix mixed = isotropic(3, 0.0);
  CHECK((mixed.matrix - Mat::Identity(9, 9) / 9.0).norm() < 1e-14);
  auto v = ppt_check(mixed, Bipartition::make({0}, 2));
  CHECK(v.status != Status::EntangledCertified);

  DensityMatrix pure = isotropic(2, 1.0);
  CHECK((pure.matrix - maximally_entangled(2).projector().matrix).norm() < 1e-14);

  // NPT exactly above p = 1/(n+1)
  for (int k = 0; k <= 20; ++k) {
    double p = k / 20.0;
    Mat pt = partial_transpose(isotropic(2, p).matrix, Dims({2, 2}), {1});
    bool npt = hermitian_eig(pt).values.minCoeff() < -1e-10;
    CHECK(npt == (p > 1.0 / 3.0 + 1e-12));
  }
}

TEST_CASE("shifts state") {
  auto vecs = shifts_upb();
  REQUIRE(vecs.size() == 4);
  DensityMatrix rho = shifts_state();
  for (const auto& v : vecs) {
    CHECK(v.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-14));
    double ov = (v.amplitudes.adjoint() * rho.matrix * v.amplitudes)(0).real();
    CHECK(std::abs(ov) < 1e-14);
  }
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = i + 1; j < vecs.size(); ++j)
      CHECK(std::abs((vecs[i].amplitudes.adjoint() * vecs[j].amplitudes)(0)) < 1e-14);

  for (int party = 0; party < 3; ++party) {
    Mat pt = partial_transpose(rho.matrix, rho.layout, {party});
    CHECK(hermitian_eig(pt).values.minCoeff() > -1e-10);
  }
  CHECK(numerical_rank(rho.matrix) == 4);
}

TEST_CASE("four-party bell mixture") {
  DensityMatrix rho = bell_mixture_acbd();
  CHECK(std::abs(rho.matrix.trace() - Complex(1.0)) < 1e-12);
  // separable across the three two-two splits, entangled across every one-three split
  for (auto a : std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}}) {
    Mat pt = partial_transpose(rho.matrix, rho.layout, a);
    CHECK(hermitian_eig(pt).values.minCoeff() > -1e-10);
  }
  for (int p = 0; p < 4; ++p) {
    Mat pt = partial_transpose(rho.matrix, rho.layout, {p});
    CHECK(hermitian_eig(pt).values.minCoeff() < -1e-10);
  }
}

TEST_CASE("padded counterexample") {
  DensityMatrix sigma = padded_counterexample(2, 3);
  CHECK(sigma.layout == Dims({3, 2, 2, 3}));
  CHECK(std::abs(sigma.matrix.trace() - Complex(1.0)) < 1e-12);
  CHECK_THROWS_AS(padded_counterexample(2, 2), std::invalid_argument);
}

TEST_CASE("catalog") {
  auto names = catalog_names();
  CHECK(names.size() >= 10);

  auto e = catalog_state("bell-theta", {{"theta", M_PI / 4}});
  REQUIRE(e.pure.has_value());
  CHECK((e.pure->amplitudes - maximally_entangled(2).amplitudes).norm() < 1e-14);

  auto w = catalog_state("werner", {{"n", 3}, {"lambda", 2.0}});
  REQUIRE(w.mixed.has_value());
  CHECK(w.mixed->layout == Dims({3, 3}));

  CHECK(catalog_state("shifts", {}).mixed->layout == Dims({2, 2, 2}));
  CHECK_THROWS_AS(catalog_state("no-such-state", {}), std::invalid_argument);
}

TEST_CASE("state validation") {
  Mat notpsd = Mat::Identity(2, 2);
  notpsd(1, 1) = -0.5;
  notpsd(0, 0) = 1.5;
  CHECK_THROWS_AS(DensityMatrix(notpsd, Dims({2})), std::invalid_argument);
  Mat badtrace = Mat::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(badtrace, Dims({2})), std::invalid_argument);
  Vec unnorm(2);
  unnorm << 1, 1;
  CHECK_THROWS_AS(PureState(unnorm, Dims({2})), std::invalid_argument);
}
