#include "witnesskit/random.hpp"

#include "witnesskit/tensor.hpp"

namespace witnesskit {

Vec random_unit_vector(int dim, Rng& rng) {
  std::normal_distribution<double> g;
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  v.normalize();
  return v;
}

Vec random_product_vector(const Dims& layout, Rng& rng) {
  Vec v = random_unit_vector(layout[0], rng);
  for (int k = 1; k < layout.parties(); ++k)
    v = kron(v, random_unit_vector(layout[k], rng));
  return v;
}

Mat random_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> g;
  Mat a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : 1.0;
  }
  return q;
}

DensityMatrix random_density_matrix(const Dims& layout, Rng& rng) {
  const int d = layout.total();
  std::normal_distribution<double> g;
  Mat a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
  Mat rho = a * a.adjoint();
  rho /= rho.trace();
  return DensityMatrix(std::move(rho), layout, false);
}

DensityMatrix random_separable_state(const Dims& layout, int terms, Rng& rng) {
  const int d = layout.total();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(static_cast<std::size_t>(terms));
  double tot = 0;
  for (double& x : w) {
    x = u(rng);
    tot += x;
  }
  Mat rho = Mat::Zero(d, d);
  for (double x : w) {
    const Vec v = random_product_vector(layout, rng);
    rho += (x / tot) * v * v.adjoint();
  }
  return DensityMatrix(std::move(rho), layout, false);
}

}  // namespace witnesskit
