#include "witnesskit/sos.hpp"

#include <cmath>
#include <random>

#include "witnesskit/tensor.hpp"

namespace witnesskit {

namespace {

RealMat real_part_checked(const Mat& h, const char* who) {
  if (h.imag().cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument(std::string(who) + ": real coefficients required");
  RealMat r = h.real();
  if ((r - r.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument(std::string(who) + ": symmetric input required");
  return r;
}

}  // namespace

double BiquadraticForm::evaluate(const RealVec& x, const RealVec& y) const {
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          acc += at(i, j, k, l) * x(i) * x(j) * y(k) * y(l);
  return acc;
}

BiquadraticForm biquadratic_from_witness(const Mat& h, const Dims& layout) {
  if (layout.parties() != 2)
    throw std::invalid_argument("biquadratic_from_witness: two-party layout required");
  const RealMat r = real_part_checked(h, "biquadratic_from_witness");
  const int n = layout[0], m = layout[1];
  BiquadraticForm f;
  f.n = n;
  f.m = m;
  f.coefficients.assign(static_cast<std::size_t>(n * n * m * m), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const double c = r(i * m + k, j * m + l);
          // Symmetrize under i<->j and k<->l.
          f.at(i, j, k, l) += 0.25 * c;
          f.at(j, i, k, l) += 0.25 * c;
          f.at(i, j, l, k) += 0.25 * c;
          f.at(j, i, l, k) += 0.25 * c;
        }
  return f;
}

SosResult sos_certificate(const Mat& h, const Dims& layout) {
  if (layout.parties() != 2)
    throw std::invalid_argument("sos_certificate: two-party layout required");
  const RealMat r = real_part_checked(h, "sos_certificate");
  const int n = layout[0], m = layout[1];
  Eigen::SelfAdjointEigenSolver<RealMat> es(r);
  SosResult out;
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  if (out.min_eigenvalue < -tol::psd) return out;  // no certificate from this representative

  SosCertificate cert;
  for (Eigen::Index t = 0; t < es.eigenvalues().size(); ++t) {
    const double w = es.eigenvalues()(t);
    if (w <= tol::psd) continue;
    const RealVec u = std::sqrt(w) * es.eigenvectors().col(t);
    RealMat g(n, m);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < m; ++k) g(i, k) = u(i * m + k);
    cert.bilinear_forms.push_back(std::move(g));
  }
  out.certificate = std::move(cert);
  return out;
}

double verify_sos(const BiquadraticForm& f, const SosCertificate& cert,
                  int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    RealVec x(f.n), y(f.m);
    for (int i = 0; i < f.n; ++i) x(i) = g(rng);
    for (int k = 0; k < f.m; ++k) y(k) = g(rng);
    double sos = 0.0;
    for (const RealMat& gt : cert.bilinear_forms) {
      const double v = x.transpose() * gt * y;
      sos += v * v;
    }
    worst = std::max(worst, std::abs(f.evaluate(x, y) - sos));
  }
  return worst;
}

}  // namespace witnesskit
