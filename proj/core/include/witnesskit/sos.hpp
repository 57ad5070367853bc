#pragma once

#include <cstdint>
#include <optional>

#include "witnesskit/types.hpp"

namespace witnesskit {

/// Real biquadratic form F(x, y) = sum L_{ij,kl} x_i x_j y_k y_l with the
/// coefficient array symmetrized under i<->j and k<->l.
struct BiquadraticForm {
  int n = 0;  // length of x (first tensor factor)
  int m = 0;  // length of y (second factor)
  std::vector<double> coefficients;  // indexed ((i*n + j)*m + k)*m + l

  double& at(int i, int j, int k, int l) {
    return coefficients[static_cast<std::size_t>(((i * n + j) * m + k) * m + l)];
  }
  double at(int i, int j, int k, int l) const {
    return coefficients[static_cast<std::size_t>(((i * n + j) * m + k) * m + l)];
  }
  double evaluate(const RealVec& x, const RealVec& y) const;
};

/// F(x, y) = (x (x) y)^T h (x (x) y) for a real symmetric witness on a
/// two-party layout. Throws on complex entries.
BiquadraticForm biquadratic_from_witness(const Mat& h, const Dims& layout);

/// Bilinear forms G_t(x, y) = x^T g^t y with sum_t G_t^2 reproducing F.
struct SosCertificate {
  std::vector<RealMat> bilinear_forms;  // each n x m
};

struct SosResult {
  std::optional<SosCertificate> certificate;
  double min_eigenvalue = 0.0;  // reported when no certificate exists
};

/// Constructive SOS certificate from the eigendecomposition of the canonical
/// symmetric Gram representative; `none` (with the offending eigenvalue) when
/// that representative is not PSD.
SosResult sos_certificate(const Mat& h, const Dims& layout);

/// Max over random samples of |F(x,y) - sum_t G_t(x,y)^2|, standard normal
/// entries, seeded.
double verify_sos(const BiquadraticForm& f, const SosCertificate& cert,
                  int samples, std::uint64_t seed);

}  // namespace witnesskit
