#pragma once

#include <map>
#include <optional>
#include <string>

#include "witnesskit/types.hpp"

namespace witnesskit {

enum class Status { EntangledCertified, SeparableCertified, Inconclusive };

std::string to_string(Status s);

struct Verdict {
  Status status = Status::Inconclusive;
  std::string criterion;
  std::map<std::string, double> evidence;
  double tolerance_used = tol::psd;
};

/// Global and local spectra, descending, zero-padded to equal length.
struct SpectrumPair {
  RealVec global_spectrum;
  RealVec local_spectrum;
};

/// Peres-Horodecki test across `cut`. Entangled-certified on a negative
/// partial-transpose eigenvalue; a PPT result upgrades to separable-certified
/// in 2x2 and 2x3 only.
Verdict ppt_check(const DensityMatrix& rho, const Bipartition& cut);

/// 1 x rho_B - rho >= 0 and rho_A x 1 - rho >= 0; a violation also certifies
/// distillability (evidence key "distillable").
Verdict reduction_check(const DensityMatrix& rho, const Bipartition& cut);

/// Quantum Renyi entropy in bits. alpha = 0 -> log2 rank, alpha = 1 -> von
/// Neumann, alpha = inf -> -log2 of the largest eigenvalue.
double renyi_entropy(const DensityMatrix& rho, double alpha);
double renyi_entropy_of_spectrum(const RealVec& spectrum, double alpha);

/// S_alpha(rho_A) <= S_alpha(rho) and same for B, over the listed alphas.
Verdict entropic_check(const DensityMatrix& rho, const Bipartition& cut,
                       const std::vector<double>& alphas = {
                           0.0, 0.5, 1.0, 2.0,
                           std::numeric_limits<double>::infinity()});

/// Nielsen-Kempe majorization test of local vs global spectra.
Verdict majorization_check(const DensityMatrix& rho, const Bipartition& cut);

SpectrumPair spectrum_pair(const DensityMatrix& rho, const Bipartition& cut,
                           bool local_side_a);

/// PPT plus rank(rho) <= max(n, m) certifies separability.
Verdict rank_separability(const DensityMatrix& rho, const Bipartition& cut);

struct ConditionalEntropyResult {
  double scalar;                      // S(rho) - S(rho_B), bits
  std::optional<Mat> rho_cond;        // exp[log rho - log 1 x rho_B]; full rank only
  std::optional<double> operator_form;  // -Tr rho log2 rho_cond
};

ConditionalEntropyResult conditional_entropy(const DensityMatrix& rho,
                                             const Bipartition& cut);

/// Numerical rank with threshold relative to the spectral norm.
int numerical_rank(const Mat& m, double rel_threshold = 1e-9);

}  // namespace witnesskit
