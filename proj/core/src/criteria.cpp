#include "witnesskit/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "witnesskit/tensor.hpp"

namespace witnesskit {

namespace {

constexpr double kEntropyTol = 1e-9;

RealVec clamped_spectrum(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  RealVec lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam(i) < 0.0) lam(i) = 0.0;
  return lam;
}

RealVec descending(RealVec v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<>());
  return v;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::EntangledCertified: return "entangled-certified";
    case Status::SeparableCertified: return "separable-certified";
    default: return "inconclusive";
  }
}

int numerical_rank(const Mat& m, double rel_threshold) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().cwiseAbs().maxCoeff();
  if (top == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) > rel_threshold * top) ++r;
  return r;
}

Verdict ppt_check(const DensityMatrix& rho, const Bipartition& cut) {
  const DensityMatrix bv = bipartite_view(rho, cut);
  const Mat pt = partial_transpose(bv.matrix, bv.layout, {1});
  Eigen::SelfAdjointEigenSolver<Mat> es(pt, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  Verdict v;
  v.criterion = "ppt";
  v.tolerance_used = tol::psd;
  v.evidence["min_eigenvalue"] = min_eig;
  if (min_eig < -tol::psd) {
    v.status = Status::EntangledCertified;
  } else {
    const int a = bv.layout[0], b = bv.layout[1];
    const int lo = std::min(a, b), hi = std::max(a, b);
    // PPT is sufficient for separability only in 2x2 and 2x3.
    v.status = (lo == 2 && hi <= 3) ? Status::SeparableCertified
                                    : Status::Inconclusive;
  }
  return v;
}

Verdict reduction_check(const DensityMatrix& rho, const Bipartition& cut) {
  const DensityMatrix bv = bipartite_view(rho, cut);
  const int da = bv.layout[0], db = bv.layout[1];
  const Mat rho_a = partial_trace(bv.matrix, bv.layout, {1});
  const Mat rho_b = partial_trace(bv.matrix, bv.layout, {0});
  const Mat op_b = kron(Mat::Identity(da, da), rho_b) - bv.matrix;
  const Mat op_a = kron(rho_a, Mat::Identity(db, db)) - bv.matrix;
  Eigen::SelfAdjointEigenSolver<Mat> ea(op_a, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Mat> eb(op_b, Eigen::EigenvaluesOnly);
  const double min_a = ea.eigenvalues().minCoeff();
  const double min_b = eb.eigenvalues().minCoeff();
  Verdict v;
  v.criterion = "reduction";
  v.tolerance_used = tol::psd;
  v.evidence["min_eigenvalue_a_side"] = min_a;
  v.evidence["min_eigenvalue_b_side"] = min_b;
  if (std::min(min_a, min_b) < -tol::psd) {
    v.status = Status::EntangledCertified;
    v.evidence["distillable"] = 1.0;
  } else {
    v.status = Status::Inconclusive;
  }
  return v;
}

double renyi_entropy_of_spectrum(const RealVec& spectrum, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("renyi_entropy: alpha must be >= 0");
  const double top = spectrum.maxCoeff();
  if (alpha == 0.0) {
    int rank = 0;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i)
      if (spectrum(i) > tol::psd * top) ++rank;
    return std::log2(double(rank));
  }
  if (std::isinf(alpha)) return -std::log2(top);
  if (alpha == 1.0) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i)
      if (spectrum(i) > 0.0) s -= spectrum(i) * std::log2(spectrum(i));
    return s;
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i)
    if (spectrum(i) > 0.0) acc += std::pow(spectrum(i), alpha);
  return std::log2(acc) / (1.0 - alpha);
}

double renyi_entropy(const DensityMatrix& rho, double alpha) {
  return renyi_entropy_of_spectrum(clamped_spectrum(rho.matrix), alpha);
}

Verdict entropic_check(const DensityMatrix& rho, const Bipartition& cut,
                       const std::vector<double>& alphas) {
  const DensityMatrix bv = bipartite_view(rho, cut);
  const RealVec global = clamped_spectrum(bv.matrix);
  const RealVec loc_a = clamped_spectrum(partial_trace(bv.matrix, bv.layout, {1}));
  const RealVec loc_b = clamped_spectrum(partial_trace(bv.matrix, bv.layout, {0}));
  Verdict v;
  v.criterion = "entropic";
  v.tolerance_used = kEntropyTol;
  double worst = 0.0;       // most positive S_local - S_global gap
  double worst_alpha = -1.0;
  for (double alpha : alphas) {
    const double sg = renyi_entropy_of_spectrum(global, alpha);
    for (const RealVec* loc : {&loc_a, &loc_b}) {
      const double gap = renyi_entropy_of_spectrum(*loc, alpha) - sg;
      if (gap > worst) {
        worst = gap;
        worst_alpha = alpha;
      }
    }
  }
  v.evidence["max_gap"] = worst;
  v.evidence["alpha_at_max"] = worst_alpha;
  v.status = (worst > kEntropyTol) ? Status::EntangledCertified
                                   : Status::Inconclusive;
  return v;
}

SpectrumPair spectrum_pair(const DensityMatrix& rho, const Bipartition& cut,
                           bool local_side_a) {
  const DensityMatrix bv = bipartite_view(rho, cut);
  SpectrumPair p;
  p.global_spectrum = descending(clamped_spectrum(bv.matrix));
  const RealVec loc = descending(clamped_spectrum(
      partial_trace(bv.matrix, bv.layout, {local_side_a ? 1 : 0})));
  p.local_spectrum = RealVec::Zero(p.global_spectrum.size());
  p.local_spectrum.head(loc.size()) = loc;
  return p;
}

Verdict majorization_check(const DensityMatrix& rho, const Bipartition& cut) {
  Verdict v;
  v.criterion = "majorization";
  v.tolerance_used = tol::psd;
  double min_margin = std::numeric_limits<double>::infinity();
  for (bool side_a : {true, false}) {
    const SpectrumPair p = spectrum_pair(rho, cut, side_a);
    double acc_l = 0.0, acc_g = 0.0;
    for (Eigen::Index k = 0; k < p.global_spectrum.size(); ++k) {
      acc_l += p.local_spectrum(k);
      acc_g += p.global_spectrum(k);
      min_margin = std::min(min_margin, acc_l - acc_g);
    }
  }
  v.evidence["min_partial_sum_margin"] = min_margin;
  v.status = (min_margin < -tol::psd) ? Status::EntangledCertified
                                      : Status::Inconclusive;
  return v;
}

Verdict rank_separability(const DensityMatrix& rho, const Bipartition& cut) {
  const DensityMatrix bv = bipartite_view(rho, cut);
  const Mat pt = partial_transpose(bv.matrix, bv.layout, {1});
  Eigen::SelfAdjointEigenSolver<Mat> es(pt, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  const int rank = numerical_rank(bv.matrix);
  const int bound = std::max(bv.layout[0], bv.layout[1]);
  Verdict v;
  v.criterion = "rank";
  v.tolerance_used = tol::psd;
  v.evidence["min_pt_eigenvalue"] = min_eig;
  v.evidence["rank"] = rank;
  v.evidence["rank_bound"] = bound;
  v.status = (min_eig >= -tol::psd && rank <= bound) ? Status::SeparableCertified
                                                     : Status::Inconclusive;
  return v;
}

ConditionalEntropyResult conditional_entropy(const DensityMatrix& rho,
                                             const Bipartition& cut) {
  const DensityMatrix bv = bipartite_view(rho, cut);
  const int da = bv.layout[0];
  const Mat rho_b = partial_trace(bv.matrix, bv.layout, {0});
  ConditionalEntropyResult out;
  out.scalar = renyi_entropy_of_spectrum(clamped_spectrum(bv.matrix), 1.0) -
               renyi_entropy_of_spectrum(clamped_spectrum(rho_b), 1.0);
  const double scale = std::max(1.0, bv.matrix.norm());
  Eigen::SelfAdjointEigenSolver<Mat> es(bv.matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() > tol::pd * scale) {
    const Mat log_rho = herm_log(bv.matrix);
    const Mat log_1b = herm_log(kron(Mat::Identity(da, da), rho_b));
    const Mat exponent = log_rho - log_1b;
    out.operator_form = -(bv.matrix * exponent).trace().real() / std::log(2.0);
    out.rho_cond = herm_exp(exponent);
  }
  return out;
}

}  // namespace witnesskit
