#include "witnesskit/witness.hpp"

#include <cmath>

#include "witnesskit/random.hpp"
#include "witnesskit/tensor.hpp"

namespace witnesskit {

namespace {

// Fine-grained permutation that groups side A parties before side B.
std::vector<int> cut_permutation(const Bipartition& cut) {
  std::vector<int> perm = cut.side_a;
  perm.insert(perm.end(), cut.side_b.begin(), cut.side_b.end());
  return perm;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k)
    inv[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
  return inv;
}

Dims permuted_layout(const Dims& layout, const std::vector<int>& perm) {
  std::vector<int> d;
  for (int k : perm) d.push_back(layout[k]);
  return Dims(d);
}

}  // namespace

double evaluate(const Witness& w, const DensityMatrix& rho) {
  if (!(w.layout == rho.layout))
    throw std::invalid_argument("evaluate: witness and state layouts differ");
  return (w.observable * rho.matrix).trace().real();
}

double evaluate(const Witness& w, const PureState& psi) {
  if (!(w.layout == psi.layout))
    throw std::invalid_argument("evaluate: witness and state layouts differ");
  return (psi.amplitudes.adjoint() * w.observable * psi.amplitudes)(0).real();
}

PureWitnessResult pure_state_witness(const PureState& psi, const Bipartition& cut) {
  const SchmidtResult sd = schmidt(psi, cut);
  if (sd.coefficients.size() < 2 || sd.coefficients(1) < 1e-9)
    throw std::invalid_argument("pure_state_witness: no witness exists for a product state");
  // Pair (0,1) of the descending Schmidt order; any tied pair evaluates equally.
  const Vec a0 = sd.left.col(0), a1 = sd.left.col(1);
  const Vec b0 = sd.right.col(0), b1 = sd.right.col(1);
  const Vec a0b1 = kron(a0, b1), a1b0 = kron(a1, b0);
  const Vec a0b0 = kron(a0, b0), a1b1 = kron(a1, b1);
  Mat h = 0.5 * (a0b1 * a0b1.adjoint() + a1b0 * a1b0.adjoint() -
                 a0b0 * a1b1.adjoint() - a1b1 * a0b0.adjoint());

  // Built on the permuted (side A first) fine layout; map back to the original.
  const std::vector<int> perm = cut_permutation(cut);
  const Dims fine = permuted_layout(psi.layout, perm);
  h = permute_parties(h, fine, inverse_permutation(perm));

  PureWitnessResult out;
  out.witness = {std::move(h), psi.layout, cut, WitnessKind::Decomposable,
                 "pure-state-schmidt"};
  out.mu_min = -sd.coefficients(0) * sd.coefficients(1);
  return out;
}

PureWitnessResult low_dim_optimal_witness(const DensityMatrix& rho) {
  if (rho.layout.parties() != 2)
    throw std::invalid_argument("low_dim_optimal_witness: bipartite layout required");
  const int lo = std::min(rho.layout[0], rho.layout[1]);
  const int hi = std::max(rho.layout[0], rho.layout[1]);
  if (!(lo == 2 && hi <= 3))
    throw std::invalid_argument("low_dim_optimal_witness: only 2x2 and 2x3 supported");
  const Mat pt = partial_transpose(rho.matrix, rho.layout, {1});
  auto [mu, psi_min] = min_eigpair(pt);
  if (mu >= -tol::psd)
    throw std::invalid_argument(
        "low_dim_optimal_witness: state is PPT; use indecomposable procedure");
  Mat h = partial_transpose(psi_min * psi_min.adjoint(), rho.layout, {1});
  PureWitnessResult out;
  out.witness = {std::move(h), rho.layout,
                 Bipartition::make({0}, 2), WitnessKind::Decomposable,
                 "low-dim-min-eigenvector"};
  out.mu_min = mu;
  return out;
}

ProductInfimumResult product_infimum(const Mat& h, const Dims& layout,
                                     int restarts, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("product_infimum: restarts >= 1");
  const int n = layout.parties();
  ProductInfimumResult out;
  out.value = std::numeric_limits<double>::infinity();
  out.restarts = restarts;
  out.seed = seed;

  for (int r = 0; r < restarts; ++r) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r));
    std::vector<Vec> locals;
    for (int k = 0; k < n; ++k) locals.push_back(random_unit_vector(layout[k], rng));

    double value = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 500; ++iter) {
      for (int k = 0; k < n; ++k) {
        // Isometry leaving slot k open: v_0 x ... x I_k x ... x v_{n-1}.
        Mat iso = (k == 0) ? Mat(Mat::Identity(layout[0], layout[0]))
                           : Mat(locals[0]);
        for (int j = 1; j < n; ++j)
          iso = kron(iso, (j == k) ? Mat(Mat::Identity(layout[j], layout[j]))
                                   : Mat(locals[static_cast<std::size_t>(j)]));
        const Mat contracted = iso.adjoint() * h * iso;
        locals[static_cast<std::size_t>(k)] = min_eigpair(contracted).second;
      }
      Vec prod = locals[0];
      for (int j = 1; j < n; ++j) prod = kron(prod, locals[static_cast<std::size_t>(j)]);
      const double next = (prod.adjoint() * h * prod)(0).real();
      if (std::abs(value - next) < 1e-12) {
        value = next;
        break;
      }
      value = next;
    }
    Vec prod = locals[0];
    for (int j = 1; j < n; ++j) prod = kron(prod, locals[static_cast<std::size_t>(j)]);
    out.restart_minima.emplace_back(value, prod);
    if (value < out.value) {
      out.value = value;
      out.argmin = prod;
      out.local_vectors = locals;
    }
  }
  return out;
}

Witness indecomposable_witness(const DensityMatrix& rho, const Witness& seed,
                               int restarts, std::uint64_t rng_seed) {
  const int d = rho.dim();
  if (std::abs((seed.observable * rho.matrix).trace().real()) > 1e-8)
    throw std::invalid_argument("indecomposable_witness: seed must satisfy Tr(seed rho) = 0");
  if (std::abs(seed.observable.trace().real() - 1.0) > 1e-8)
    throw std::invalid_argument("indecomposable_witness: seed must have unit trace");

  // Step 2: epsilon from the see-saw, then H' = (H - eps 1)/(1 - eps d).
  const ProductInfimumResult inf = product_infimum(seed.observable, rho.layout,
                                                   restarts, rng_seed);
  const double eps = inf.value;
  if (eps <= tol::psd)
    throw std::invalid_argument(
        "indecomposable_witness: seed not strictly positive on products; choose another seed");
  if (eps * d >= 1.0)
    throw std::invalid_argument("indecomposable_witness: eps * dim >= 1, rescale the seed");
  Mat h = (seed.observable - eps * Mat::Identity(d, d)) / (1.0 - eps * d);

  // Step 3: greedy subtraction of decomposable witnesses vanishing on the
  // discovered zero set of H'.
  auto zero_products = [&](const Mat& cur) {
    const ProductInfimumResult run =
        product_infimum(cur, rho.layout, restarts, rng_seed + 1);
    std::vector<Vec> zeros;
    for (const auto& [val, vec] : run.restart_minima)
      if (val < 1e-8) zeros.push_back(vec);
    return zeros;
  };

  for (int round = 0; round < 4; ++round) {
    const std::vector<Vec> zeros = zero_products(h);
    if (zeros.empty()) break;
    // D: normalized projector onto the orthocomplement of the zero products.
    Mat span(d, static_cast<int>(zeros.size()));
    for (std::size_t i = 0; i < zeros.size(); ++i) span.col(static_cast<int>(i)) = zeros[i];
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(span);
    const int r = static_cast<int>(cod.rank());
    if (r >= d) break;
    Eigen::HouseholderQR<Mat> qr(span);
    Mat q = qr.householderQ();
    Mat proj = Mat::Identity(d, d) - q.leftCols(r) * q.leftCols(r).adjoint();
    Mat dwit = proj / double(d - r);

    const double t = (dwit * rho.matrix).trace().real();
    const double e = (h * rho.matrix).trace().real();
    if (t <= e + 1e-10) break;  // no improvement possible

    // Largest admissible lambda: keep the see-saw minimum nonnegative.
    double lo = 0.0, hi_l = 0.95;
    for (int step = 0; step < 20; ++step) {
      const double mid = 0.5 * (lo + hi_l);
      const Mat cand = (h - mid * dwit) / (1.0 - mid);
      const double m = product_infimum(cand, rho.layout, restarts, rng_seed + 2).value;
      if (m >= -tol::psd)
        lo = mid;
      else
        hi_l = mid;
    }
    if (lo < 1e-6) break;
    h = (h - lo * dwit) / (1.0 - lo);
  }

  Witness out;
  out.observable = std::move(h);
  out.layout = rho.layout;
  out.cut = seed.cut;
  out.kind = WitnessKind::Indecomposable;
  out.provenance = "greedy-optimized; eps=" + std::to_string(eps) +
                   " restarts=" + std::to_string(restarts) +
                   " seed=" + std::to_string(rng_seed);
  return out;
}

double robustness_radius(const Witness& w, const DensityMatrix& rho) {
  const double val = evaluate(w, rho);
  if (val >= 0.0)
    throw std::invalid_argument("robustness_radius: witness does not detect this state");
  return -val / std::sqrt((w.observable * w.observable).trace().real());
}

Mat pauli_matrix(char letter) {
  Mat m(2, 2);
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli_matrix: unknown letter");
  }
  return m;
}

MeasurementPlan pauli_decompose(const Witness& w) {
  const int n = w.layout.parties();
  for (int k = 0; k < n; ++k)
    if (w.layout[k] != 2)
      throw std::invalid_argument("pauli_decompose: all subsystems must be qubits");
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  const int d = w.layout.total();
  MeasurementPlan plan;
  const long terms = 1L << (2 * n);
  for (long t = 0; t < terms; ++t) {
    std::string s(static_cast<std::size_t>(n), 'I');
    long rem = t;
    for (int k = n - 1; k >= 0; --k) {
      s[static_cast<std::size_t>(k)] = letters[rem % 4];
      rem /= 4;
    }
    Mat sigma = pauli_matrix(s[0]);
    for (int k = 1; k < n; ++k) sigma = kron(sigma, pauli_matrix(s[static_cast<std::size_t>(k)]));
    const double c = (w.observable * sigma).trace().real() / double(d);
    if (std::abs(c) > 1e-12) {
      plan.terms.push_back({s, c});
      if (s != std::string(static_cast<std::size_t>(n), 'I')) ++plan.settings_count;
    }
  }
  return plan;
}

Mat reconstruct(const MeasurementPlan& plan, int qubits) {
  const int d = 1 << qubits;
  Mat out = Mat::Zero(d, d);
  for (const PauliTerm& term : plan.terms) {
    Mat sigma = pauli_matrix(term.pauli.at(0));
    for (int k = 1; k < qubits; ++k) sigma = kron(sigma, pauli_matrix(term.pauli.at(static_cast<std::size_t>(k))));
    out += term.coeff * sigma;
  }
  return out;
}

}  // namespace witnesskit
