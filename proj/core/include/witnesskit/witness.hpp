#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witnesskit/types.hpp"

namespace witnesskit {

enum class WitnessKind { Decomposable, Indecomposable };

/// Hermitian observable nonnegative on separable states across `cut`,
/// normalized to Tr H = 1 unless provenance says otherwise.
struct Witness {
  Mat observable;
  Dims layout;
  Bipartition cut;
  WitnessKind kind = WitnessKind::Decomposable;
  std::string provenance;
};

struct PauliTerm {
  std::string pauli;  // one of I,X,Y,Z per qubit
  double coeff;
};

struct MeasurementPlan {
  std::vector<PauliTerm> terms;
  int settings_count = 0;  // terms with at least one non-identity letter
};

/// Tr(H rho); negative values certify entanglement across the witness cut.
double evaluate(const Witness& w, const DensityMatrix& rho);
double evaluate(const Witness& w, const PureState& psi);

struct PureWitnessResult {
  Witness witness;
  double mu_min;  // = -(product of the two largest Schmidt coefficients)
};

/// Optimal decomposable witness for an entangled pure state across `cut`.
/// Throws if psi is a product state across the cut.
PureWitnessResult pure_state_witness(const PureState& psi, const Bipartition& cut);

/// Optimal witness for NPT states in 2x2 or 2x3: the partial transpose of the
/// minimal eigenvector projector. Throws on PPT input.
PureWitnessResult low_dim_optimal_witness(const DensityMatrix& rho);

struct ProductInfimumResult {
  double value;                   // best value found; upper bound on the infimum
  Vec argmin;                     // product vector attaining it
  std::vector<Vec> local_vectors;
  std::vector<std::pair<double, Vec>> restart_minima;  // per-restart converged values
  int restarts = 0;
  std::uint64_t seed = 0;
};

/// Alternating local eigenvector descent for inf <prod| h |prod> over product
/// states of `layout`. The result is an upper bound on the true infimum.
ProductInfimumResult product_infimum(const Mat& h, const Dims& layout,
                                     int restarts, std::uint64_t seed);

/// Three-step construction of an indecomposable witness for a PPT entangled
/// state from a decomposable seed with Tr(seed rho) = 0 and Tr seed = 1.
Witness indecomposable_witness(const DensityMatrix& rho, const Witness& seed,
                               int restarts, std::uint64_t rng_seed);

/// Largest trace-norm perturbation for which detection stays guaranteed:
/// -Tr(H rho)/sqrt(Tr H^2). Throws unless evaluate(w, rho) < 0.
double robustness_radius(const Witness& w, const DensityMatrix& rho);

/// Pauli-string expansion c_s = Tr(H sigma_s)/2^n on all-qubit layouts.
MeasurementPlan pauli_decompose(const Witness& w);

/// Rebuild the observable from a plan (exact on Hermitian qubit observables).
Mat reconstruct(const MeasurementPlan& plan, int qubits);

/// The 2x2 Pauli matrices by letter (I, X, Y, Z).
Mat pauli_matrix(char letter);

}  // namespace witnesskit
