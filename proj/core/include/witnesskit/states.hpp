#pragma once

#include <map>
#include <optional>
#include <string>

#include "witnesskit/types.hpp"

namespace witnesskit {

/// |Psi^-> = (|01> - |10>)/sqrt(2) on two qubits.
PureState singlet();

/// (1/sqrt(n)) sum_i |i,i> on n x n.
PureState maximally_entangled(int n);

/// n-party cat state (|0...0> + sign |1...1>)/sqrt(2), sign in {+1, -1}.
PureState ghz(int n, int sign = +1);

/// (|001> + |010> + |100>)/sqrt(3).
PureState w_state();

struct WernerState {
  DensityMatrix state;
  /// Set iff n > 2 and lambda >= 2/(n-2).
  bool conjectured_nondistillable = false;
};

/// Werner family on n x n; throws if lambda is outside the PSD range,
/// reporting the offending minimum eigenvalue.
WernerState werner(int n, double lambda);

/// p |Psi><Psi| + (1-p)/d on n x n, |Psi> maximally entangled.
DensityMatrix isotropic(int n, double p);

/// The four product vectors |000>, |-+1>, |+1->, |1-+> of the Shifts UPB.
std::vector<PureState> shifts_upb();

/// (1 - sum_i |v_i><v_i|)/4 on three qubits; rank 4, PPT across every cut.
DensityMatrix shifts_state();

/// Four-qubit mixture: with probability 1/4, parties (A,C) and (B,D) each
/// share the same Bell state. Party order in the layout is A,B,C,D.
DensityMatrix bell_mixture_acbd();

/// 1_A/d x |Psi^+><Psi^+| x 1_B/d on layout [d, n, n, d]; requires d > n.
DensityMatrix padded_counterexample(int n, int d);

/// Catalog lookup used by the CLI: name plus named parameters.
struct CatalogEntry {
  std::string name;
  std::optional<PureState> pure;
  std::optional<DensityMatrix> mixed;
  std::map<std::string, double> parameters;
};

/// Known names: singlet, max-entangled, ghz, w, werner, isotropic, shifts,
/// bell-mixture-acbd, padded-counterexample, bell-theta, product.
/// Throws std::invalid_argument (with the list of names) for unknown names.
CatalogEntry catalog_state(const std::string& name,
                           const std::map<std::string, double>& params);

std::vector<std::string> catalog_names();

}  // namespace witnesskit
