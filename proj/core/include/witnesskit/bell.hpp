#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witnesskit/types.hpp"
#include "witnesskit/witness.hpp"

namespace witnesskit {

/// One pair of measurement directions (a, a') per party; unit 3-vectors.
struct DirectionSet {
  std::vector<std::pair<Eigen::Vector3d, Eigen::Vector3d>> parties;

  int size() const { return static_cast<int>(parties.size()); }
  void validate() const;
};

/// a . sigma for a unit vector a.
Mat direction_operator(const Eigen::Vector3d& a);

/// Bell-CHSH operator a.s x (b+b').s + a'.s x (b-b').s on two qubits.
Mat chsh_operator(const DirectionSet& d);

/// Recursive n-party Bell-Klyshko operator; n = 2 is exactly CHSH.
Mat klyshko_operator(int n, const DirectionSet& d);

struct BellOptimum {
  double value;  // lower bound on the true maximum
  DirectionSet directions;
  int restarts;
  std::uint64_t seed;
};

/// Maximize Tr(B_n rho) by cyclic coordinate ascent over spherical angles
/// with golden-section line search.
BellOptimum bell_optimize(const DensityMatrix& rho, int restarts, std::uint64_t seed);

/// H = (2/sqrt(n)) 1 - i [a_bar, c] with a_bar = (1/n) sum_i a_i.
/// Unnormalized bound-form witness; throws if any operator norm exceeds 1.
Witness janzing_witness(int n, const std::vector<Mat>& a_ops, const Mat& c);

/// Commutator form i[a_bar, c] used by the Janzing bound.
Mat janzing_commutator(int n, const std::vector<Mat>& a_ops, const Mat& c);

/// Pauli-string element of an abelian stabilizer group with its target
/// eigenvalue.
struct StabilizerElement {
  std::string pauli;  // letters in {I,X,Y,Z}, one per party
  int target;         // +1 or -1
};

struct StabilizerSpec {
  std::vector<StabilizerElement> generators;
  std::vector<StabilizerElement> derived;
};

/// A +-1 value per local symbol (party, letter).
using LocalAssignment = std::map<std::pair<int, char>, int>;

/// Exhaustive search for a local-realistic +-1 assignment reproducing every
/// target eigenvalue. Returns nullopt when no assignment exists. Throws when
/// more than 16 local symbols appear, when generators fail to commute, or when
/// a derived element is not (up to sign) a product of generators.
std::optional<LocalAssignment> lhv_assignment_search(const StabilizerSpec& spec);

/// Dense operator of a Pauli string.
Mat pauli_string_operator(const std::string& s);

}  // namespace witnesskit
