#pragma once

#include "witnesskit/types.hpp"

namespace witnesskit {

/// Kronecker product, party 0 leftmost (row-major composite indexing).
Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

/// Reorder tensor factors of a matrix: `perm[new_slot] = old_party`.
Mat permute_parties(const Mat& m, const Dims& layout, const std::vector<int>& perm);
Vec permute_parties(const Vec& v, const Dims& layout, const std::vector<int>& perm);

/// Trace out the given parties. Surviving parties keep their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& traced);
Mat partial_trace(const Mat& m, const Dims& layout, const std::vector<int>& traced);

/// Transpose the factors in `subset` in the computational basis.
/// Exact entry rearrangement: involutive, trace- and Hermiticity-preserving.
Mat partial_transpose(const Mat& m, const Dims& layout, const std::vector<int>& subset);

struct EigResult {
  RealVec values;  // ascending
  Mat vectors;     // columns, orthonormal
};

/// Eigendecomposition of a Hermitian matrix; throws on non-Hermitian input.
EigResult hermitian_eig(const Mat& m);

/// Smallest eigenvalue and a deterministic eigenvector: within a degenerate
/// subspace the phase-fixed, lexicographically smallest column is chosen.
std::pair<double, Vec> min_eigpair(const Mat& m);

/// Phase convention: first component with |z| > eps made real positive.
Vec canonical_phase(Vec v);

struct SchmidtResult {
  RealVec coefficients;  // nonnegative, descending
  Mat left;              // columns |a_i> on side A of the cut
  Mat right;             // columns |b_i> on side B
};

/// Schmidt decomposition of `psi` across `cut`.
SchmidtResult schmidt(const PureState& psi, const Bipartition& cut);

/// Sum of singular values.
double trace_norm(const Mat& m);

/// Matrix log of a Hermitian positive definite matrix (natural log).
Mat herm_log(const Mat& m);
/// Matrix exponential of a Hermitian matrix.
Mat herm_exp(const Mat& m);

/// View a multiparty state as bipartite across `cut`: parties of side A are
/// grouped (in their original order) into one factor, side B into the other.
DensityMatrix bipartite_view(const DensityMatrix& rho, const Bipartition& cut);
PureState bipartite_view(const PureState& psi, const Bipartition& cut);

bool is_hermitian(const Mat& m, double tau = tol::herm);

}  // namespace witnesskit
