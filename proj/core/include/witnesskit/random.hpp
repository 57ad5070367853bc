#pragma once

#include <random>

#include "witnesskit/types.hpp"

namespace witnesskit {

using Rng = std::mt19937_64;

/// Haar-like random unit vector: i.i.d. complex Gaussians, normalized.
Vec random_unit_vector(int dim, Rng& rng);

/// Product pure state, each local factor uniform on its complex unit sphere.
Vec random_product_vector(const Dims& layout, Rng& rng);

/// Haar random unitary (QR of a Ginibre matrix with phase fix).
Mat random_unitary(int dim, Rng& rng);

/// Random full-rank density matrix (normalized G G^dagger).
DensityMatrix random_density_matrix(const Dims& layout, Rng& rng);

/// Convex mixture of `terms` random product projectors: separable by construction.
DensityMatrix random_separable_state(const Dims& layout, int terms, Rng& rng);

}  // namespace witnesskit
