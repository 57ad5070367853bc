#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace witnesskit {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

/// Numeric tolerances, relative to the matrix norm where applicable.
namespace tol {
inline constexpr double herm = 1e-10;   // Hermiticity check
inline constexpr double trace = 1e-10;  // trace-one check
inline constexpr double psd = 1e-9;     // "eigenvalue >= 0" threshold
inline constexpr double eig = 1e-10;    // eigensolver residuals
inline constexpr double pd = 1e-12;     // strict positivity (logs)
}  // namespace tol

/// Ordered subsystem dimensions of a tensor-product space.
struct Dims {
  std::vector<int> dims;

  Dims() = default;
  Dims(std::initializer_list<int> d) : dims(d) { validate(); }
  explicit Dims(std::vector<int> d) : dims(std::move(d)) { validate(); }

  int parties() const { return static_cast<int>(dims.size()); }
  int total() const {
    return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
  }
  int operator[](int k) const { return dims[static_cast<std::size_t>(k)]; }

  /// Dimension of the composite system formed by `subset`.
  int total_of(const std::vector<int>& subset) const {
    int t = 1;
    for (int k : subset) t *= dims[static_cast<std::size_t>(k)];
    return t;
  }

  bool operator==(const Dims& o) const { return dims == o.dims; }

 private:
  void validate() const {
    if (dims.empty()) throw std::invalid_argument("Dims: empty layout");
    for (int d : dims)
      if (d < 1) throw std::invalid_argument("Dims: nonpositive dimension");
  }
};

/// A cut of the parties into two nonempty complementary sets.
struct Bipartition {
  std::vector<int> side_a;  // sorted, ascending
  std::vector<int> side_b;  // complement, sorted

  static Bipartition make(std::vector<int> a, int parties);

  /// "A|BC" style label with parties named A, B, C, ...
  std::string label() const;
};

struct DensityMatrix {
  Mat matrix;
  Dims layout;

  DensityMatrix() = default;
  DensityMatrix(Mat m, Dims d, bool validate = true);

  int dim() const { return static_cast<int>(matrix.rows()); }
};

struct PureState {
  Vec amplitudes;
  Dims layout;

  PureState() = default;
  PureState(Vec v, Dims d, bool validate = true);

  int dim() const { return static_cast<int>(amplitudes.size()); }
  DensityMatrix projector() const {
    return DensityMatrix(amplitudes * amplitudes.adjoint(), layout, false);
  }
};

}  // namespace witnesskit
