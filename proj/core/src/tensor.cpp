#include "witnesskit/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace witnesskit {

namespace {

std::vector<int> strides_of(const Dims& layout) {
  const int n = layout.parties();
  std::vector<int> s(static_cast<std::size_t>(n));
  int acc = 1;
  for (int k = n - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = acc;
    acc *= layout[k];
  }
  return s;
}

void decode(int index, const Dims& layout, const std::vector<int>& strides,
            std::vector<int>& out) {
  for (int k = 0; k < layout.parties(); ++k) {
    out[static_cast<std::size_t>(k)] = index / strides[static_cast<std::size_t>(k)];
    index %= strides[static_cast<std::size_t>(k)];
  }
}

}  // namespace

Bipartition Bipartition::make(std::vector<int> a, int parties) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty() || static_cast<int>(a.size()) >= parties)
    throw std::invalid_argument("Bipartition: side A must be nonempty and proper");
  for (int k : a)
    if (k < 0 || k >= parties)
      throw std::invalid_argument("Bipartition: party index out of range");
  Bipartition cut;
  cut.side_a = std::move(a);
  for (int k = 0; k < parties; ++k)
    if (!std::binary_search(cut.side_a.begin(), cut.side_a.end(), k))
      cut.side_b.push_back(k);
  return cut;
}

std::string Bipartition::label() const {
  std::string s;
  for (int k : side_a) s += static_cast<char>('A' + k);
  s += '|';
  for (int k : side_b) s += static_cast<char>('A' + k);
  return s;
}

bool is_hermitian(const Mat& m, double tau) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.norm());
  return (m - m.adjoint()).norm() <= tau * scale;
}

DensityMatrix::DensityMatrix(Mat m, Dims d, bool validate)
    : matrix(std::move(m)), layout(std::move(d)) {
  if (matrix.rows() != matrix.cols() || matrix.rows() != layout.total())
    throw std::invalid_argument("DensityMatrix: shape does not match layout");
  if (validate) {
    if (!is_hermitian(matrix))
      throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(matrix.trace().real() - 1.0) > 1e-8 ||
        std::abs(matrix.trace().imag()) > tol::trace)
      throw std::invalid_argument("DensityMatrix: trace != 1");
    Eigen::SelfAdjointEigenSolver<Mat> es(matrix, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol::psd)
      throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                  std::to_string(es.eigenvalues().minCoeff()));
  }
}

PureState::PureState(Vec v, Dims d, bool validate)
    : amplitudes(std::move(v)), layout(std::move(d)) {
  if (amplitudes.size() != layout.total())
    throw std::invalid_argument("PureState: length does not match layout");
  if (validate && std::abs(amplitudes.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("PureState: not normalized");
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Vec permute_parties(const Vec& v, const Dims& layout, const std::vector<int>& perm) {
  const int n = layout.parties();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute_parties: bad permutation length");
  std::vector<int> new_dims(perm.size());
  for (int k = 0; k < n; ++k)
    new_dims[static_cast<std::size_t>(k)] = layout[perm[static_cast<std::size_t>(k)]];
  const Dims out_layout(new_dims);
  const auto in_strides = strides_of(layout);
  const auto out_strides = strides_of(out_layout);
  Vec out(v.size());
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < v.size(); ++i) {
    decode(i, layout, in_strides, idx);
    int j = 0;
    for (int k = 0; k < n; ++k)
      j += idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] *
           out_strides[static_cast<std::size_t>(k)];
    out(j) = v(i);
  }
  return out;
}

Mat permute_parties(const Mat& m, const Dims& layout, const std::vector<int>& perm) {
  const int n = layout.parties();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute_parties: bad permutation length");
  std::vector<int> new_dims(perm.size());
  for (int k = 0; k < n; ++k)
    new_dims[static_cast<std::size_t>(k)] = layout[perm[static_cast<std::size_t>(k)]];
  const Dims out_layout(new_dims);
  const auto in_strides = strides_of(layout);
  const auto out_strides = strides_of(out_layout);
  const int d = layout.total();
  std::vector<int> map(static_cast<std::size_t>(d));
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < d; ++i) {
    decode(i, layout, in_strides, idx);
    int j = 0;
    for (int k = 0; k < n; ++k)
      j += idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] *
           out_strides[static_cast<std::size_t>(k)];
    map[static_cast<std::size_t>(i)] = j;
  }
  Mat out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]) = m(i, j);
  return out;
}

Mat partial_trace(const Mat& m, const Dims& layout, const std::vector<int>& traced) {
  const int n = layout.parties();
  std::vector<int> tr = traced;
  std::sort(tr.begin(), tr.end());
  tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
  if (tr.empty()) return m;
  if (static_cast<int>(tr.size()) >= n)
    throw std::invalid_argument("partial_trace: cannot trace out all parties");
  std::vector<int> kept;
  for (int k = 0; k < n; ++k)
    if (!std::binary_search(tr.begin(), tr.end(), k)) kept.push_back(k);

  const auto strides = strides_of(layout);
  const int d_keep = layout.total_of(kept);
  const int d_tr = layout.total_of(tr);

  // Flat offsets of the kept / traced multi-indices within the full index.
  const Dims keep_layout([&] {
    std::vector<int> d;
    for (int k : kept) d.push_back(layout[k]);
    return d;
  }());
  const Dims tr_layout([&] {
    std::vector<int> d;
    for (int k : tr) d.push_back(layout[k]);
    return d;
  }());
  const auto keep_strides = strides_of(keep_layout);
  const auto tr_strides = strides_of(tr_layout);

  std::vector<int> keep_offsets(static_cast<std::size_t>(d_keep));
  std::vector<int> idx(kept.size());
  for (int i = 0; i < d_keep; ++i) {
    decode(i, keep_layout, keep_strides, idx);
    int off = 0;
    for (std::size_t k = 0; k < kept.size(); ++k)
      off += idx[k] * strides[static_cast<std::size_t>(kept[k])];
    keep_offsets[static_cast<std::size_t>(i)] = off;
  }
  std::vector<int> tr_offsets(static_cast<std::size_t>(d_tr));
  idx.assign(tr.size(), 0);
  for (int i = 0; i < d_tr; ++i) {
    decode(i, tr_layout, tr_strides, idx);
    int off = 0;
    for (std::size_t k = 0; k < tr.size(); ++k)
      off += idx[k] * strides[static_cast<std::size_t>(tr[k])];
    tr_offsets[static_cast<std::size_t>(i)] = off;
  }

  Mat out = Mat::Zero(d_keep, d_keep);
  for (int i = 0; i < d_keep; ++i)
    for (int j = 0; j < d_keep; ++j) {
      Complex s = 0.0;
      for (int t = 0; t < d_tr; ++t)
        s += m(keep_offsets[static_cast<std::size_t>(i)] + tr_offsets[static_cast<std::size_t>(t)],
               keep_offsets[static_cast<std::size_t>(j)] + tr_offsets[static_cast<std::size_t>(t)]);
      out(i, j) = s;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& traced) {
  std::vector<int> tr = traced;
  std::sort(tr.begin(), tr.end());
  tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
  std::vector<int> kept_dims;
  for (int k = 0; k < rho.layout.parties(); ++k)
    if (!std::binary_search(tr.begin(), tr.end(), k))
      kept_dims.push_back(rho.layout[k]);
  if (kept_dims.empty())
    throw std::invalid_argument("partial_trace: cannot trace out all parties");
  return DensityMatrix(partial_trace(rho.matrix, rho.layout, tr), Dims(kept_dims), false);
}

Mat partial_transpose(const Mat& m, const Dims& layout, const std::vector<int>& subset) {
  const int n = layout.parties();
  std::vector<int> sub = subset;
  std::sort(sub.begin(), sub.end());
  const auto strides = strides_of(layout);
  const int d = layout.total();
  Mat out(d, d);
  std::vector<int> ri(static_cast<std::size_t>(n)), ci(static_cast<std::size_t>(n));
  for (int i = 0; i < d; ++i) {
    decode(i, layout, strides, ri);
    for (int j = 0; j < d; ++j) {
      decode(j, layout, strides, ci);
      int ii = 0, jj = 0;
      for (int k = 0; k < n; ++k) {
        const bool swap = std::binary_search(sub.begin(), sub.end(), k);
        const int rk = swap ? ci[static_cast<std::size_t>(k)] : ri[static_cast<std::size_t>(k)];
        const int ck = swap ? ri[static_cast<std::size_t>(k)] : ci[static_cast<std::size_t>(k)];
        ii += rk * strides[static_cast<std::size_t>(k)];
        jj += ck * strides[static_cast<std::size_t>(k)];
      }
      out(ii, jj) = m(i, j);
    }
  }
  return out;
}

EigResult hermitian_eig(const Mat& m) {
  if (!is_hermitian(m))
    throw std::invalid_argument("hermitian_eig: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

Vec canonical_phase(Vec v) {
  constexpr double eps = 1e-12;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > eps) {
      v *= std::conj(v(i)) / a;
      break;
    }
  }
  return v;
}

namespace {

// Lexicographic order on (re, im) pairs, with a small tolerance so that
// numerically equal components do not decide the order.
bool lex_less(const Vec& a, const Vec& b) {
  constexpr double eps = 1e-9;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() < b(i).real() - eps) return true;
    if (a(i).real() > b(i).real() + eps) return false;
    if (a(i).imag() < b(i).imag() - eps) return true;
    if (a(i).imag() > b(i).imag() + eps) return false;
  }
  return false;
}

}  // namespace

std::pair<double, Vec> min_eigpair(const Mat& m) {
  const EigResult eig = hermitian_eig(m);
  const double lam = eig.values(0);
  const double scale = std::max(1.0, m.norm());
  Vec best = canonical_phase(eig.vectors.col(0));
  for (Eigen::Index k = 1; k < eig.values.size(); ++k) {
    if (eig.values(k) > lam + tol::eig * scale) break;
    Vec cand = canonical_phase(eig.vectors.col(k));
    if (lex_less(cand, best)) best = std::move(cand);
  }
  return {lam, std::move(best)};
}

PureState bipartite_view(const PureState& psi, const Bipartition& cut) {
  std::vector<int> perm = cut.side_a;
  perm.insert(perm.end(), cut.side_b.begin(), cut.side_b.end());
  Vec v = permute_parties(psi.amplitudes, psi.layout, perm);
  const int da = psi.layout.total_of(cut.side_a);
  const int db = psi.layout.total_of(cut.side_b);
  return PureState(std::move(v), Dims({da, db}), false);
}

DensityMatrix bipartite_view(const DensityMatrix& rho, const Bipartition& cut) {
  std::vector<int> perm = cut.side_a;
  perm.insert(perm.end(), cut.side_b.begin(), cut.side_b.end());
  Mat m = permute_parties(rho.matrix, rho.layout, perm);
  const int da = rho.layout.total_of(cut.side_a);
  const int db = rho.layout.total_of(cut.side_b);
  return DensityMatrix(std::move(m), Dims({da, db}), false);
}

SchmidtResult schmidt(const PureState& psi, const Bipartition& cut) {
  const PureState bi = bipartite_view(psi, cut);
  const int da = bi.layout[0];
  const int db = bi.layout[1];
  Mat coeff(da, db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) coeff(i, j) = bi.amplitudes(i * db + j);
  Eigen::JacobiSVD<Mat> svd(coeff, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtResult out;
  out.coefficients = svd.singularValues();
  out.left = svd.matrixU();
  out.right = svd.matrixV().conjugate();
  return out;
}

double trace_norm(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().sum();
}

Mat herm_log(const Mat& m) {
  const EigResult eig = hermitian_eig(m);
  const double scale = std::max(1.0, m.norm());
  if (eig.values(0) <= tol::pd * scale)
    throw std::invalid_argument("herm_log: requires full rank (positive definite input)");
  RealVec logs = eig.values.array().log();
  return eig.vectors * logs.asDiagonal() * eig.vectors.adjoint();
}

Mat herm_exp(const Mat& m) {
  const EigResult eig = hermitian_eig(m);
  RealVec exps = eig.values.array().exp();
  return eig.vectors * exps.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace witnesskit
