#include "witnesskit/states.hpp"

#include <cmath>

#include "witnesskit/tensor.hpp"

namespace witnesskit {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Vec basis_vec(int dim, int k) {
  Vec v = Vec::Zero(dim);
  v(k) = 1.0;
  return v;
}

}  // namespace

PureState singlet() {
  Vec v = Vec::Zero(4);
  v(1) = kInvSqrt2;
  v(2) = -kInvSqrt2;
  return PureState(std::move(v), Dims({2, 2}), false);
}

PureState maximally_entangled(int n) {
  if (n < 2) throw std::invalid_argument("maximally_entangled: n must be >= 2");
  Vec v = Vec::Zero(n * n);
  for (int i = 0; i < n; ++i) v(i * n + i) = 1.0 / std::sqrt(double(n));
  return PureState(std::move(v), Dims({n, n}), false);
}

PureState ghz(int n, int sign) {
  if (n < 2) throw std::invalid_argument("ghz: n must be >= 2");
  if (sign != 1 && sign != -1) throw std::invalid_argument("ghz: sign must be +-1");
  const int d = 1 << n;
  Vec v = Vec::Zero(d);
  v(0) = kInvSqrt2;
  v(d - 1) = sign * kInvSqrt2;
  return PureState(std::move(v), Dims(std::vector<int>(static_cast<std::size_t>(n), 2)), false);
}

PureState w_state() {
  Vec v = Vec::Zero(8);
  v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
  return PureState(std::move(v), Dims({2, 2, 2}), false);
}

WernerState werner(int n, double lambda) {
  if (n < 2) throw std::invalid_argument("werner: n must be >= 2");
  const PureState psi = maximally_entangled(n);
  const Mat plus = psi.amplitudes * psi.amplitudes.adjoint();
  const Mat pt = partial_transpose(plus, psi.layout, {1});
  const double norm = lambda * (n * n - 1.0) - 1.0;
  if (norm <= 0)
    throw std::invalid_argument("werner: normalization factor nonpositive at this lambda");
  const int d = n * n;
  Mat rho = (lambda * Mat::Identity(d, d) - (lambda + 1.0) * pt) / norm;
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol::psd)
    throw std::invalid_argument("werner: lambda outside PSD range, min eigenvalue " +
                                std::to_string(min_eig));
  WernerState out;
  out.state = DensityMatrix(std::move(rho), psi.layout, false);
  out.conjectured_nondistillable = (n > 2) && (lambda >= 2.0 / (n - 2.0));
  return out;
}

DensityMatrix isotropic(int n, double p) {
  if (n < 2) throw std::invalid_argument("isotropic: n must be >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("isotropic: p must be in [0,1]");
  const PureState psi = maximally_entangled(n);
  const int d = n * n;
  Mat rho = p * (psi.amplitudes * psi.amplitudes.adjoint()).eval() +
            ((1.0 - p) / d) * Mat::Identity(d, d);
  return DensityMatrix(std::move(rho), psi.layout, false);
}

std::vector<PureState> shifts_upb() {
  const Vec zero = basis_vec(2, 0);
  const Vec one = basis_vec(2, 1);
  const Vec plus = kInvSqrt2 * (zero + one);
  const Vec minus = kInvSqrt2 * (zero - one);
  const Dims layout({2, 2, 2});
  std::vector<PureState> v;
  v.emplace_back(kron(kron(zero, zero), zero), layout, false);
  v.emplace_back(kron(kron(minus, plus), one), layout, false);
  v.emplace_back(kron(kron(plus, one), minus), layout, false);
  v.emplace_back(kron(kron(one, minus), plus), layout, false);
  return v;
}

DensityMatrix shifts_state() {
  Mat rho = Mat::Identity(8, 8);
  for (const PureState& v : shifts_upb())
    rho -= v.amplitudes * v.amplitudes.adjoint();
  rho /= 4.0;  // trace of the complement projector on dim 8 is 4
  return DensityMatrix(std::move(rho), Dims({2, 2, 2}), false);
}

DensityMatrix bell_mixture_acbd() {
  // Bell basis on a qubit pair.
  std::vector<Mat> bell(4, Mat::Zero(2, 2));
  bell[0](0, 0) = bell[0](1, 1) = kInvSqrt2;   // Phi+
  bell[1](0, 0) = kInvSqrt2;                   // Phi-
  bell[1](1, 1) = -kInvSqrt2;
  bell[2](0, 1) = bell[2](1, 0) = kInvSqrt2;   // Psi+
  bell[3](0, 1) = kInvSqrt2;                   // Psi-
  bell[3](1, 0) = -kInvSqrt2;

  Mat rho = Mat::Zero(16, 16);
  for (const Mat& b : bell) {
    Vec psi = Vec::Zero(16);
    // Layout order A,B,C,D; the Bell pairs are (A,C) and (B,D).
    for (int a = 0; a < 2; ++a)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d)
            psi(a * 8 + b2 * 4 + c * 2 + d) = b(a, c) * b(b2, d);
    rho += 0.25 * psi * psi.adjoint();
  }
  return DensityMatrix(std::move(rho), Dims({2, 2, 2, 2}), false);
}

DensityMatrix padded_counterexample(int n, int d) {
  if (d <= n) throw std::invalid_argument("padded_counterexample: requires d > n");
  const PureState psi = maximally_entangled(n);
  const Mat plus = psi.amplitudes * psi.amplitudes.adjoint();
  const Mat pad = Mat::Identity(d, d) / double(d);
  Mat rho = kron(kron(pad, plus), pad);
  return DensityMatrix(std::move(rho), Dims({d, n, n, d}), false);
}

std::vector<std::string> catalog_names() {
  return {"singlet",        "max-entangled", "ghz",     "w",
          "werner",         "isotropic",     "shifts",  "bell-mixture-acbd",
          "padded-counterexample", "bell-theta", "product"};
}

CatalogEntry catalog_state(const std::string& name,
                           const std::map<std::string, double>& params) {
  auto get = [&](const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  CatalogEntry e;
  e.name = name;
  if (name == "singlet") {
    e.pure = singlet();
  } else if (name == "max-entangled") {
    const int n = static_cast<int>(get("n", 2));
    e.pure = maximally_entangled(n);
    e.parameters["n"] = n;
  } else if (name == "ghz") {
    const int n = static_cast<int>(get("n", 3));
    const int sign = static_cast<int>(get("sign", 1));
    e.pure = ghz(n, sign);
    e.parameters["n"] = n;
    e.parameters["sign"] = sign;
  } else if (name == "w") {
    e.pure = w_state();
  } else if (name == "werner") {
    const int n = static_cast<int>(get("n", 3));
    const double lambda = get("lambda", 2.0);
    e.mixed = werner(n, lambda).state;
    e.parameters["n"] = n;
    e.parameters["lambda"] = lambda;
  } else if (name == "isotropic") {
    const int n = static_cast<int>(get("n", 2));
    const double p = get("p", 0.5);
    e.mixed = isotropic(n, p);
    e.parameters["n"] = n;
    e.parameters["p"] = p;
  } else if (name == "shifts") {
    e.mixed = shifts_state();
  } else if (name == "bell-mixture-acbd") {
    e.mixed = bell_mixture_acbd();
  } else if (name == "padded-counterexample") {
    const int n = static_cast<int>(get("n", 2));
    const int d = static_cast<int>(get("d", 3));
    e.mixed = padded_counterexample(n, d);
    e.parameters["n"] = n;
    e.parameters["d"] = d;
  } else if (name == "bell-theta") {
    const double theta = get("theta", std::atan(1.0));  // pi/4 default
    Vec v = Vec::Zero(4);
    v(0) = std::cos(theta);
    v(3) = std::sin(theta);
    e.pure = PureState(std::move(v), Dims({2, 2}), false);
    e.parameters["theta"] = theta;
  } else if (name == "product") {
    Vec v = Vec::Zero(4);
    v(1) = 1.0;
    e.pure = PureState(std::move(v), Dims({2, 2}), false);
  } else {
    std::string msg = "unknown catalog state '" + name + "'; available:";
    for (const std::string& s : catalog_names()) msg += " " + s;
    throw std::invalid_argument(msg);
  }
  return e;
}

}  // namespace witnesskit
