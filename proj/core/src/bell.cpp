#include "witnesskit/bell.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "witnesskit/random.hpp"
#include "witnesskit/tensor.hpp"

namespace witnesskit {

void DirectionSet::validate() const {
  for (const auto& [a, ap] : parties) {
    if (std::abs(a.norm() - 1.0) > 1e-12 || std::abs(ap.norm() - 1.0) > 1e-12)
      throw std::invalid_argument("DirectionSet: directions must be unit vectors");
  }
}

Mat direction_operator(const Eigen::Vector3d& a) {
  return a.x() * pauli_matrix('X') + a.y() * pauli_matrix('Y') +
         a.z() * pauli_matrix('Z');
}

Mat chsh_operator(const DirectionSet& d) {
  if (d.size() != 2)
    throw std::invalid_argument("chsh_operator: exactly two parties required");
  d.validate();
  const auto& [a, ap] = d.parties[0];
  const auto& [b, bp] = d.parties[1];
  return kron(direction_operator(a), direction_operator(b) + direction_operator(bp)) +
         kron(direction_operator(ap), direction_operator(b) - direction_operator(bp));
}

namespace {

DirectionSet swapped(const DirectionSet& d) {
  DirectionSet out;
  for (const auto& [a, ap] : d.parties) out.parties.emplace_back(ap, a);
  return out;
}

DirectionSet head(const DirectionSet& d, int n) {
  DirectionSet out;
  out.parties.assign(d.parties.begin(), d.parties.begin() + n);
  return out;
}

}  // namespace

Mat klyshko_operator(int n, const DirectionSet& d) {
  if (n < 2) throw std::invalid_argument("klyshko_operator: n >= 2 required");
  if (d.size() != n)
    throw std::invalid_argument("klyshko_operator: one direction pair per party");
  if (n == 2) return chsh_operator(d);
  const Mat prev = klyshko_operator(n - 1, head(d, n - 1));
  const Mat prev_primed = klyshko_operator(n - 1, swapped(head(d, n - 1)));
  const auto& [a, ap] = d.parties[static_cast<std::size_t>(n - 1)];
  const Mat sum = 0.5 * (direction_operator(a) + direction_operator(ap));
  const Mat diff = 0.5 * (direction_operator(a) - direction_operator(ap));
  return kron(prev, sum) + kron(prev_primed, diff);
}

namespace {

Eigen::Vector3d from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

// Golden-section maximization on [lo, hi] for a unimodal bracket.
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-10) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

BellOptimum bell_optimize(const DensityMatrix& rho, int restarts, std::uint64_t seed) {
  const int n = rho.layout.parties();
  for (int k = 0; k < n; ++k)
    if (rho.layout[k] != 2)
      throw std::invalid_argument("bell_optimize: qubit layout required");

  const double pi = std::acos(-1.0);
  auto value_of = [&](const std::vector<double>& angles) {
    DirectionSet d;
    for (int k = 0; k < n; ++k) {
      const std::size_t o = static_cast<std::size_t>(4 * k);
      d.parties.emplace_back(from_angles(angles[o], angles[o + 1]),
                             from_angles(angles[o + 2], angles[o + 3]));
    }
    return (klyshko_operator(n, d).cwiseProduct(rho.matrix.transpose())).sum().real();
  };

  BellOptimum best;
  best.value = -std::numeric_limits<double>::infinity();
  best.restarts = restarts;
  best.seed = seed;

  for (int r = 0; r < restarts; ++r) {
    Rng rng(seed + 0x2545f4914f6cdd1dULL * static_cast<std::uint64_t>(r));
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    std::vector<double> angles(static_cast<std::size_t>(4 * n));
    for (double& a : angles) a = u(rng);

    double cur = value_of(angles);
    for (int sweep = 0; sweep < 60; ++sweep) {
      const double before = cur;
      for (std::size_t i = 0; i < angles.size(); ++i) {
        auto f = [&](double x) {
          std::vector<double> trial = angles;
          trial[i] = x;
          return value_of(trial);
        };
        // Coarse scan to bracket the best lobe, then golden-section refine.
        double best_x = angles[i], best_f = cur;
        constexpr int kGrid = 24;
        for (int g = 0; g < kGrid; ++g) {
          const double x = 2.0 * pi * g / kGrid;
          const double fx = f(x);
          if (fx > best_f) {
            best_f = fx;
            best_x = x;
          }
        }
        const double step = 2.0 * pi / kGrid;
        const double refined = golden_max(f, best_x - step, best_x + step);
        if (f(refined) > cur) {
          angles[i] = refined;
          cur = f(refined);
        }
      }
      if (cur - before < 1e-12) break;
    }
    if (cur > best.value) {
      best.value = cur;
      DirectionSet d;
      for (int k = 0; k < n; ++k) {
        const std::size_t o = static_cast<std::size_t>(4 * k);
        d.parties.emplace_back(from_angles(angles[o], angles[o + 1]),
                               from_angles(angles[o + 2], angles[o + 3]));
      }
      best.directions = d;
    }
  }
  return best;
}

namespace {

double operator_norm(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().maxCoeff();
}

}  // namespace

Mat janzing_commutator(int n, const std::vector<Mat>& a_ops, const Mat& c) {
  if (static_cast<int>(a_ops.size()) != n)
    throw std::invalid_argument("janzing: one local operator per party");
  const int d = 1 << n;
  if (c.rows() != d || c.cols() != d)
    throw std::invalid_argument("janzing: c has wrong dimension");
  Mat abar = Mat::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    Mat term = (i == 0) ? a_ops[0] : Mat(Mat::Identity(2, 2));
    for (int k = 1; k < n; ++k)
      term = kron(term, (k == i) ? a_ops[static_cast<std::size_t>(i)]
                                 : Mat(Mat::Identity(2, 2)));
    abar += term / double(n);
  }
  return Complex(0, 1) * (abar * c - c * abar);
}

Witness janzing_witness(int n, const std::vector<Mat>& a_ops, const Mat& c) {
  for (const Mat& a : a_ops) {
    if (!is_hermitian(a) || operator_norm(a) > 1.0 + 1e-9)
      throw std::invalid_argument("janzing_witness: each a_i must be Hermitian with norm <= 1");
  }
  if (!is_hermitian(c) || operator_norm(c) > 1.0 + 1e-9)
    throw std::invalid_argument("janzing_witness: c must be Hermitian with norm <= 1");
  const int d = 1 << n;
  Witness w;
  w.observable = (2.0 / std::sqrt(double(n))) * Mat::Identity(d, d) -
                 janzing_commutator(n, a_ops, c);
  w.layout = Dims(std::vector<int>(static_cast<std::size_t>(n), 2));
  w.cut = Bipartition::make({0}, n);
  w.kind = WitnessKind::Decomposable;
  w.provenance = "unnormalized bound-form witness";
  return w;
}

Mat pauli_string_operator(const std::string& s) {
  Mat out = pauli_matrix(s.at(0));
  for (std::size_t k = 1; k < s.size(); ++k) out = kron(out, pauli_matrix(s[k]));
  return out;
}

namespace {

// Single-qubit Pauli product: returns (letter, phase) with phase in {1,i,-1,-i}
// encoded as an exponent of i.
std::pair<char, int> pauli_mul(char a, char b) {
  if (a == 'I') return {b, 0};
  if (b == 'I') return {a, 0};
  if (a == b) return {'I', 0};
  // XY=iZ, YZ=iX, ZX=iY; reversed order picks up -i.
  auto cyc = [](char x, char y) -> std::optional<char> {
    if (x == 'X' && y == 'Y') return 'Z';
    if (x == 'Y' && y == 'Z') return 'X';
    if (x == 'Z' && y == 'X') return 'Y';
    return std::nullopt;
  };
  if (auto r = cyc(a, b)) return {*r, 1};
  return {*cyc(b, a), 3};
}

bool strings_commute(const std::string& a, const std::string& b) {
  int anti = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 'I' && b[k] != 'I' && a[k] != b[k]) ++anti;
  return anti % 2 == 0;
}

// Product of two signed Pauli strings; phase exponent of i accumulated.
std::pair<std::string, int> string_mul(const std::string& a, const std::string& b) {
  std::string out(a.size(), 'I');
  int phase = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto [letter, p] = pauli_mul(a[k], b[k]);
    out[k] = letter;
    phase = (phase + p) % 4;
  }
  return {out, phase};
}

}  // namespace

std::optional<LocalAssignment> lhv_assignment_search(const StabilizerSpec& spec) {
  std::vector<StabilizerElement> all = spec.generators;
  all.insert(all.end(), spec.derived.begin(), spec.derived.end());
  if (all.empty()) throw std::invalid_argument("lhv_assignment_search: empty spec");
  const std::size_t parties = all.front().pauli.size();
  for (const auto& e : all)
    if (e.pauli.size() != parties || (e.target != 1 && e.target != -1))
      throw std::invalid_argument("lhv_assignment_search: malformed element");

  for (std::size_t i = 0; i < spec.generators.size(); ++i)
    for (std::size_t j = i + 1; j < spec.generators.size(); ++j)
      if (!strings_commute(spec.generators[i].pauli, spec.generators[j].pauli))
        throw std::invalid_argument("lhv_assignment_search: generators must commute");

  // Each derived string must be (up to a real sign) a product of generators.
  const std::size_t g = spec.generators.size();
  if (g > 12) throw std::invalid_argument("lhv_assignment_search: too many generators");
  for (const auto& e : spec.derived) {
    bool found = false;
    for (std::size_t mask = 0; mask < (1u << g) && !found; ++mask) {
      std::string prod(parties, 'I');
      int phase = 0;
      for (std::size_t i = 0; i < g; ++i)
        if (mask & (1u << i)) {
          auto [next, p] = string_mul(prod, spec.generators[i].pauli);
          prod = next;
          phase = (phase + p) % 4;
        }
      if (prod == e.pauli && phase % 2 == 0) found = true;
    }
    if (!found)
      throw std::invalid_argument(
          "lhv_assignment_search: derived element is not a product of generators");
  }

  // Collect local symbols in deterministic (party, letter) order.
  std::vector<std::pair<int, char>> symbols;
  for (const auto& e : all)
    for (std::size_t k = 0; k < parties; ++k)
      if (e.pauli[k] != 'I') {
        const std::pair<int, char> sym{static_cast<int>(k), e.pauli[k]};
        if (std::find(symbols.begin(), symbols.end(), sym) == symbols.end())
          symbols.push_back(sym);
      }
  std::sort(symbols.begin(), symbols.end());
  if (symbols.size() > 16)
    throw std::invalid_argument("lhv_assignment_search: more than 16 local symbols");

  for (std::uint32_t mask = 0; mask < (1u << symbols.size()); ++mask) {
    auto value = [&](int party, char letter) {
      const auto it = std::find(symbols.begin(), symbols.end(),
                                std::make_pair(party, letter));
      const std::size_t idx = static_cast<std::size_t>(it - symbols.begin());
      return (mask & (1u << idx)) ? -1 : 1;
    };
    bool ok = true;
    for (const auto& e : all) {
      int h = 1;
      for (std::size_t k = 0; k < parties; ++k)
        if (e.pauli[k] != 'I') h *= value(static_cast<int>(k), e.pauli[k]);
      if (h != e.target) {
        ok = false;
        break;
      }
    }
    if (ok) {
      LocalAssignment out;
      for (std::size_t i = 0; i < symbols.size(); ++i)
        out[symbols[i]] = (mask & (1u << i)) ? -1 : 1;
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace witnesskit
