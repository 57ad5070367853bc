// End-to-end acceptance checks for the witnesskit library and CLI.
// Each numbered check prints one pass/fail line; the exit code is the number
// of failures.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "witnesskit/bell.hpp"
#include "witnesskit/criteria.hpp"
#include "witnesskit/multiparty.hpp"
#include "witnesskit/random.hpp"
#include "witnesskit/sos.hpp"
#include "witnesskit/states.hpp"
#include "witnesskit/tensor.hpp"
#include "witnesskit/witness.hpp"

using namespace witnesskit;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

void run(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, name, ok, detail);
}

PureState theta_state(double th) {
  Vec v(4);
  v << std::cos(th), 0, 0, std::sin(th);
  return PureState(v, Dims({2, 2}), false);
}

std::string run_cli(const std::string& args, int& exit_code) {
  std::string cmd = std::string(WITNESSKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::ostringstream out;
  if (!p) {
    exit_code = -1;
    return "";
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.write(buf.data(), n);
  int status = pclose(p);
  exit_code = WEXITSTATUS(status);
  return out.str();
}

const Bipartition kCut2 = Bipartition::make({0}, 2);

}  // namespace

int main() {
  run(1, "partial transpose fixture", [](std::string& d) {
    Vec b(4);
    b << 1, 0, 0, 1;
    Mat pt = partial_transpose(b * b.adjoint(), Dims({2, 2}), {1});
    Vec v(4);
    v << 0, 1, -1, 0;
    v /= std::sqrt(2.0);
    double resid = (pt * v + v).norm();
    d = "residual " + std::to_string(resid);
    return resid < 1e-10;
  });

  run(2, "optimal two-qubit witness family", [](std::string& d) {
    Mat ref = Mat::Zero(4, 4);
    ref(1, 1) = 0.5;
    ref(2, 2) = 0.5;
    ref(0, 3) = -0.5;
    ref(3, 0) = -0.5;
    for (double th : {M_PI / 8, M_PI / 4, 3 * M_PI / 8}) {
      auto r = pure_state_witness(theta_state(th), kCut2);
      if ((r.witness.observable - ref).norm() > 1e-12) {
        d = "matrix mismatch at theta=" + std::to_string(th);
        return false;
      }
      double val = evaluate(r.witness, theta_state(th));
      if (std::abs(val + std::cos(th) * std::sin(th)) > 1e-12) {
        d = "value mismatch at theta=" + std::to_string(th);
        return false;
      }
    }
    auto plan = pauli_decompose(pure_state_witness(theta_state(M_PI / 4), kCut2).witness);
    std::map<std::string, double> got;
    for (const auto& t : plan.terms) got[t.pauli] = t.coeff;
    std::map<std::string, double> want{{"II", 0.25}, {"YY", 0.25}, {"XX", -0.25}, {"ZZ", -0.25}};
    if (got.size() != want.size()) return false;
    for (const auto& [k, c] : want)
      if (!got.count(k) || std::abs(got[k] - c) > 1e-14) return false;
    return true;
  });

  run(3, "CNOT localization of the witness", [](std::string& d) {
    // Target: 1/4 (1 - X) x (1 - Z). No unitary conjugation can reach it from
    // the optimal witness: the witness spectrum is {-1/2, 1/2, 1/2, 1/2} while
    // the target is a rank-one projector with spectrum {1, 0, 0, 0}. The check
    // is kept literal and reports the closest CNOT convention.
    Mat h = pure_state_witness(theta_state(M_PI / 4), kCut2).witness.observable;
    Mat one_minus_x = Mat::Identity(2, 2) - pauli_matrix('X');
    Mat one_minus_z = Mat::Identity(2, 2) - pauli_matrix('Z');
    Mat expect = 0.25 * kron(one_minus_x, one_minus_z);
    Mat cnot_ab = Mat::Zero(4, 4);
    cnot_ab(0, 0) = cnot_ab(1, 1) = cnot_ab(2, 3) = cnot_ab(3, 2) = 1.0;
    Mat cnot_ba = Mat::Zero(4, 4);
    cnot_ba(0, 0) = cnot_ba(2, 2) = cnot_ba(1, 3) = cnot_ba(3, 1) = 1.0;
    double err = std::min((cnot_ab * h * cnot_ab.adjoint() - expect).norm(),
                          (cnot_ba * h * cnot_ba.adjoint() - expect).norm());
    d = "norm error " + std::to_string(err) +
        "; spectra differ ({-1/2,1/2,1/2,1/2} vs {1,0,0,0}), so the stated "
        "product form is unreachable by conjugation";
    return err < 1e-12;
  });

  run(4, "witness normalization and robustness sweep", [](std::string& d) {
    for (int n : {2, 3, 4}) {
      auto r = pure_state_witness(maximally_entangled(n), kCut2);
      if (std::abs(std::sqrt(r.witness.observable.squaredNorm()) - 1.0) > 1e-12) {
        d = "HS norm off at n=" + std::to_string(n);
        return false;
      }
    }
    auto w = pure_state_witness(theta_state(M_PI / 4), kCut2);
    DensityMatrix bell = theta_state(M_PI / 4).projector();
    if (std::abs(robustness_radius(w.witness, bell) - 0.5) > 1e-12) {
      d = "radius not 1/2";
      return false;
    }
    for (double s = 0.01; s < 1.0; s += 0.01) {
      Mat pert = (1 - s) * bell.matrix + s * Mat::Identity(4, 4) / 4.0;
      if (trace_norm(pert - bell.matrix) > 0.45) break;
      if (evaluate(w.witness, DensityMatrix(pert, bell.layout, false)) >= 0.0) {
        d = "undetected inside the radius at s=" + std::to_string(s);
        return false;
      }
    }
    return true;
  });

  run(5, "Bell operator bounds and optimization", [](std::string& d) {
    auto s = bell_optimize(singlet().projector(), 8, 19);
    if (s.value < 2.0 * std::sqrt(2.0) - 1e-6) {
      d = "singlet value " + std::to_string(s.value);
      return false;
    }
    auto g = bell_optimize(ghz(3).projector(), 10, 23);
    if (g.value < 4.0 - 1e-4) {
      d = "ghz3 value " + std::to_string(g.value);
      return false;
    }
    double r = 1.0 / std::sqrt(2.0);
    DirectionSet chsh;
    chsh.parties.push_back({Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0)});
    chsh.parties.push_back({Eigen::Vector3d(r, r, 0), Eigen::Vector3d(r, -r, 0)});
    if ((klyshko_operator(2, chsh) - chsh_operator(chsh)).norm() != 0.0) {
      d = "klyshko n=2 differs from CHSH";
      return false;
    }
    Rng rng(29);
    std::normal_distribution<double> gauss;
    for (int t = 0; t < 1000; ++t) {
      DirectionSet ds;
      for (int p = 0; p < 2; ++p) {
        Eigen::Vector3d a(gauss(rng), gauss(rng), gauss(rng));
        Eigen::Vector3d b(gauss(rng), gauss(rng), gauss(rng));
        ds.parties.push_back({a.normalized(), b.normalized()});
      }
      DensityMatrix sep = random_separable_state(Dims({2, 2}), 3, rng);
      double val = (chsh_operator(ds) * sep.matrix).trace().real();
      if (val > 2.0 + 1e-9) {
        d = "separable state above 2: " + std::to_string(val);
        return false;
      }
    }
    return true;
  });

  run(6, "no local assignment for the GHZ stabilizers", [](std::string&) {
    StabilizerSpec spec;
    spec.generators = {{"XYY", +1}, {"YXY", +1}, {"YYX", +1}};
    spec.derived = {{"XXX", -1}};
    return !lhv_assignment_search(spec).has_value();
  });

  run(7, "commutator witness values and bound", [](std::string& d) {
    Mat one = Mat::Zero(2, 2);
    one(1, 1) = 1.0;  // local |1><1| per qubit
    for (int n = 2; n <= 8; ++n) {
      std::vector<Mat> a_ops(static_cast<std::size_t>(n), one);
      int dim = 1 << n;
      Mat c = Mat::Zero(dim, dim);
      c(0, dim - 1) = Complex(0, 1);
      c(dim - 1, 0) = Complex(0, -1);
      Witness w = janzing_witness(n, a_ops, c);
      Vec g = ghz(n).amplitudes;
      double val = (g.adjoint() * w.observable * g)(0).real();
      if (std::abs(val - (2.0 / std::sqrt(double(n)) - 1.0)) > 1e-12) {
        d = "value off at n=" + std::to_string(n);
        return false;
      }
      if (n == 3) {
        Mat comm = janzing_commutator(n, a_ops, c);
        Rng rng(31);
        for (int t = 0; t < 1000; ++t) {
          DensityMatrix sep = random_separable_state(Dims({2, 2, 2}), 3, rng);
          double b = std::abs((Complex(0, 1) * (comm * sep.matrix).trace()).real());
          if (b > 2.0 / std::sqrt(3.0) + 1e-9) {
            d = "separable bound exceeded: " + std::to_string(b);
            return false;
          }
        }
      }
    }
    return true;
  });

  run(8, "three-qubit bound entangled state suite", [](std::string& d) {
    DensityMatrix rho = shifts_state();
    for (int p = 0; p < 3; ++p) {
      Mat pt = partial_transpose(rho.matrix, rho.layout, {p});
      if (hermitian_eig(pt).values.minCoeff() < -1e-10) {
        d = "NPT on a cut";
        return false;
      }
    }
    if (numerical_rank(rho.matrix) != 4) {
      d = "rank != 4";
      return false;
    }
    for (std::uint64_t seed : {5, 6, 7, 8, 9}) {
      auto u = upb_check(shifts_upb(), Dims({2, 2, 2}), 200, seed);
      if (u.kind != UpbCheckResult::Kind::Upb || u.min_overlap <= 1e-6) {
        d = "upb not confirmed at seed " + std::to_string(seed);
        return false;
      }
    }
    auto cert = certify_nondistillable(rho, "unextendible product basis in the kernel");
    if (!cert.certified || !cert.bound_entangled) {
      d = "certificate missing";
      return false;
    }
    return true;
  });

  run(9, "four-party mixture cut spectrum signs", [](std::string& d) {
    DensityMatrix rho = bell_mixture_acbd();
    for (auto a : std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}}) {
      Mat pt = partial_transpose(rho.matrix, rho.layout, a);
      if (hermitian_eig(pt).values.minCoeff() < -1e-10) {
        d = "two-two cut NPT";
        return false;
      }
    }
    for (int p = 0; p < 4; ++p) {
      Mat pt = partial_transpose(rho.matrix, rho.layout, {p});
      if (hermitian_eig(pt).values.minCoeff() >= -1e-10) {
        d = "one-three cut PPT";
        return false;
      }
    }
    return true;
  });

  run(10, "criterion implication properties", [](std::string& d) {
    Rng rng(37);
    std::vector<Dims> layouts{Dims({2, 2}), Dims({2, 3}), Dims({3, 3})};
    for (int t = 0; t < 1000; ++t) {
      const Dims& lay = layouts[static_cast<std::size_t>(t % 3)];
      DensityMatrix r = random_density_matrix(lay, rng);
      bool ppt = ppt_check(r, kCut2).status != Status::EntangledCertified;
      if (ppt && reduction_check(r, kCut2).status == Status::EntangledCertified) {
        d = "PPT state flagged by reduction";
        return false;
      }
      if (majorization_check(r, kCut2).status != Status::EntangledCertified &&
          entropic_check(r, kCut2, {0.0, 0.5, 1.0}).status == Status::EntangledCertified) {
        d = "majorized state flagged entropically";
        return false;
      }
      DensityMatrix sep = random_separable_state(lay, 4, rng);
      for (const auto& v :
           {ppt_check(sep, kCut2), reduction_check(sep, kCut2), entropic_check(sep, kCut2),
            majorization_check(sep, kCut2), rank_separability(sep, kCut2)}) {
        if (v.status == Status::EntangledCertified) {
          d = "separable state certified entangled by " + v.criterion;
          return false;
        }
      }
    }
    return true;
  });

  run(11, "padded counterexample margins", [](std::string& d) {
    DensityMatrix sigma = padded_counterexample(2, 3);
    auto cut = Bipartition::make({0, 1}, 4);
    auto red = reduction_check(sigma, cut);
    auto maj = majorization_check(sigma, cut);
    if (red.status == Status::EntangledCertified || maj.status == Status::EntangledCertified) {
      d = "padded state flagged before tracing";
      return false;
    }
    double m1 = std::min(red.evidence.at("min_eigenvalue_a_side"),
                         red.evidence.at("min_eigenvalue_b_side"));
    double m2 = maj.evidence.at("min_partial_sum_margin");
    if (m1 < 1e-6 || m2 < -1e-12) {
      d = "satisfied margins too thin";
      return false;
    }
    Mat mid = partial_trace(sigma.matrix, sigma.layout, {0, 3});
    DensityMatrix pplus(mid, Dims({2, 2}), false);
    auto red2 = reduction_check(pplus, kCut2);
    auto maj2 = majorization_check(pplus, kCut2);
    if (red2.status != Status::EntangledCertified || maj2.status != Status::EntangledCertified) {
      d = "traced state not flagged";
      return false;
    }
    double v1 = std::min(red2.evidence.at("min_eigenvalue_a_side"),
                         red2.evidence.at("min_eigenvalue_b_side"));
    double v2 = maj2.evidence.at("min_partial_sum_margin");
    d = "violation margins " + std::to_string(v1) + ", " + std::to_string(v2);
    return v1 < -1e-6 && v2 < -1e-6;
  });

  run(12, "isotropic family threshold and eigenvector stability", [](std::string& d) {
    for (int n : {2, 3}) {
      double threshold = 1.0 / (n + 1.0);
      Vec ref;
      bool have_ref = false;
      for (int k = 0; k <= 100; ++k) {
        double p = k / 100.0;
        DensityMatrix iso = isotropic(n, p);
        Mat pt = partial_transpose(iso.matrix, iso.layout, {1});
        auto [mn, vec] = min_eigpair(pt);
        bool npt = mn < -1e-10;
        if (std::abs(p - threshold) < 1e-9) continue;  // skip the boundary point
        if (npt != (p > threshold)) {
          d = "threshold mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p);
          return false;
        }
        if (npt) {
          if (!have_ref) {
            ref = vec;
            have_ref = true;
          } else if (std::abs((ref.adjoint() * vec)(0)) < 1.0 - 1e-10) {
            d = "minimal eigenvector drifts with p at n=" + std::to_string(n);
            return false;
          }
        }
      }
    }
    return true;
  });

  run(13, "sum-of-squares round trip", [](std::string& d) {
    Rng rng(41);
    std::normal_distribution<double> g;
    for (int t = 0; t < 50; ++t) {
      int n = 2 + t % 2, m = 2 + (t / 2) % 2;
      Mat h = Mat::Zero(n * m, n * m);
      for (int k = 0; k < 3; ++k) {
        Vec a(n * m);
        for (int i = 0; i < n * m; ++i) a(i) = g(rng);
        h += a * a.adjoint();
      }
      auto r = sos_certificate(h, Dims({n, m}));
      if (!r.certificate) {
        d = "no certificate for a CP Choi matrix";
        return false;
      }
      auto f = biquadratic_from_witness(h, Dims({n, m}));
      if (verify_sos(f, *r.certificate, 100, 7 + t) > 1e-9) {
        d = "residual too large";
        return false;
      }
    }
    Mat w = Mat::Zero(4, 4);
    w(1, 1) = 0.5;
    w(2, 2) = 0.5;
    w(0, 3) = -0.5;
    w(3, 0) = -0.5;
    auto neg = sos_certificate(w, Dims({2, 2}));
    if (neg.certificate.has_value() || std::abs(neg.min_eigenvalue + 0.5) > 1e-10) {
      d = "witness Gram matrix not rejected with eigenvalue -1/2";
      return false;
    }
    return true;
  });

  run(14, "CLI determinism and exit codes", [](std::string& d) {
    int code = 0;
    std::string a = run_cli("analyze catalog:shifts --seed 7", code);
    if (code != 0) {
      d = "analyze exit " + std::to_string(code);
      return false;
    }
    std::string b = run_cli("analyze catalog:shifts --seed 7", code);
    if (a != b || a.empty()) {
      d = "reports differ between runs";
      return false;
    }
    run_cli("analyze /nonexistent-file.json", code);
    if (code != 2) {
      d = "missing file exit " + std::to_string(code);
      return false;
    }
    std::string tmp = "/tmp/witnesskit-badstate.json";
    {
      FILE* f = fopen(tmp.c_str(), "w");
      fputs(
          "{\"schema\":1,\"dims\":[2],\"matrix\":["
          "[{\"re\":1.5,\"im\":0.0},{\"re\":0.0,\"im\":0.0}],"
          "[{\"re\":0.0,\"im\":0.0},{\"re\":-0.5,\"im\":0.0}]]}",
          f);
      fclose(f);
    }
    run_cli(("analyze " + tmp).c_str(), code);
    if (code != 3) {
      d = "invariant violation exit " + std::to_string(code);
      return false;
    }
    run_cli("witness 'catalog:isotropic(3,0.9)' --method lowdim", code);
    if (code != 4) {
      d = "unsupported method exit " + std::to_string(code);
      return false;
    }
    return true;
  });

  std::cout << (failures == 0 ? "ALL CHECKS PASSED" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures;
}
