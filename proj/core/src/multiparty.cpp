#include "witnesskit/multiparty.hpp"

#include "witnesskit/tensor.hpp"
#include "witnesskit/witness.hpp"

namespace witnesskit {

std::vector<Bipartition> enumerate_cuts(int k) {
  if (k < 2 || k > 10)
    throw std::invalid_argument("enumerate_cuts: k must be in [2, 10]");
  std::vector<Bipartition> cuts;
  // Party 0 stays on side A so each cut appears once; bit i encodes party i+1.
  const int subsets = 1 << (k - 1);
  for (int mask = 0; mask < subsets; ++mask) {
    std::vector<int> side_a{0};
    for (int i = 1; i < k; ++i)
      if (mask & (1 << (i - 1))) side_a.push_back(i);
    if (static_cast<int>(side_a.size()) == k) continue;  // improper
    cuts.push_back(Bipartition::make(side_a, k));
  }
  return cuts;
}

CutReport cut_report(const DensityMatrix& rho) {
  CutReport report;
  for (const Bipartition& cut : enumerate_cuts(rho.layout.parties())) {
    std::vector<Verdict> verdicts;
    verdicts.push_back(ppt_check(rho, cut));
    verdicts.push_back(reduction_check(rho, cut));
    verdicts.push_back(entropic_check(rho, cut));
    verdicts.push_back(majorization_check(rho, cut));
    verdicts.push_back(rank_separability(rho, cut));
    if (verdicts.front().evidence.at("min_eigenvalue") < -tol::psd)
      report.ppt_on_all_cuts = false;
    for (const Verdict& v : verdicts)
      if (v.status == Status::EntangledCertified) report.entangled_somewhere = true;
    report.cuts.emplace_back(cut, std::move(verdicts));
  }
  return report;
}

namespace {

std::string pair_label(int i, int j) {
  return std::string{static_cast<char>('A' + i), static_cast<char>('A' + j)};
}

bool cut_separates(const Bipartition& cut, int i, int j) {
  const bool i_in_a =
      std::binary_search(cut.side_a.begin(), cut.side_a.end(), i);
  const bool j_in_a =
      std::binary_search(cut.side_a.begin(), cut.side_a.end(), j);
  return i_in_a != j_in_a;
}

}  // namespace

NondistillabilityCertificate certify_nondistillable(
    const DensityMatrix& rho, const std::string& external_entanglement_evidence) {
  const int k = rho.layout.parties();
  if (k < 3)
    throw std::invalid_argument("certify_nondistillable: needs at least 3 parties");
  const CutReport report = cut_report(rho);

  NondistillabilityCertificate cert;
  cert.certified = true;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool covered = false;
      for (const auto& [cut, verdicts] : report.cuts) {
        if (!cut_separates(cut, i, j)) continue;
        const Verdict& ppt = verdicts.front();
        const bool ok =
            ppt.evidence.at("min_eigenvalue") >= -tol::psd ||
            ppt.status == Status::SeparableCertified;
        if (ok) {
          cert.pair_cover[pair_label(i, j)] = cut.label();
          covered = true;
          break;
        }
      }
      if (!covered) {
        cert.certified = false;
        cert.uncovered_pairs.push_back(pair_label(i, j));
      }
    }

  if (cert.certified) {
    if (!external_entanglement_evidence.empty()) {
      cert.bound_entangled = true;
      cert.entanglement_evidence = external_entanglement_evidence;
    } else if (report.entangled_somewhere) {
      cert.bound_entangled = true;
      cert.entanglement_evidence = "criteria-battery";
    }
  }
  return cert;
}

UpbCheckResult upb_check(const std::vector<PureState>& vectors, const Dims& layout,
                         int restarts, std::uint64_t seed) {
  if (vectors.empty()) throw std::invalid_argument("upb_check: empty vector set");
  for (const PureState& v : vectors) {
    if (!(v.layout == layout))
      throw std::invalid_argument("upb_check: layout mismatch");
    // Product across every single-party cut (Schmidt rank 1).
    for (int k = 0; k < layout.parties(); ++k) {
      const SchmidtResult sd = schmidt(v, Bipartition::make({k}, layout.parties()));
      if (sd.coefficients.size() > 1 && sd.coefficients(1) > 1e-10)
        throw std::invalid_argument("upb_check: input vector is not a product state");
    }
  }
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (std::abs(vectors[i].amplitudes.dot(vectors[j].amplitudes)) > 1e-10)
        throw std::invalid_argument("upb_check: input vectors are not orthogonal");

  const int d = layout.total();
  Mat p = Mat::Zero(d, d);
  for (const PureState& v : vectors) p += v.amplitudes * v.amplitudes.adjoint();

  const ProductInfimumResult inf = product_infimum(p, layout, restarts, seed);
  UpbCheckResult out;
  out.min_overlap = inf.value;
  if (inf.value < 1e-10) {
    out.kind = UpbCheckResult::Kind::Extension;
    out.extension = PureState(inf.argmin, layout, false);
  } else if (inf.value > 1e-6) {
    out.kind = UpbCheckResult::Kind::Upb;
  } else {
    out.kind = UpbCheckResult::Kind::Inconclusive;
  }
  return out;
}

}  // namespace witnesskit
