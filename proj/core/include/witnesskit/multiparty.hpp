#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "witnesskit/criteria.hpp"
#include "witnesskit/types.hpp"

namespace witnesskit {

/// All 2^(k-1) - 1 bipartitions, canonical order: party 0 always on side A,
/// ascending by subset encoding.
std::vector<Bipartition> enumerate_cuts(int k);

struct CutReport {
  std::vector<std::pair<Bipartition, std::vector<Verdict>>> cuts;
  bool ppt_on_all_cuts = true;
  bool entangled_somewhere = false;
};

/// Run the full criteria battery (ppt, reduction, entropic, majorization,
/// rank) on every bipartition.
CutReport cut_report(const DensityMatrix& rho);

struct NondistillabilityCertificate {
  bool certified = false;
  /// pair label ("AB") -> label of a PPT-or-separable cut separating it.
  std::map<std::string, std::string> pair_cover;
  std::vector<std::string> uncovered_pairs;
  std::string basis = "PPT-based";  // separability is approximated by PPT
  /// Set when the report (or caller-supplied evidence) shows entanglement.
  bool bound_entangled = false;
  std::string entanglement_evidence;
};

/// Certified iff every unordered pair of parties is separated by some cut with
/// a PPT (or separable-certified) verdict.
NondistillabilityCertificate certify_nondistillable(
    const DensityMatrix& rho,
    const std::string& external_entanglement_evidence = "");

struct UpbCheckResult {
  enum class Kind { Upb, Extension, Inconclusive } kind;
  double min_overlap;                 // best see-saw value found
  std::optional<PureState> extension;  // product state orthogonal to all inputs
};

/// Decide whether pairwise-orthogonal product vectors form an unextendible
/// product basis by see-saw minimization of <prod| sum |v_i><v_i| |prod>.
UpbCheckResult upb_check(const std::vector<PureState>& vectors, const Dims& layout,
                         int restarts, std::uint64_t seed);

}  // namespace witnesskit
