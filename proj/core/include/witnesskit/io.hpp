#pragma once

#include <map>
#include <optional>
#include <string>

#include "witnesskit/criteria.hpp"
#include "witnesskit/types.hpp"
#include "witnesskit/witness.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace witnesskit {

/// Malformed input document (schema or field level) -> CLI exit 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally valid input violating a state invariant -> CLI exit 3.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk state document: dims plus either a dense matrix or a vector.
struct StateFile {
  Dims layout;
  std::optional<Mat> matrix;
  std::optional<Vec> vector;
  std::string name;
  std::map<std::string, double> parameters;

  DensityMatrix to_density() const;    // projector for vector inputs
  std::optional<PureState> to_pure() const;
};

StateFile parse_state_file(const nlohmann::json& doc);
nlohmann::json state_file_json(const StateFile& s);

StateFile state_file_of(const DensityMatrix& rho, const std::string& name = "",
                        const std::map<std::string, double>& params = {});
StateFile state_file_of(const PureState& psi, const std::string& name = "",
                        const std::map<std::string, double>& params = {});

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const MeasurementPlan& plan);
nlohmann::json matrix_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& j);

/// Sorted-keys, shortest-float dump used for digests and byte-stable reports.
std::string canonical_dump(const nlohmann::json& j);

/// SHA-256 of the canonical serialization of a state document.
std::string state_digest(const StateFile& s);

}  // namespace witnesskit
