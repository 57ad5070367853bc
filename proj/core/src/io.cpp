#include "witnesskit/io.hpp"

#include "witnesskit/sha256.hpp"

namespace witnesskit {

using nlohmann::json;

namespace {

json complex_json(const Complex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ParseError(where + ": expected {\"re\": .., \"im\": ..}");
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("matrix: expected nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError("matrix: ragged rows at row " + std::to_string(i));
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = complex_from(row.at(static_cast<std::size_t>(c)),
                             "matrix[" + std::to_string(i) + "][" + std::to_string(c) + "]");
  }
  return m;
}

StateFile parse_state_file(const json& doc) {
  if (!doc.is_object()) throw ParseError("state file: expected a JSON object");
  if (!doc.contains("dims") || !doc.at("dims").is_array())
    throw ParseError("state file: missing \"dims\" array");
  std::vector<int> dims;
  for (const json& d : doc.at("dims")) {
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw ParseError("state file: dims entries must be positive integers");
    dims.push_back(d.get<int>());
  }
  StateFile out;
  try {
    out.layout = Dims(dims);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("state file: ") + e.what());
  }
  const bool has_matrix = doc.contains("matrix");
  const bool has_vector = doc.contains("vector");
  if (has_matrix == has_vector)
    throw ParseError("state file: exactly one of \"matrix\" or \"vector\" required");
  if (has_matrix) {
    Mat m = matrix_from_json(doc.at("matrix"));
    if (m.rows() != m.cols() || m.rows() != out.layout.total())
      throw ParseError("state file: matrix shape does not match dims");
    out.matrix = std::move(m);
  } else {
    const json& v = doc.at("vector");
    if (!v.is_array() || static_cast<int>(v.size()) != out.layout.total())
      throw ParseError("state file: vector length does not match dims");
    Vec vec(out.layout.total());
    for (int i = 0; i < out.layout.total(); ++i)
      vec(i) = complex_from(v.at(static_cast<std::size_t>(i)),
                            "vector[" + std::to_string(i) + "]");
    out.vector = std::move(vec);
  }
  if (doc.contains("name")) out.name = doc.at("name").get<std::string>();
  if (doc.contains("parameters"))
    for (const auto& [key, val] : doc.at("parameters").items())
      out.parameters[key] = val.get<double>();
  return out;
}

json state_file_json(const StateFile& s) {
  json doc;
  doc["schema"] = 1;
  doc["dims"] = s.layout.dims;
  if (s.matrix) doc["matrix"] = matrix_json(*s.matrix);
  if (s.vector) {
    json v = json::array();
    for (Eigen::Index i = 0; i < s.vector->size(); ++i)
      v.push_back(complex_json((*s.vector)(i)));
    doc["vector"] = std::move(v);
  }
  if (!s.name.empty()) doc["name"] = s.name;
  if (!s.parameters.empty()) doc["parameters"] = s.parameters;
  return doc;
}

DensityMatrix StateFile::to_density() const {
  try {
    if (matrix) return DensityMatrix(*matrix, layout);
    PureState psi(*vector, layout);
    return psi.projector();
  } catch (const std::invalid_argument& e) {
    throw InvariantError(e.what());
  }
}

std::optional<PureState> StateFile::to_pure() const {
  if (!vector) return std::nullopt;
  try {
    return PureState(*vector, layout);
  } catch (const std::invalid_argument& e) {
    throw InvariantError(e.what());
  }
}

StateFile state_file_of(const DensityMatrix& rho, const std::string& name,
                        const std::map<std::string, double>& params) {
  StateFile s;
  s.layout = rho.layout;
  s.matrix = rho.matrix;
  s.name = name;
  s.parameters = params;
  return s;
}

StateFile state_file_of(const PureState& psi, const std::string& name,
                        const std::map<std::string, double>& params) {
  StateFile s;
  s.layout = psi.layout;
  s.vector = psi.amplitudes;
  s.name = name;
  s.parameters = params;
  return s;
}

json to_json(const Verdict& v) {
  return json{{"status", to_string(v.status)},
              {"criterion", v.criterion},
              {"evidence", v.evidence},
              {"tolerance_used", v.tolerance_used}};
}

json to_json(const MeasurementPlan& plan) {
  json terms = json::array();
  for (const PauliTerm& t : plan.terms)
    terms.push_back(json{{"pauli", t.pauli}, {"coeff", t.coeff}});
  return json{{"terms", std::move(terms)},
              {"settings_count", plan.settings_count}};
}

std::string canonical_dump(const json& j) {
  // nlohmann objects iterate in sorted key order and emit shortest
  // round-trip doubles, so a plain dump is already canonical.
  return j.dump();
}

std::string state_digest(const StateFile& s) {
  return sha256_hex(canonical_dump(state_file_json(s)));
}

}  // namespace witnesskit
