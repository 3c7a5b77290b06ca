#include "toricode/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace toricode {

namespace {

using nlohmann::json;

IntMat matrixFromJson(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw inputError(std::string(what) + " must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array())
    throw inputError(std::string(what) + " rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  IntMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw inputError(std::string(what) + " is ragged");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_number_integer())
        throw inputError(std::string(what) + " entries must be integers");
      m(i, c) = Int(cell.get<long long>());
    }
  }
  return m;
}

IntVec vectorFromJson(const json& j, const char* what) {
  if (!j.is_array())
    throw inputError(std::string(what) + " must be an array of integers");
  IntVec v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const auto& cell = j[static_cast<std::size_t>(i)];
    if (!cell.is_number_integer())
      throw inputError(std::string(what) + " entries must be integers");
    v(i) = Int(cell.get<long long>());
  }
  return v;
}

}  // namespace

InstanceFile parseInstanceText(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw inputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw inputError("instance file must be a JSON object");
  InstanceFile f;
  if (!j.contains("q") || !j["q"].is_number_integer())
    throw inputError("missing integer field \"q\"");
  f.q = j["q"].get<int>();
  if (!j.contains("phi")) throw inputError("missing field \"phi\"");
  f.phi = matrixFromJson(j["phi"], "phi");
  if (!j.contains("Q")) throw inputError("missing field \"Q\"");
  f.qmat = matrixFromJson(j["Q"], "Q");
  if (j.contains("beta")) f.beta = matrixFromJson(j["beta"], "beta");
  if (j.contains("alpha")) f.alpha = vectorFromJson(j["alpha"], "alpha");
  if (j.contains("guards")) {
    const auto& g = j["guards"];
    if (!g.is_object()) throw inputError("guards must be an object");
    if (g.contains("enumeration"))
      f.guards.enumerationCap = g["enumeration"].get<long long>();
    if (g.contains("distance"))
      f.guards.distanceCap = g["distance"].get<long long>();
    if (g.contains("groebner"))
      f.guards.groebnerCap = g["groebner"].get<int>();
  }
  return f;
}

InstanceFile loadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw inputError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parseInstanceText(ss.str());
}

}  // namespace toricode
