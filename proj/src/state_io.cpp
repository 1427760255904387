#include "cvsteer/state_io.hpp"

#include <fstream>
#include <sstream>

#include "cvsteer/version.hpp"
#include "json.hpp"

namespace cvsteer {

namespace {

using nlohmann::json;

Complex parse_pair(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw StateFormatError(where + ": expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json pair_json(Complex c) { return json::array({c.real(), c.imag()}); }

}  // namespace

MultiModeState load_state(std::istream& in, const std::string& source_name) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    // e.what() carries the byte position and line diagnostics.
    throw StateFormatError(source_name + ": " + e.what());
  }

  auto fail = [&](const std::string& msg) -> StateFormatError {
    return StateFormatError(source_name + ": " + msg);
  };

  if (!j.is_object()) throw fail("top level must be an object");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
    throw fail("missing integer schema_version");
  if (j["schema_version"].get<int>() != kSchemaVersion)
    throw fail("unsupported schema_version " + j["schema_version"].dump());
  for (const char* key : {"modes", "dims", "kind", "data"})
    if (!j.contains(key)) throw fail(std::string("missing field \"") + key + "\"");

  const int modes = j["modes"].is_number_integer() ? j["modes"].get<int>() : -1;
  if (modes < 1) throw fail("modes must be a positive integer");
  if (!j["dims"].is_array() || static_cast<int>(j["dims"].size()) != modes)
    throw fail("dims must be an array of length modes");
  std::vector<int> dims;
  int64_t joint = 1;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 2) throw fail("each dim must be an integer >= 2");
    dims.push_back(d.get<int>());
    joint *= dims.back();
  }

  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  const json& data = j["data"];
  try {
    if (kind == "pure") {
      if (!data.is_array() || static_cast<int64_t>(data.size()) != joint)
        throw fail("pure data must hold " + std::to_string(joint) + " amplitude pairs");
      Vec amps(joint);
      for (int64_t i = 0; i < joint; ++i)
        amps[i] = parse_pair(data[i], "data[" + std::to_string(i) + "]");
      return MultiModeState::pure(std::move(dims), std::move(amps));
    }
    if (kind == "density") {
      if (!data.is_array() || static_cast<int64_t>(data.size()) != joint)
        throw fail("density data must hold " + std::to_string(joint) + " rows");
      Mat rho(joint, joint);
      for (int64_t r = 0; r < joint; ++r) {
        const json& row = data[r];
        if (!row.is_array() || static_cast<int64_t>(row.size()) != joint)
          throw fail("density row " + std::to_string(r) + " must hold " + std::to_string(joint) +
                     " entries");
        for (int64_t c = 0; c < joint; ++c)
          rho(r, c) = parse_pair(row[c], "data[" + std::to_string(r) + "][" + std::to_string(c) +
                                             "]");
      }
      return MultiModeState::density(std::move(dims), std::move(rho));
    }
  } catch (const StateFormatError&) {
    throw;
  } catch (const Error& e) {
    throw fail(std::string("state invariants violated: ") + e.what());
  }
  throw fail("kind must be \"pure\" or \"density\"");
}

MultiModeState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateFormatError(path + ": cannot open file");
  return load_state(in, path);
}

void save_state(std::ostream& out, const MultiModeState& state) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["modes"] = state.modes();
  j["dims"] = state.dims();
  if (state.kind() == StateKind::pure) {
    j["kind"] = "pure";
    json data = json::array();
    for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i)
      data.push_back(pair_json(state.amplitudes()[i]));
    j["data"] = std::move(data);
  } else {
    j["kind"] = "density";
    json data = json::array();
    const Mat& rho = state.density_matrix();
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < rho.cols(); ++c) row.push_back(pair_json(rho(r, c)));
      data.push_back(std::move(row));
    }
    j["data"] = std::move(data);
  }
  out << j.dump(2) << '\n';
}

void save_state_file(const std::string& path, const MultiModeState& state) {
  std::ofstream out(path);
  if (!out) throw StateFormatError(path + ": cannot open for writing");
  save_state(out, state);
}

}  // namespace cvsteer
