#include "logmaj/io.hpp"

#include <fstream>

#include "logmaj/error.hpp"

namespace logmaj {

using nlohmann::json;

json to_json(const ComplexMatrix& x) {
  json entries = json::array();
  for (const Complex& z : x.entries()) entries.push_back({z.real(), z.imag()});
  return {{"n", x.dim()}, {"entries", std::move(entries)}};
}

json to_json(const StepFunction& f) {
  const auto b = f.breakpoints();
  const auto v = f.values();
  return {{"breakpoints", std::vector<double>(b.begin(), b.end())}, {"values", std::vector<double>(v.begin(), v.end())}};
}

json to_json(const IntervalSet& k) {
  json out = json::array();
  for (const auto& [a, b] : k.intervals()) out.push_back({a, b});
  return out;
}

ComplexMatrix matrix_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const json& raw = j.at("entries");
    if (!raw.is_array() || raw.size() != n * n) {
      throw Error(ErrorCode::kParseError, "expected n*n entries");
    }
    std::vector<Complex> entries;
    entries.reserve(raw.size());
    for (const json& e : raw) {
      if (e.is_number()) {
        entries.emplace_back(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        entries.emplace_back(e[0].get<double>(), e[1].get<double>());
      } else {
        throw Error(ErrorCode::kParseError, "entries must be [re, im] pairs");
      }
    }
    return ComplexMatrix(n, std::move(entries));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return matrix_from_json(j);
}

}  // namespace logmaj
