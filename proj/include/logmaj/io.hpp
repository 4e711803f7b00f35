#pragma once

// JSON forms of the core types. Matrices use {"n": int, "entries": [[re, im], ...]}
// in row-major order; step functions {"breakpoints": [...], "values": [...]}.

#include <string>

#include <json.hpp>

#include "logmaj/matrix.hpp"
#include "logmaj/step_function.hpp"

namespace logmaj {

nlohmann::json to_json(const ComplexMatrix& x);
nlohmann::json to_json(const StepFunction& f);
/// [[a, b], ...]
nlohmann::json to_json(const IntervalSet& k);

/// Throws ParseError on malformed input.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Throws IoError / ParseError.
ComplexMatrix read_matrix_file(const std::string& path);

}  // namespace logmaj
