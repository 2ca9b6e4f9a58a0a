#pragma once

#include <json.hpp>

#include "polyrank/ranking.hpp"

namespace polyrank {

// {"verdict", "mode", "iterations", "prf"?, "lprf"?} with polynomials in the
// str() print format.
nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

std::string verdict_text(const Verdict& v);

}  // namespace polyrank
