#pragma once

#include <string>

#include <json.hpp>

#include "bdkp/mpoly.hpp"

namespace bdkp {

/// Plain text, e.g. "t_1^3/12 - t_3" or "(1/2 + 1/4*sqrt2)*t_1". Exact and
/// round-trippable through parse_poly.
std::string to_plain(const MPoly& p);

/// LaTeX rendering with \frac and \sqrt{2}.
std::string to_latex(const MPoly& p);

/// {"terms": [{"exps": {"t_1": 3}, "coeff": ["1/12", "0"]}, ...]} where the
/// coefficient pair is [rational part, sqrt2 part] as exact "p/q" strings.
nlohmann::json poly_to_json(const MPoly& p);
MPoly poly_from_json(const nlohmann::json& j);

/// Inverse of to_plain; accepts +, -, *, /, ^, parentheses, sqrt2 and
/// variables t_j / t'_j. Division is only defined by constants.
MPoly parse_poly(const std::string& text);

}  // namespace bdkp
