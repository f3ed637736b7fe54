#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "redalg/stabcut.hpp"

namespace redalg::cli {

using nlohmann::json;

/// [{"coeff": "...", "bpart": ["bF[1]", "bE[1]"]}, ...]
json to_json(const CosetElement& z);
/// Accepts the term list above or an expression string.
CosetElement coset_from_json(const json& j, const std::shared_ptr<const Context>& ctx);

std::string latex(const RationalFn& q, const std::vector<std::string>& names);
std::string latex(const Element& e);
inline std::string latex(const CosetElement& z) { return latex(z.element()); }

/// {"context": ..., "pairs": [[x, y], ...], "rhs": ...}
json relation_to_json(const Relation& rel, const std::string& context);
Relation relation_from_json(const json& j, const std::shared_ptr<const Context>& ctx);

}  // namespace redalg::cli
