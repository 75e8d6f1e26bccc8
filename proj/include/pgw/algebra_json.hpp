#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "pgw/algebra.hpp"

namespace pgw {

// {"size": n, "ops": {"name": [flattened row-major table], ...}}
nlohmann::json algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(std::shared_ptr<const Signature> sig, const nlohmann::json& j);

}  // namespace pgw
