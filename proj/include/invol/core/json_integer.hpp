#pragma once

#include <gmpxx.h>
#include <json.hpp>

namespace invol {

// Integers emit as JSON numbers when they fit in 64 bits, else as decimal strings.
nlohmann::json json_integer(const mpz_class& v);
mpz_class integer_from_json(const nlohmann::json& j);

}  // namespace invol
