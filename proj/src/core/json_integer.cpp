#include "invol/core/json_integer.hpp"

#include <stdexcept>
#include <string>

namespace invol {

nlohmann::json json_integer(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    throw std::invalid_argument("expected an integer in JSON");
}

}  // namespace invol
