#include "invol/series/truncated_series.hpp"

namespace invol {

bool is_real(const PowerSeries& s) {
    for (const auto& g : s.coeffs())
        if (!g.is_real()) return false;
    return true;
}

IntSeries real_part(const PowerSeries& s) {
    IntSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) {
        if (!s[n].is_real()) throw std::domain_error("series has a nonzero imaginary coefficient at x^" + std::to_string(n));
        r[n] = s[n].re;
    }
    return r;
}

PowerSeries to_gaussian(const IntSeries& s) {
    PowerSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) r[n] = GaussianInt(s[n]);
    return r;
}

nlohmann::json to_json(const PowerSeries& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& g : s.coeffs()) a.push_back(to_json(g));
    return a;
}

nlohmann::json to_json(const IntSeries& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : s.coeffs()) a.push_back(json_integer(v));
    return a;
}

PowerSeries power_series_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("series JSON must be a nonempty array");
    std::vector<GaussianInt> v;
    for (const auto& e : j) v.push_back(gaussian_from_json(e));
    int order = static_cast<int>(v.size()) - 1;
    return PowerSeries(std::move(v), order);
}

}  // namespace invol
