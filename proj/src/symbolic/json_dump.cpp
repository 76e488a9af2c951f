#include "solitonlab/symbolic/json_dump.hpp"

#include <charconv>

#include "solitonlab/errors.hpp"

namespace solitonlab::sym {

nlohmann::ordered_json to_json(const TrigPoly& p) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [n, h] : p.harmonics()) {
        out[std::to_string(n)] = {{"cos", h.cos.to_string()}, {"sin", h.sin.to_string()}};
    }
    return out;
}

nlohmann::ordered_json degree_to_json(const TrigPoly& p, unsigned n) {
    const auto [a, b] = p.coeff(n);
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    out[std::to_string(n)] = {{"cos", a.to_string()}, {"sin", b.to_string()}};
    return out;
}

TrigPoly trig_poly_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidInput("TrigPoly JSON must be an object");
    std::map<unsigned, Harmonic> harmonics;
    for (const auto& [key, value] : j.items()) {
        unsigned n = 0;
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), n);
        if (ec != std::errc{} || ptr != key.data() + key.size()) {
            throw InvalidInput("degree key '" + key + "' is not a decimal integer");
        }
        if (!value.is_object() || !value.contains("cos") || !value.contains("sin")) {
            throw InvalidInput("degree " + key + " needs \"cos\" and \"sin\" strings");
        }
        harmonics[n] = {DiffPoly::parse(value.at("cos").get<std::string>()),
                        DiffPoly::parse(value.at("sin").get<std::string>())};
        if (n == 0 && !harmonics[n].sin.is_zero()) throw InvalidInput("degree 0 cannot carry a sine part");
    }
    return TrigPoly::from_harmonics(harmonics);
}

}  // namespace solitonlab::sym
