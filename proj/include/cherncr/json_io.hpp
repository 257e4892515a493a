#pragma once

#include <json.hpp>

#include <string>

#include "cherncr/charclass.hpp"

namespace cherncr {

// ChernNumberTable JSON format:
//   {"n": 2, "lambda": "1", "numbers": {"x^2": "1", "x^1*t1^1": "-3", ...}}
// Rational values are exact decimal strings "p/q" (denominator omitted
// when 1). Only degree-n monomial keys are accepted.
inline nlohmann::ordered_json base_to_json(const KEBase& base) {
    nlohmann::ordered_json j;
    j["n"] = base.n;
    j["lambda"] = to_string(base.lambda);
    nlohmann::ordered_json numbers = nlohmann::ordered_json::object();
    for (const auto& [m, v] : base.table.numbers())
        numbers[monomial_key(*base.table.ring(), m)] = to_string(v);
    j["numbers"] = std::move(numbers);
    return j;
}

inline KEBase base_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("base JSON: missing or non-integer \"n\"");
    int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("base JSON: n must be positive");
    if (!j.contains("lambda") || !j["lambda"].is_string())
        throw std::invalid_argument("base JSON: missing or non-string \"lambda\"");
    Rational lambda = rat_from_string(j["lambda"].get<std::string>());

    ChernNumberTable table(n);
    if (!j.contains("numbers") || !j["numbers"].is_object())
        throw std::invalid_argument("base JSON: missing \"numbers\" object");
    for (const auto& [key, value] : j["numbers"].items()) {
        if (!value.is_string()) throw std::invalid_argument("base JSON: value for '" + key + "' must be a string");
        table.set(key, rat_from_string(value.get<std::string>()));
    }
    bool formal = lambda >= 0;  // the existence hypothesis needs lambda < 0
    return KEBase{n, std::move(lambda), std::move(table), std::nullopt, formal};
}

}  // namespace cherncr
