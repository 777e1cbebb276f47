#pragma once

#include <json.hpp>

#include "gamma_monomial.hpp"

namespace gamma_periods::monomial {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& q) { return exact::to_fraction_string(q); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
    if (!j.is_string()) throw Error(ErrorKind::parse_error, "expected a \"num/den\" string");
    return exact::parse_rational(j.get<std::string>());
}

// {"modulus": d, "values": ["e(0)", ..., "e(d-1)"]}
inline Json to_json(const ExponentFunction& f) {
    Json values = Json::array();
    for (const auto& v : f.values()) values.push_back(rational_to_json(v));
    return Json{{"modulus", f.modulus()}, {"values", values}};
}

inline ExponentFunction exponent_function_from_json(const Json& j) {
    long d = j.at("modulus").get<long>();
    std::vector<Rational> values;
    for (const auto& v : j.at("values")) values.push_back(rational_from_json(v));
    return ExponentFunction(d, std::move(values));
}

// {"modulus": d, "two_pi_i_power": "r", "gamma_exponents": ["e(1)", ..., "e(d-1)"]}
inline Json to_json(const GammaMonomial& m) {
    Json e = Json::array();
    for (long a = 1; a < m.modulus(); ++a) e.push_back(rational_to_json(m.exponent(a)));
    return Json{{"modulus", m.modulus()}, {"two_pi_i_power", rational_to_json(m.two_pi_i_power())}, {"gamma_exponents", e}};
}

inline GammaMonomial gamma_monomial_from_json(const Json& j) {
    GammaMonomial m(j.at("modulus").get<long>());
    m.two_pi_i_power() = rational_from_json(j.at("two_pi_i_power"));
    const auto& e = j.at("gamma_exponents");
    if (e.size() != static_cast<std::size_t>(m.modulus() - 1))
        throw Error(ErrorKind::shape_error, "gamma_exponents needs d - 1 entries");
    for (long a = 1; a < m.modulus(); ++a) m.exponent(a) = rational_from_json(e[static_cast<std::size_t>(a - 1)]);
    return m;
}

inline Json to_json(const ReductionStep& s) {
    return Json{{"relation", s.relation},
                {"a", s.a},
                {"b", s.b},
                {"multiplicity", rational_to_json(s.multiplicity)},
                {"added_power", rational_to_json(s.added_power)}};
}

inline Json to_json(const ReducedMonomial& r) {
    Json steps = Json::array();
    for (const auto& s : r.certificate) steps.push_back(to_json(s));
    return Json{{"reduced", to_json(r.reduced)}, {"certificate", steps}};
}

} // namespace gamma_periods::monomial
