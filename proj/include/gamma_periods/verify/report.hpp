#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "../numerics/min_poly.hpp"

namespace gamma_periods::verify {

using Json = nlohmann::json;
using numerics::Complex;
using numerics::Real;
using exact::Integer;
using exact::Rational;

enum class Verdict { exact_match, algebraic_ratio_detected, not_certified };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::exact_match: return "exact-match";
    case Verdict::algebraic_ratio_detected: return "algebraic-ratio-detected";
    case Verdict::not_certified: return "not-certified";
    }
    return "not-certified";
}

inline bool passes(Verdict v) { return v != Verdict::not_certified; }

// Decimal rendering with an explicit precision tag.
inline Json complex_to_json(const Complex& z, long digits) {
    return Json{{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}, {"digits", digits}};
}

inline Json real_to_json(const Real& x, long digits) { return Json{{"value", x.to_string(digits)}, {"digits", digits}}; }

inline Json polynomial_to_json(const std::vector<Integer>& c) {
    Json coefficients = Json::array();
    for (const auto& ci : c) coefficients.push_back(ci.get_str());
    return Json{{"coefficients", coefficients}, {"text", numerics::polynomial_to_string(c)}};
}

struct VerificationReport {
    std::string identity;
    Json parameters = Json::object();
    std::optional<Complex> lhs;
    std::optional<Complex> rhs;
    std::optional<Complex> ratio;
    Verdict verdict = Verdict::not_certified;
    std::optional<std::vector<Integer>> min_poly;
    std::optional<Real> residual;  // |candidate relation| at the ratio
    long digits = 0;
    std::vector<std::string> notes;
    Json details = Json::object(); // identity-specific exact data
    double runtime_seconds = 0;
};

inline Json to_json(const VerificationReport& r, bool with_timing = false) {
    const long shown = r.digits;
    Json j{{"identity", r.identity},
           {"parameters", r.parameters},
           {"verdict", to_string(r.verdict)},
           {"precision_digits", r.digits},
           {"notes", r.notes},
           {"details", r.details}};
    j["lhs"] = r.lhs ? complex_to_json(*r.lhs, shown) : Json();
    j["rhs"] = r.rhs ? complex_to_json(*r.rhs, shown) : Json();
    j["ratio"] = r.ratio ? complex_to_json(*r.ratio, shown) : Json();
    j["min_poly"] = r.min_poly ? polynomial_to_json(*r.min_poly) : Json();
    j["residual"] = r.residual ? Json(r.residual->to_string(6)) : Json();
    if (with_timing) j["runtime_seconds"] = r.runtime_seconds;
    return j;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Decides exact-match for a ratio expected to be 1.
inline void judge_unit_ratio(VerificationReport& r) {
    const Complex one(1L, r.ratio->prec());
    Real err = numerics::abs(*r.ratio - one);
    r.residual = err;
    r.details["relative_error"] = err.to_string(6);
    if (err.log10_abs() < -static_cast<double>(r.digits) / 2) {
        r.verdict = Verdict::exact_match;
        r.min_poly = std::vector<Integer>{-1, 1};
    } else {
        r.verdict = Verdict::not_certified;
    }
}

// Runs the minimal polynomial search on the ratio and records the outcome.
inline void judge_algebraic_ratio(VerificationReport& r, long max_degree, long height_digits) {
    r.parameters["pslq_degree"] = max_degree;
    r.parameters["pslq_height"] = height_digits;
    try {
        auto found = numerics::min_poly(*r.ratio, max_degree, height_digits, r.digits);
        for (auto& w : found.warnings) r.notes.push_back(w);
        r.details["search_height_digits"] = found.effective_height_digits;
        if (found.polynomial) {
            r.verdict = Verdict::algebraic_ratio_detected;
            r.min_poly = found.polynomial->coefficients;
            r.residual = found.polynomial->residual;
        } else {
            r.verdict = Verdict::not_certified;
            r.notes.push_back("no integer polynomial of degree <= " + std::to_string(max_degree) +
                              " found; the ratio may still be algebraic of higher degree or height");
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::precision_exhausted) throw;
        r.verdict = Verdict::not_certified;
        r.notes.push_back(std::string(e.what()) + "; rerun with more digits or a smaller degree bound");
    }
}

} // namespace gamma_periods::verify
