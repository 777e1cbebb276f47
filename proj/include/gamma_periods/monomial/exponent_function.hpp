#pragma once

#include <map>
#include <vector>

#include "../exact/residue.hpp"

namespace gamma_periods::monomial {

using exact::Integer;
using exact::Rational;

// Rational-valued function on Z/d.
class ExponentFunction {
public:
    explicit ExponentFunction(long d) : d_(d), values_((exact::require_modulus(d), static_cast<std::size_t>(d))) {}
    ExponentFunction(long d, std::vector<Rational> values) : ExponentFunction(d) {
        if (values.size() != static_cast<std::size_t>(d))
            throw Error(ErrorKind::shape_error, "exponent function needs " + std::to_string(d) + " values");
        values_ = std::move(values);
    }
    ExponentFunction(long d, std::initializer_list<long> values) : ExponentFunction(d) {
        if (values.size() != static_cast<std::size_t>(d))
            throw Error(ErrorKind::shape_error, "exponent function needs " + std::to_string(d) + " values");
        std::size_t i = 0;
        for (long v : values) values_[i++] = v;
    }

    long modulus() const { return d_; }
    const Rational& operator[](long a) const { return values_[static_cast<std::size_t>(exact::rep(a, d_))]; }
    Rational& operator[](long a) { return values_[static_cast<std::size_t>(exact::rep(a, d_))]; }
    const std::vector<Rational>& values() const { return values_; }

    bool is_zero() const {
        for (const auto& v : values_)
            if (v != 0) return false;
        return true;
    }

    friend ExponentFunction operator-(const ExponentFunction& x, const ExponentFunction& y) {
        if (x.d_ != y.d_) throw Error(ErrorKind::incompatible_moduli, "exponent functions with different moduli");
        ExponentFunction out(x.d_);
        for (long a = 0; a < x.d_; ++a) out[a] = x[a] - y[a];
        return out;
    }
    friend ExponentFunction operator+(const ExponentFunction& x, const ExponentFunction& y) {
        if (x.d_ != y.d_) throw Error(ErrorKind::incompatible_moduli, "exponent functions with different moduli");
        ExponentFunction out(x.d_);
        for (long a = 0; a < x.d_; ++a) out[a] = x[a] + y[a];
        return out;
    }
    bool operator==(const ExponentFunction&) const = default;

private:
    long d_;
    std::vector<Rational> values_;
};

// Hodge type p(lambda) for each unit lambda, with p(lambda) + p(-lambda) = weight.
class HodgeFunction {
public:
    HodgeFunction(long d, std::map<long, long> values, long weight) : d_(d), weight_(weight) {
        auto units = exact::unit_group(d);
        for (auto& [lambda, p] : values) {
            if (!exact::is_unit(lambda, d))
                throw Error(ErrorKind::invalid_unit, std::to_string(lambda) + " is not a unit modulo " + std::to_string(d));
            values_[exact::rep(lambda, d)] = p;
        }
        if (values_.size() != units.size())
            throw Error(ErrorKind::invalid_argument, "Hodge function must be given on every unit modulo " + std::to_string(d));
        for (long u : units)
            if (values_.at(u) + values_.at(exact::rep(-u, d)) != weight_)
                throw Error(ErrorKind::invalid_argument, "Hodge symmetry p(l) + p(-l) = " + std::to_string(weight_) +
                                                             " fails at l = " + std::to_string(u));
    }

    // Weight inferred from p(1) + p(-1).
    HodgeFunction(long d, std::map<long, long> values) : HodgeFunction(d, values, infer_weight(d, values)) {}

    long modulus() const { return d_; }
    long weight() const { return weight_; }
    long operator()(long lambda) const { return values_.at(exact::rep(lambda, d_)); }
    const std::map<long, long>& values() const { return values_; }

private:
    static long infer_weight(long d, const std::map<long, long>& values) {
        exact::require_modulus(d);
        long p1 = 0, pm1 = 0;
        bool have1 = false, havem1 = false;
        for (auto& [lambda, p] : values) {
            if (exact::rep(lambda, d) == 1) { p1 = p; have1 = true; }
            if (exact::rep(lambda, d) == d - 1) { pm1 = p; havem1 = true; }
        }
        if (!have1 || !havem1) throw Error(ErrorKind::invalid_argument, "Hodge function must be given on every unit");
        return p1 + pm1;
    }

    long d_;
    long weight_;
    std::map<long, long> values_;
};

} // namespace gamma_periods::monomial
