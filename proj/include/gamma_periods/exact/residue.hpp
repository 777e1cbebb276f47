#pragma once

#include <numeric>
#include <vector>

#include "integer.hpp"

namespace gamma_periods::exact {

inline void require_modulus(long d) {
    if (d < 2) throw Error(ErrorKind::invalid_modulus, "modulus must be >= 2, got " + std::to_string(d));
}

// Canonical representative of x in [0, d-1].
inline long rep(long x, long d) {
    require_modulus(d);
    long r = x % d;
    return r < 0 ? r + d : r;
}

inline long rep(const Integer& x, long d) {
    require_modulus(d);
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), Integer(d).get_mpz_t());
    return r.get_si();
}

inline std::vector<long> unit_group(long d) {
    require_modulus(d);
    std::vector<long> units;
    for (long a = 1; a < d; ++a)
        if (std::gcd(a, d) == 1) units.push_back(a);
    return units;
}

inline long totient(long d) { return static_cast<long>(unit_group(d).size()); }

inline bool is_unit(long x, long d) { return std::gcd(rep(x, d), d) == 1; }

inline long mod_inverse(long x, long d) {
    long a = rep(x, d);
    if (std::gcd(a, d) != 1)
        throw Error(ErrorKind::invalid_unit, std::to_string(x) + " is not a unit modulo " + std::to_string(d));
    long r0 = d, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        long s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    return rep(s0, d);
}

// Value-semantic element of Z/d.
class ResidueClass {
public:
    ResidueClass(long value, long modulus) : modulus_(modulus), value_(rep(value, modulus)) {}

    long modulus() const { return modulus_; }
    long value() const { return value_; }

    ResidueClass operator+(const ResidueClass& o) const { return {value_ + checked(o).value_, modulus_}; }
    ResidueClass operator-(const ResidueClass& o) const { return {value_ - checked(o).value_, modulus_}; }
    ResidueClass operator*(const ResidueClass& o) const { return {value_ * checked(o).value_, modulus_}; }
    ResidueClass operator-() const { return {-value_, modulus_}; }
    ResidueClass inverse() const { return {mod_inverse(value_, modulus_), modulus_}; }
    bool operator==(const ResidueClass&) const = default;

private:
    const ResidueClass& checked(const ResidueClass& o) const {
        if (o.modulus_ != modulus_) throw Error(ErrorKind::incompatible_moduli, "residue classes with different moduli");
        return o;
    }

    long modulus_;
    long value_;
};

} // namespace gamma_periods::exact
