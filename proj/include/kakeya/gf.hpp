#pragma once

#include <cstdint>
#include <vector>

#include "kakeya/errors.hpp"

namespace kakeya {

/// Field element code: the polynomial sum a_i x^i is encoded as the integer
/// sum a_i p^i, so codes run over [0, q) and code order is stable.
using Fel = std::uint16_t;

/// GF(p^deg) with the modulus fixed at construction.
///
/// The canonical modulus (used by make_field) is the lexicographically least
/// irreducible monic polynomial of the requested degree, comparing the
/// coefficient tuple (a_{deg-1}, ..., a_1, a_0). For deg = 1 this is the
/// polynomial x, so prime fields behave as plain arithmetic mod p.
///
/// Multiplication and inverse tables are precomputed for q <= 4096; all
/// operations are pure and the object is immutable after construction, so a
/// Field may be shared freely across threads.
class Field {
public:
    /// Canonical modulus.
    Field(unsigned p, unsigned deg);
    /// Explicit modulus, constant term first, length deg+1, monic. The
    /// polynomial is checked for irreducibility.
    Field(unsigned p, unsigned deg, std::vector<Fel> modulus);

    unsigned p() const { return p_; }
    unsigned deg() const { return deg_; }
    unsigned q() const { return q_; }
    /// Coefficients of the modulus, constant term first (length deg+1).
    const std::vector<Fel>& modulus() const { return modulus_; }

    Fel add(Fel a, Fel b) const;
    Fel sub(Fel a, Fel b) const;
    Fel neg(Fel a) const;
    Fel mul(Fel a, Fel b) const;
    /// Throws InvalidArgument on inv(0): division by zero.
    Fel inv(Fel a) const;
    Fel div(Fel a, Fel b) const;
    Fel pow(Fel a, unsigned long long e) const;

    /// All q elements, codes ascending.
    std::vector<Fel> elements() const;

    /// Multiplicative order of a nonzero element.
    unsigned order(Fel a) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && deg_ == o.deg_ && modulus_ == o.modulus_;
    }

private:
    unsigned p_ = 0, deg_ = 0, q_ = 0;
    std::vector<Fel> modulus_;
    std::vector<Fel> mul_table_; // q*q entries when tabulated, else empty
    std::vector<Fel> inv_table_; // q entries when tabulated

    Fel mul_slow(Fel a, Fel b) const;
    void build_tables();
};

/// GF(p^deg) with the canonical modulus. Requires p prime, deg >= 1 and
/// p^deg <= 2^16.
Field make_field(unsigned p, unsigned deg);

/// Factors q as p^deg for prime p, or throws InvalidArgument.
std::pair<unsigned, unsigned> factor_prime_power(unsigned q);

bool is_prime(unsigned n);

} // namespace kakeya
