#include "kakeya/gf.hpp"

#include <algorithm>

namespace kakeya {

namespace {

// Dense polynomial over GF(p), coefficient vector with constant term first.
// Trailing zeros are allowed; degree is the last nonzero index.
using Poly = std::vector<unsigned>;

int poly_degree(const Poly& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        unsigned c = a[da];
        for (int i = 0; i <= db; ++i) {
            unsigned sub = (c * b[i]) % p;
            int pos = da - db + i;
            a[pos] = (a[pos] + p - sub % p) % p;
        }
    }
    return a;
}

bool poly_is_zero(const Poly& a) { return poly_degree(a) < 0; }

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of m, most significant digit = coefficient of x^{d-1}.
Poly monic_from_index(unsigned long long m, unsigned d, unsigned p) {
    Poly f(d + 1, 0);
    f[d] = 1;
    for (unsigned i = 0; i < d; ++i) {
        f[i] = unsigned(m % p);
        m /= p;
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const Poly& f, unsigned p) {
    unsigned d = unsigned(poly_degree(f));
    if (d == 0) return false;
    for (unsigned e = 1; 2 * e <= d; ++e) {
        unsigned long long count = 1;
        for (unsigned i = 0; i < e; ++i) count *= p;
        for (unsigned long long m = 0; m < count; ++m) {
            Poly g = monic_from_index(m, e, p);
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

Poly canonical_modulus(unsigned p, unsigned deg) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    // Index order equals lexicographic order on (a_{deg-1},...,a_0).
    for (unsigned long long m = 0; m < count; ++m) {
        Poly f = monic_from_index(m, deg, p);
        if (poly_irreducible(f, p)) return f;
    }
    throw StructureError("no irreducible polynomial found"); // unreachable
}

Poly decode(Fel code, unsigned p, unsigned deg) {
    Poly a(deg, 0);
    for (unsigned i = 0; i < deg; ++i) {
        a[i] = code % p;
        code = Fel(code / p);
    }
    return a;
}

Fel encode(const Poly& a, unsigned p, unsigned deg) {
    unsigned code = 0;
    for (unsigned i = deg; i-- > 0;) code = code * p + (i < a.size() ? a[i] : 0);
    return Fel(code);
}

} // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<unsigned, unsigned> factor_prime_power(unsigned q) {
    if (q < 2) throw InvalidArgument("q must be at least 2");
    unsigned p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    unsigned deg = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++deg;
    }
    if (rest != 1) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
    return {p, deg};
}

Field::Field(unsigned p, unsigned deg) : p_(p), deg_(deg) {
    if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
    if (deg < 1) throw InvalidArgument("deg must be positive");
    unsigned long long q = 1;
    for (unsigned i = 0; i < deg; ++i) {
        q *= p;
        if (q > 65536) throw InvalidArgument("field order exceeds 2^16");
    }
    q_ = unsigned(q);
    Poly m = canonical_modulus(p, deg);
    modulus_.assign(m.begin(), m.end());
    build_tables();
}

Field::Field(unsigned p, unsigned deg, std::vector<Fel> modulus) : p_(p), deg_(deg) {
    if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
    if (deg < 1) throw InvalidArgument("deg must be positive");
    unsigned long long q = 1;
    for (unsigned i = 0; i < deg; ++i) {
        q *= p;
        if (q > 65536) throw InvalidArgument("field order exceeds 2^16");
    }
    q_ = unsigned(q);
    if (modulus.size() != deg + 1) throw InvalidArgument("modulus must have deg+1 coefficients");
    for (Fel c : modulus)
        if (c >= p) throw InvalidArgument("modulus coefficient out of range");
    if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
    Poly m(modulus.begin(), modulus.end());
    if (!poly_irreducible(m, p)) throw InvalidArgument("modulus is reducible");
    modulus_ = std::move(modulus);
    build_tables();
}

Field make_field(unsigned p, unsigned deg) { return Field(p, deg); }

Fel Field::add(Fel a, Fel b) const {
    // Digit-wise addition mod p; no carries between digits.
    unsigned r = 0, mult = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        unsigned da = (a / mult) % p_, db = (b / mult) % p_;
        r += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return Fel(r);
}

Fel Field::neg(Fel a) const {
    unsigned r = 0, mult = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        unsigned da = (a / mult) % p_;
        r += ((p_ - da) % p_) * mult;
        mult *= p_;
    }
    return Fel(r);
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul_slow(Fel a, Fel b) const {
    Poly pa = decode(a, p_, deg_), pb = decode(b, p_, deg_);
    Poly m(modulus_.begin(), modulus_.end());
    return encode(poly_mod(poly_mul(pa, pb, p_), m, p_), p_, deg_);
}

Fel Field::mul(Fel a, Fel b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
    return mul_slow(a, b);
}

Fel Field::inv(Fel a) const {
    if (a == 0) throw InvalidArgument("division by zero in GF(" + std::to_string(q_) + ")");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

Fel Field::div(Fel a, Fel b) const { return mul(a, inv(b)); }

Fel Field::pow(Fel a, unsigned long long e) const {
    Fel r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<Fel> Field::elements() const {
    std::vector<Fel> r(q_);
    for (unsigned i = 0; i < q_; ++i) r[i] = Fel(i);
    return r;
}

unsigned Field::order(Fel a) const {
    if (a == 0) throw InvalidArgument("order of zero is undefined");
    unsigned n = 1;
    Fel x = a;
    while (x != 1) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

void Field::build_tables() {
    if (q_ > 4096) return;
    mul_table_.resize(std::size_t(q_) * q_);
    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = a; b < q_; ++b) {
            Fel v = mul_slow(Fel(a), Fel(b));
            mul_table_[std::size_t(a) * q_ + b] = v;
            mul_table_[std::size_t(b) * q_ + a] = v;
        }
    inv_table_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a) {
        for (unsigned b = 1; b < q_; ++b)
            if (mul_table_[std::size_t(a) * q_ + b] == 1) {
                inv_table_[a] = Fel(b);
                break;
            }
    }
}

} // namespace kakeya
