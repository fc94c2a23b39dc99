#include "sgp/gf.hpp"

#include <stdexcept>
#include <string>

namespace sgp {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power_order(int n) {
    if (n < 2) return false;
    int p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

std::pair<int, int> prime_power_split(int n) {
    if (!is_prime_power_order(n)) throw std::invalid_argument("not a prime power");
    int p = 2;
    while (n % p != 0) ++p;
    int e = 0;
    while (n > 1) {
        n /= p;
        ++e;
    }
    return {p, e};
}

namespace {

// Dense polynomials over GF(p), coefficient vectors c0..cn with possible
// trailing zeros.
using Poly = std::vector<int>;

int deg(const Poly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// Remainder of a mod m; m must be nonzero.
Poly poly_rem(Poly a, const Poly& m, int p) {
    int dm = deg(m);
    int lead_inv = 0;
    for (int x = 1; x < p; ++x)
        if (m[dm] * x % p == 1) { lead_inv = x; break; }
    for (int da = deg(a); da >= dm; da = deg(a)) {
        int c = a[da] * lead_inv % p;
        for (int i = 0; i <= dm; ++i)
            a[da - dm + i] = ((a[da - dm + i] - c * m[i]) % p + p) % p;
    }
    return a;
}

bool divides(const Poly& d, const Poly& a, int p) {
    return deg(poly_rem(a, d, p)) < 0;
}

Poly decode_poly(uint64_t enc, int p, int len) {
    Poly c(len, 0);
    for (int i = 0; i < len && enc; ++i) {
        c[i] = (int)(enc % p);
        enc /= p;
    }
    return c;
}

// Trial division by every monic polynomial of degree 1..e/2.
bool is_irreducible(const Poly& f, int p) {
    int e = deg(f);
    if (e <= 0) return false;
    if (e == 1) return true;
    for (int d = 1; 2 * d <= e; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t low = 0; low < count; ++low) {
            Poly g = decode_poly(low, p, d + 1);
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("field_new: p must be prime, got " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("field_new: exponent must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field_new: field order exceeds 65536");
    }
    q_ = (uint32_t)q;
    if (e > 1) {
        // Smallest monic irreducible of degree e by encoded value of the
        // coefficient vector.
        uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (uint64_t low = 0; low < count; ++low) {
            Poly f = decode_poly(low, p, e + 1);
            f[e] = 1;
            if (is_irreducible(f, p)) {
                mod_ = f;
                break;
            }
        }
        if (mod_.empty()) throw std::logic_error("no irreducible polynomial found");
    }
}

std::vector<int> Field::coeffs(int a) const {
    std::vector<int> c(e_, 0);
    for (int i = 0; i < e_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

int Field::encode(const std::vector<int>& c) const {
    int a = 0;
    for (int i = (int)c.size() - 1; i >= 0; --i) a = a * p_ + (c[i] % p_ + p_) % p_;
    return a;
}

int Field::add(int a, int b) const {
    if (e_ == 1) return (a + b) % p_;
    int r = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        r += (a % p_ + b % p_) % p_ * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return r;
}

int Field::neg(int a) const {
    if (e_ == 1) return (p_ - a) % p_;
    int r = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        r += (p_ - a % p_) % p_ * pw;
        a /= p_;
        pw *= p_;
    }
    return r;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    if (e_ == 1) return a * b % p_;
    Poly prod = poly_mul(coeffs(a), coeffs(b), p_);
    Poly rem = poly_rem(prod, mod_, p_);
    rem.resize(e_, 0);
    return encode(rem);
}

int Field::pow(int a, long long n) const {
    long long m = (long long)q_ - 1;
    if (n < 0) n = n % m + m;
    if (a == 0) return n == 0 ? 1 : 0;
    n %= m;
    int r = 1, base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

int Field::inv(int a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return pow(a, (long long)q_ - 2);
}

int Field::mult_order(int a) const {
    if (a == 0) throw std::invalid_argument("mult_order of zero");
    int ord = 1, x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

Field field_new(int p, int e) { return Field(p, e); }

int primitive_element(const Field& f) {
    for (int a = 1; a < (int)f.q(); ++a)
        if (f.mult_order(a) == (int)f.q() - 1) return a;
    throw std::logic_error("no primitive element");  // unreachable for valid fields
}

}  // namespace sgp
