#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sgp {

// Finite field GF(p^e). Elements are encoded as integers in [0, q) via
// sum coeffs[i] * p^i, i.e. base-p digits of the polynomial representation.
// The modulus is the monic irreducible polynomial of degree e whose full
// coefficient vector has the smallest such encoding, so two builds of the
// same field always agree element by element.
class Field {
public:
    Field(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    uint32_t q() const { return q_; }

    // Modulus coefficients c0..ce (monic, ce == 1). Empty for prime fields.
    const std::vector<int>& modulus() const { return mod_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // throws std::invalid_argument on zero
    int pow(int a, long long n) const;

    std::vector<int> coeffs(int a) const;
    int encode(const std::vector<int>& c) const;

    // Multiplicative order of a nonzero element.
    int mult_order(int a) const;

private:
    int p_;
    int e_;
    uint32_t q_;
    std::vector<int> mod_;  // size e+1 when e > 1, else empty
};

bool is_prime(int n);
bool is_prime_power_order(int n);
// (p, e) with p^e == n; throws if n is not a prime power.
std::pair<int, int> prime_power_split(int n);

Field field_new(int p, int e);

// Smallest element (in the canonical encoding order) of multiplicative
// order q-1.
int primitive_element(const Field& f);

}  // namespace sgp
