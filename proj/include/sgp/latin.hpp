#pragma once

#include <vector>

#include "sgp/gf.hpp"

namespace sgp {

struct LatinSquare {
    int n = 0;
    std::vector<std::vector<int>> cells;  // n x n, symbols in [0, n)
};

struct MolsSet {
    int n = 0;
    std::vector<LatinSquare> squares;
};

bool is_latin(const LatinSquare& s);

// True iff the n^2 superimposed ordered pairs are all distinct.
// Throws on an order mismatch.
bool verify_orthogonal(const LatinSquare& a, const LatinSquare& b);

// Full pairwise scan plus per-square Latin check.
bool verify_mols(const MolsSet& m);

// q-1 squares over GF(q): square alpha has cell(a,b) = alpha*a + b in the
// field under the canonical integer encoding.
MolsSet mols_from_field(const Field& f);

// Componentwise direct product; min(|a|,|b|) squares of order n*m.
// Point (x,y) of the product maps to x*m + y.
MolsSet macneish_product(const MolsSet& a, const MolsSet& b);

// Best known lower bound on N(n): max of the published table (n <= 100),
// the prime-power rule, and the MacNeish bound over the factorization.
int n_lower_bound(int n);

// Number of MOLS(n) this library can actually build (field or MacNeish
// product); the published table may promise more.
int constructible_mols_count(int n);

// Builds constructible_mols_count(n) squares. Returns an empty set for
// n < 2 or when nothing is constructible.
MolsSet build_mols(int n);

}  // namespace sgp
