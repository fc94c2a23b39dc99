#include "sgp/latin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sgp {

bool is_latin(const LatinSquare& s) {
    if ((int)s.cells.size() != s.n) return false;
    std::vector<char> seen(s.n);
    for (int i = 0; i < s.n; ++i) {
        if ((int)s.cells[i].size() != s.n) return false;
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < s.n; ++j) {
            int v = s.cells[i][j];
            if (v < 0 || v >= s.n || seen[v]) return false;
            seen[v] = 1;
        }
    }
    for (int j = 0; j < s.n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < s.n; ++i) {
            int v = s.cells[i][j];
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

bool verify_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.n != b.n) throw std::invalid_argument("verify_orthogonal: order mismatch");
    std::vector<char> seen((size_t)a.n * a.n, 0);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            size_t idx = (size_t)a.cells[i][j] * a.n + b.cells[i][j];
            if (seen[idx]) return false;
            seen[idx] = 1;
        }
    return true;
}

bool verify_mols(const MolsSet& m) {
    for (const auto& s : m.squares) {
        if (s.n != m.n || !is_latin(s)) return false;
    }
    for (size_t i = 0; i < m.squares.size(); ++i)
        for (size_t j = i + 1; j < m.squares.size(); ++j)
            if (!verify_orthogonal(m.squares[i], m.squares[j])) return false;
    return true;
}

MolsSet mols_from_field(const Field& f) {
    int q = (int)f.q();
    if (q < 3) throw std::invalid_argument("mols_from_field: field order must be >= 3");
    MolsSet out;
    out.n = q;
    for (int alpha = 1; alpha < q; ++alpha) {
        LatinSquare s;
        s.n = q;
        s.cells.assign(q, std::vector<int>(q));
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                s.cells[a][b] = f.add(f.mul(alpha, a), b);
        out.squares.push_back(std::move(s));
    }
    return out;
}

MolsSet macneish_product(const MolsSet& a, const MolsSet& b) {
    if (a.squares.empty() || b.squares.empty())
        throw std::invalid_argument("macneish_product: empty input set");
    int n = a.n, m = b.n;
    size_t count = std::min(a.squares.size(), b.squares.size());
    MolsSet out;
    out.n = n * m;
    for (size_t s = 0; s < count; ++s) {
        const auto& A = a.squares[s];
        const auto& B = b.squares[s];
        LatinSquare sq;
        sq.n = n * m;
        sq.cells.assign(sq.n, std::vector<int>(sq.n));
        for (int x1 = 0; x1 < n; ++x1)
            for (int y1 = 0; y1 < m; ++y1)
                for (int x2 = 0; x2 < n; ++x2)
                    for (int y2 = 0; y2 < m; ++y2)
                        sq.cells[x1 * m + y1][x2 * m + y2] =
                            A.cells[x1][x2] * m + B.cells[y1][y2];
        out.squares.push_back(std::move(sq));
    }
    return out;
}

namespace {

// Published lower bounds on N(n) for non-prime-power n <= 100.
const std::map<int, int>& published_bounds() {
    static const std::map<int, int> t = {
        {6, 1},   {10, 2},  {12, 5},  {14, 4},  {15, 4},  {18, 5},  {20, 4},  {21, 5},
        {22, 3},  {24, 7},  {26, 4},  {28, 5},  {30, 4},  {33, 5},  {34, 4},  {35, 6},
        {36, 8},  {38, 4},  {39, 5},  {40, 7},  {42, 5},  {44, 5},  {45, 6},  {46, 4},
        {48, 10}, {50, 6},  {51, 5},  {52, 5},  {54, 8},  {55, 6},  {56, 7},  {57, 7},
        {58, 5},  {60, 5},  {62, 5},  {63, 8},  {65, 7},  {66, 5},  {68, 5},  {69, 6},
        {70, 6},  {72, 7},  {74, 5},  {75, 7},  {76, 6},  {77, 6},  {78, 6},  {80, 9},
        {82, 8},  {84, 6},  {85, 6},  {86, 6},  {87, 6},  {88, 7},  {90, 6},  {91, 7},
        {92, 6},  {93, 6},  {94, 6},  {95, 6},  {96, 10}, {98, 6},  {99, 8},  {100, 8},
    };
    return t;
}

// Prime-power factorization as (p, p^e) pairs.
std::vector<std::pair<int, int>> pp_factors(int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p <= n; ++p) {
        if (n % p) continue;
        int pe = 1;
        while (n % p == 0) {
            pe *= p;
            n /= p;
        }
        out.push_back({p, pe});
    }
    return out;
}

bool prime_power(int n, int* p_out = nullptr, int* e_out = nullptr) {
    if (n < 2) return false;
    auto f = pp_factors(n);
    if (f.size() != 1) return false;
    if (p_out) *p_out = f[0].first;
    if (e_out) {
        int e = 0, x = f[0].second;
        while (x > 1) {
            x /= f[0].first;
            ++e;
        }
        *e_out = e;
    }
    return true;
}

}  // namespace

int n_lower_bound(int n) {
    if (n < 2) throw std::invalid_argument("n_lower_bound: n must be >= 2");
    if (prime_power(n)) return n - 1;
    int best = 1;
    auto it = published_bounds().find(n);
    if (it != published_bounds().end()) best = std::max(best, it->second);
    int mac = n;  // min over prime-power factors of (pe - 1)
    for (auto [p, pe] : pp_factors(n)) mac = std::min(mac, pe - 1);
    return std::max(best, mac);
}

int constructible_mols_count(int n) {
    if (n < 3) return n == 2 ? 1 : 0;
    if (prime_power(n)) return n - 1;
    int mac = n;
    for (auto [p, pe] : pp_factors(n)) mac = std::min(mac, pe - 1);
    return mac;
}

MolsSet build_mols(int n) {
    MolsSet empty;
    empty.n = n;
    if (n < 2) return empty;
    int p, e;
    if (prime_power(n, &p, &e)) {
        if (n == 2) {
            // The single order-2 square; no field construction below order 3.
            LatinSquare s{2, {{0, 1}, {1, 0}}};
            MolsSet out;
            out.n = 2;
            out.squares.push_back(s);
            return out;
        }
        return mols_from_field(field_new(p, e));
    }
    auto factors = pp_factors(n);
    MolsSet acc = build_mols(factors[0].second);
    for (size_t i = 1; i < factors.size(); ++i) {
        MolsSet next = build_mols(factors[i].second);
        if (acc.squares.empty() || next.squares.empty()) return empty;
        acc = macneish_product(acc, next);
    }
    return acc;
}

}  // namespace sgp
