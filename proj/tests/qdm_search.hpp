#pragma once

// Test-only deterministic backtracking search for an (n,k;1,mu;u)-QDM over
// Z_n: column-major, smallest entry first. Serves as the independent oracle
// for the grid and incomplete-design constructions.

#include <utility>
#include <vector>

#include "sgp/diffmat.hpp"

namespace sgp_test {

struct QdmSearch {
    int n, k, mu, u, cols;
    std::vector<std::vector<int>> cells;
    std::vector<std::vector<int>> diff_count;
    std::vector<int> row_empties;
    std::vector<int> col_empties;

    QdmSearch(int n_, int k_, int mu_, int u_)
        : n(n_), k(k_), mu(mu_), u(u_), cols(n_ - 1 + 2 * u_ + mu_),
          cells(k_, std::vector<int>(cols, -2)), row_empties(k_, 0), col_empties(cols, 0) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) diff_count.push_back(std::vector<int>(n, 0));
    }
    int pair_index(int i, int j) const { return (2 * k - i - 1) * i / 2 + (j - i - 1); }

    bool fill(int c, int r) {
        if (c == cols) return true;
        if (r == k) return fill(c + 1, 0);
        for (int val = -1; val < n; ++val) {
            if (val == -1) {
                if (row_empties[r] == u || col_empties[c] == 1) continue;
                row_empties[r]++;
                col_empties[c]++;
                cells[r][c] = -1;
                if (fill(c, r + 1)) return true;
                cells[r][c] = -2;
                row_empties[r]--;
                col_empties[c]--;
                continue;
            }
            bool ok = true;
            std::vector<std::pair<int, int>> touched;
            for (int i = 0; i < r && ok; ++i) {
                if (cells[i][c] == -1) continue;
                int d = ((cells[i][c] - val) % n + n) % n;
                int want = d == 0 ? mu : 1;
                int idx = pair_index(i, r);
                if (diff_count[idx][d] + 1 > want) {
                    ok = false;
                } else {
                    diff_count[idx][d]++;
                    touched.push_back({idx, d});
                }
            }
            if (ok) {
                cells[r][c] = val;
                if (fill(c, r + 1)) return true;
                cells[r][c] = -2;
            }
            for (auto [idx, d] : touched) diff_count[idx][d]--;
        }
        return false;
    }
};

// Smallest n in [n_lo, n_hi] admitting an (n,k;1,mu;u)-QDM; n == 0 when none.
inline sgp::QuasiDiffMatrix search_qdm(int k, int mu, int u, int n_lo, int n_hi) {
    for (int n = n_lo; n <= n_hi; ++n) {
        QdmSearch s(n, k, mu, u);
        if (s.fill(0, 0)) {
            sgp::QuasiDiffMatrix q;
            q.n = n;
            q.k = k;
            q.lambda = 1;
            q.mu = mu;
            q.u = u;
            q.cells = s.cells;
            return q;
        }
    }
    return {};
}

}  // namespace sgp_test
