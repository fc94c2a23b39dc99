#include "sgp/diffmat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sgp {

DmReport verify_dm(const DiffMatrix& d) {
    DmReport rep;
    size_t cols = (size_t)d.t * d.lambda;
    if ((int)d.cells.size() != d.k) return {false, "row count mismatch"};
    for (const auto& row : d.cells) {
        if (row.size() != cols) return {false, "column count mismatch"};
        for (int x : row)
            if (x < 0 || x >= d.t) return {false, "entry outside the group"};
    }
    for (int i = 0; i < d.k; ++i)
        for (int j = i + 1; j < d.k; ++j) {
            std::vector<int> count(d.t, 0);
            for (size_t c = 0; c < cols; ++c)
                count[((d.cells[i][c] - d.cells[j][c]) % d.t + d.t) % d.t]++;
            for (int g = 0; g < d.t; ++g)
                if (count[g] != d.lambda)
                    return {false, "rows (" + std::to_string(i) + "," + std::to_string(j) +
                                       "): element " + std::to_string(g) + " occurs " +
                                       std::to_string(count[g]) + " times"};
        }
    rep.ok = true;
    return rep;
}

DmReport verify_qdm(const QuasiDiffMatrix& q) {
    size_t cols = (size_t)q.lambda * (q.n - 1 + 2 * q.u) + q.mu;
    if ((int)q.cells.size() != q.k) return {false, "row count mismatch"};
    for (const auto& row : q.cells)
        if (row.size() != cols) return {false, "column count mismatch"};
    for (int i = 0; i < q.k; ++i) {
        int empties = 0;
        for (int x : q.cells[i]) {
            if (x == kEmptyCell)
                ++empties;
            else if (x < 0 || x >= q.n)
                return {false, "entry outside the group"};
        }
        if (empties != q.lambda * q.u)
            return {false, "row " + std::to_string(i) + " has " + std::to_string(empties) +
                               " empty cells, want " + std::to_string(q.lambda * q.u)};
    }
    for (size_t c = 0; c < cols; ++c) {
        int empties = 0;
        for (int i = 0; i < q.k; ++i)
            if (q.cells[i][c] == kEmptyCell) ++empties;
        if (empties > 1)
            return {false, "column " + std::to_string(c) + " has two empty cells"};
    }
    for (int i = 0; i < q.k; ++i)
        for (int j = i + 1; j < q.k; ++j) {
            std::vector<int> count(q.n, 0);
            for (size_t c = 0; c < cols; ++c) {
                if (q.cells[i][c] == kEmptyCell || q.cells[j][c] == kEmptyCell) continue;
                count[((q.cells[i][c] - q.cells[j][c]) % q.n + q.n) % q.n]++;
            }
            for (int g = 0; g < q.n; ++g) {
                int want = g == 0 ? q.mu : q.lambda;
                if (count[g] != want)
                    return {false, "rows (" + std::to_string(i) + "," + std::to_string(j) +
                                       "): element " + std::to_string(g) + " occurs " +
                                       std::to_string(count[g]) + " times, want " +
                                       std::to_string(want)};
            }
        }
    return {true, ""};
}

DiffMatrix build_dm_35_7() {
    const int d1[7] = {0, 22, 22, 11, 11, 4, 4};
    const int d2[7][17] = {
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {4, 21, 3, 20, 2, 19, 1, 18, 0, 17, 34, 16, 33, 15, 32, 14, 31},
        {5, 23, 6, 24, 7, 25, 8, 26, 9, 27, 10, 28, 11, 29, 12, 30, 13},
        {19, 34, 15, 1, 13, 33, 18, 12, 27, 8, 29, 6, 26, 25, 5, 20, 0},
        {3, 23, 7, 21, 9, 24, 4, 10, 30, 14, 28, 16, 31, 32, 17, 2, 22},
        {23, 7, 33, 32, 13, 21, 9, 28, 29, 2, 0, 16, 5, 24, 25, 17, 12},
        {20, 1, 10, 11, 30, 22, 34, 15, 14, 6, 8, 27, 3, 19, 18, 26, 31},
    };
    // Third segment: rows (1,2), (3,4), (5,6) of the middle array swapped.
    const int swap_to[7] = {0, 2, 1, 4, 3, 6, 5};
    DiffMatrix d;
    d.t = 35;
    d.k = 7;
    d.lambda = 1;
    d.cells.assign(7, std::vector<int>(35));
    for (int i = 0; i < 7; ++i) {
        d.cells[i][0] = d1[i];
        for (int c = 0; c < 17; ++c) {
            d.cells[i][1 + c] = d2[i][c];
            d.cells[i][18 + c] = d2[swap_to[i]][c];
        }
    }
    return d;
}

DiffMatrix dm_from_prime_field(const Field& f, int rows) {
    if (f.e() != 1)
        throw std::invalid_argument("dm_from_prime_field: prime fields only");
    if (rows < 1 || rows > (int)f.q())
        throw std::invalid_argument("dm_from_prime_field: bad row count");
    DiffMatrix d;
    d.t = (int)f.q();
    d.k = rows;
    d.lambda = 1;
    d.cells.assign(rows, std::vector<int>(d.t));
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < d.t; ++c) d.cells[i][c] = f.mul(i, c);
    return d;
}

OrthArray dm_to_oa(const DiffMatrix& d) {
    if (d.lambda != 1) throw std::invalid_argument("dm_to_oa: lambda must be 1");
    OrthArray oa;
    oa.k = d.k;
    oa.s = d.t;
    oa.cells.assign(d.k, std::vector<int>());
    for (int c = 0; c < d.t; ++c)
        for (int g = 0; g < d.t; ++g)
            for (int i = 0; i < d.k; ++i) oa.cells[i].push_back((d.cells[i][c] + g) % d.t);
    return oa;
}

bool verify_grid(const BlockGrid& g) {
    if ((int)g.cells.size() != g.rows) return false;
    for (const auto& row : g.cells) {
        if ((int)row.size() != g.cols) return false;
        std::set<int> covered;
        size_t npts = 0;
        for (const auto& b : row) {
            covered.insert(b.begin(), b.end());
            npts += b.size();
            for (int x : b)
                if (x < 0 || x >= g.v) return false;
        }
        if ((int)covered.size() != g.v || npts != covered.size()) return false;
    }
    for (int c : g.parallel_cols) {
        if (c < 0 || c >= g.cols) return false;
        std::set<int> covered;
        size_t npts = 0;
        for (int r = 0; r < g.rows; ++r) {
            covered.insert(g.cells[r][c].begin(), g.cells[r][c].end());
            npts += g.cells[r][c].size();
        }
        if (covered.size() != npts) return false;  // blocks overlap
    }
    return true;
}

BlockGrid dm_grid(const DiffMatrix& d) {
    if (d.lambda != 1) throw std::invalid_argument("dm_grid: lambda must be 1");
    if (d.k < 2) throw std::invalid_argument("dm_grid: need at least two rows");
    int t = d.t;
    // Normalize so row 0 is constant zero.
    std::vector<std::vector<int>> norm(d.k, std::vector<int>(t));
    for (int i = 0; i < d.k; ++i)
        for (int c = 0; c < t; ++c)
            norm[i][c] = ((d.cells[i][c] - d.cells[0][c]) % t + t) % t;

    BlockGrid g;
    g.rows = t;
    g.cols = t;
    g.block_size = d.k - 1;
    g.v = (d.k - 1) * t;
    g.cells.assign(t, std::vector<Block>(t));
    for (int shift = 0; shift < t; ++shift)
        for (int c = 0; c < t; ++c) {
            Block b;
            for (int s = 1; s < d.k; ++s) b.push_back((s - 1) * t + (norm[s][c] + shift) % t);
            g.cells[shift][c] = std::move(b);
        }
    for (int c = 0; c < t; ++c) g.parallel_cols.push_back(c);
    return g;
}

namespace {

// Columns after hole filling and reordering: group entries in [0,n),
// infinite points n..n+u-1; columns with an infinite point in row i sit at
// positions [i*u, (i+1)*u), plain columns afterwards.
struct PreparedQdm {
    int n, k, u;
    std::vector<std::vector<int>> cols;  // n+2u columns, each of k entries
};

PreparedQdm prepare(const QuasiDiffMatrix& q) {
    if (q.lambda != 1) throw std::invalid_argument("qdm construction: lambda must be 1");
    if (q.mu > 1) throw std::invalid_argument("qdm construction: mu must be at most 1");
    DmReport rep = verify_qdm(q);
    if (!rep.ok) throw std::invalid_argument("qdm construction: invalid matrix: " + rep.detail);

    int ncols = q.n - 1 + 2 * q.u + q.mu;
    std::vector<std::vector<int>> cols;
    for (int c = 0; c < ncols; ++c) {
        std::vector<int> col(q.k);
        for (int i = 0; i < q.k; ++i) col[i] = q.cells[i][c];
        cols.push_back(col);
    }
    for (int z = 0; z < 1 - q.mu; ++z) cols.push_back(std::vector<int>(q.k, 0));

    // Replace the u empties of each row by distinct infinite points, in
    // column order.
    std::vector<int> next_inf(q.k, 0);
    std::vector<int> inf_row(cols.size(), -1);
    for (size_t c = 0; c < cols.size(); ++c)
        for (int i = 0; i < q.k; ++i)
            if (cols[c][i] == kEmptyCell) {
                cols[c][i] = q.n + next_inf[i]++;
                inf_row[c] = i;
            }

    PreparedQdm out;
    out.n = q.n;
    out.k = q.k;
    out.u = q.u;
    for (int i = 0; i < q.k; ++i)
        for (size_t c = 0; c < cols.size(); ++c)
            if (inf_row[c] == i) out.cols.push_back(cols[c]);
    for (size_t c = 0; c < cols.size(); ++c)
        if (inf_row[c] < 0) out.cols.push_back(cols[c]);
    return out;
}

// Entry development: group elements shift, infinite points stay put.
int develop(int entry, int g, int n) { return entry < n ? (entry + g) % n : entry; }

}  // namespace

BlockGrid qdm_grid(const QuasiDiffMatrix& q) {
    PreparedQdm p = prepare(q);
    int kb = p.k - 1;  // block size
    int span = p.n + p.u;

    BlockGrid g;
    g.rows = p.n;
    g.cols = span;
    g.block_size = kb;
    g.v = kb * span;
    g.cells.assign(g.rows, std::vector<Block>(g.cols));
    for (int c = 0; c < g.cols; ++c) {
        const auto& col = p.cols[c + p.u];
        for (int shift = 0; shift < p.n; ++shift) {
            int row = develop(col[0], shift, p.n);  // col[0] is always a group element here
            Block b;
            for (int s = 1; s < p.k; ++s) b.push_back((s - 1) * span + develop(col[s], shift, p.n));
            g.cells[row][c] = std::move(b);
        }
    }
    for (int c = kb * p.u; c < g.cols; ++c) g.parallel_cols.push_back(c);
    return g;
}

BlockGrid qdm_grid_extended(const QuasiDiffMatrix& q) {
    BlockGrid g = qdm_grid(q);
    if (q.u == 0) return g;  // no infinite points, no extra row

    PreparedQdm p = prepare(q);
    int kb = p.k - 1;
    int span = p.n + p.u;

    // Hole filling: a TD(k,u) on the infinite points (trivial for u=1).
    std::vector<Block> hole_blocks;
    if (p.u == 1) {
        Block b;
        for (int s = 1; s < p.k; ++s) b.push_back((s - 1) * span + p.n);
        hole_blocks.push_back(b);
    } else {
        MolsSet mols = build_mols(p.u);
        if ((int)mols.squares.size() < p.k - 2)
            throw std::invalid_argument("qdm_grid_extended: cannot fill a hole of this size");
        mols.squares.resize(p.k - 2);
        GroupedDesign td = td_from_mols(mols);  // TD(k, u), point m of group i = i*u+m
        for (const auto& blk : td.blocks) {
            std::vector<int> sym(p.k);
            for (int x : blk) sym[x / p.u] = x % p.u;
            if (sym[0] != 0) continue;  // keep the blocks through the first infinite point
            Block b;
            for (int s = 1; s < p.k; ++s) b.push_back((s - 1) * span + p.n + sym[s]);
            hole_blocks.push_back(b);
        }
    }

    // Blocks of the development through the first infinite point in row 0.
    int j0 = -1;
    for (int j = 0; j < p.u; ++j)
        if (p.cols[j][0] == p.n) j0 = j;
    std::vector<Block> inf_blocks;
    for (int shift = 0; shift < p.n; ++shift) {
        Block b;
        for (int s = 1; s < p.k; ++s)
            b.push_back((s - 1) * span + develop(p.cols[j0][s], shift, p.n));
        inf_blocks.push_back(b);
    }

    std::vector<Block> extra(span);
    std::vector<char> taken(span, 0);
    for (int m = 0; m < (int)hole_blocks.size() && m < p.u; ++m) {
        extra[kb * p.u + m] = hole_blocks[m];
        taken[kb * p.u + m] = 1;
    }
    size_t next = 0;
    for (int c = 0; c < span; ++c) {
        if (taken[c]) continue;
        extra[c] = inf_blocks[next++];
    }
    g.cells.push_back(std::move(extra));
    g.rows += 1;
    g.parallel_cols.clear();
    for (int m = 0; m < p.u; ++m) g.parallel_cols.push_back(kb * p.u + m);
    return g;
}

GroupedDesign itd_from_qdm(const QuasiDiffMatrix& q) {
    if (q.mu > q.lambda) throw std::invalid_argument("itd_from_qdm: mu must be at most lambda");
    PreparedQdm p = prepare(q);
    int span = p.n + p.u;

    GroupedDesign itd;
    itd.k = p.k;
    itd.v = p.k * span;
    for (int i = 0; i < p.k; ++i) {
        Block g(span);
        for (int x = 0; x < span; ++x) g[x] = i * span + x;
        itd.groups.push_back(g);
        for (int m = 0; m < p.u; ++m) itd.hole.push_back(i * span + p.n + m);
    }
    for (const auto& col : p.cols)
        for (int shift = 0; shift < p.n; ++shift) {
            Block b;
            for (int i = 0; i < p.k; ++i) b.push_back(i * span + develop(col[i], shift, p.n));
            itd.blocks.push_back(b);
        }
    return itd;
}

Allocation grid_to_allocation(const BlockGrid& g) {
    Allocation a;
    a.v = g.v;
    for (int r = 0; r < g.rows; ++r) {
        Round round;
        for (int c = 0; c < g.cols; ++c)
            if (!g.cells[r][c].empty()) round.push_back(g.cells[r][c]);
        a.rounds.push_back(round);
    }
    for (int c : g.parallel_cols) {
        ColumnRef col;
        for (int r = 0; r < g.rows; ++r) {
            // Index of cell (r,c) among the non-empty cells of its row.
            int idx = 0;
            for (int cc = 0; cc < c; ++cc)
                if (!g.cells[r][cc].empty()) ++idx;
            if (!g.cells[r][c].empty()) col.push_back({r, idx});
        }
        a.columns.push_back(col);
    }
    refresh_shape(a);
    a.canonicalize();
    return a;
}

}  // namespace sgp
