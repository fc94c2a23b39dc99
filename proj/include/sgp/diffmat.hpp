#pragma once

#include <string>
#include <vector>

#include "sgp/designs.hpp"

namespace sgp {

// (t,k;lambda) difference matrix over the cyclic group Z_t: for every row
// pair the difference list covers each group element exactly lambda times.
struct DiffMatrix {
    int t = 0;
    int k = 0;
    int lambda = 1;
    std::vector<std::vector<int>> cells;  // k rows, t*lambda columns
};

// (n,k;lambda,mu;u) quasi-difference matrix over Z_n. EMPTY cells hold -1.
struct QuasiDiffMatrix {
    int n = 0;
    int k = 0;
    int lambda = 1;
    int mu = 0;
    int u = 0;
    std::vector<std::vector<int>> cells;  // k rows, lambda*(n-1+2u)+mu columns
};

constexpr int kEmptyCell = -1;

struct DmReport {
    bool ok = false;
    std::string detail;  // first failing row pair / element when not ok
};

DmReport verify_dm(const DiffMatrix& d);
DmReport verify_qdm(const QuasiDiffMatrix& q);

// The 7x35 matrix over Z_35 assembled from a single fixed column, a 7x17
// array and the same array with rows (1,2),(3,4),(5,6) interchanged.
DiffMatrix build_dm_35_7();

// Rows 0..rows-1 of the multiplication table of a prime field: a
// (p,rows;1) difference matrix.
DiffMatrix dm_from_prime_field(const Field& f, int rows);

// Develop a lambda=1 difference matrix into an OA(k,t).
OrthArray dm_to_oa(const DiffMatrix& d);

// r x c grid of blocks; every row partitions the point set, every flagged
// column is a set of pairwise-disjoint blocks (a full partition when the
// grid comes from a plain difference matrix).
struct BlockGrid {
    int rows = 0;
    int cols = 0;
    int block_size = 0;
    int v = 0;
    std::vector<std::vector<Block>> cells;  // rows x cols
    std::vector<int> parallel_cols;
};

bool verify_grid(const BlockGrid& g);

// Normalizes the matrix (subtracts row 0) and develops rows 1..k-1 into a
// t x t grid of (k-1)-blocks on (k-1)t points where both the rows and all
// t columns are parallel classes.
BlockGrid dm_grid(const DiffMatrix& d);

// Construction from an (n,k;1,mu;u)-QDM, mu <= 1: an n x (n+u) grid of
// (k-1)-blocks on (k-1)(n+u) points; rows are parallel classes and the
// last n-(k-2)u columns are pairwise disjoint.
BlockGrid qdm_grid(const QuasiDiffMatrix& q);

// Same with one extra row assembled from the blocks through the first
// infinite point; u columns of height n+1 stay parallel.
BlockGrid qdm_grid_extended(const QuasiDiffMatrix& q);

// ITD(n+u, u; k) from an (n,k;1,mu;u)-QDM with mu <= 1.
GroupedDesign itd_from_qdm(const QuasiDiffMatrix& q);

// Grid rows as allocation rounds; flagged columns become column metadata.
Allocation grid_to_allocation(const BlockGrid& g);

}  // namespace sgp
