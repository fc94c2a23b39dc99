#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sgp {

using Block = std::vector<int>;
using Round = std::vector<Block>;

// One (round, block-index) position per round; a column's blocks are
// pairwise disjoint, so an extra point can join every one of them.
using ColumnRef = std::vector<std::pair<int, int>>;

// v labeled points arranged in rounds of disjoint blocks, every unordered
// pair co-blocked at most once. Labels need not be contiguous (point
// removal keeps the original names); v is the number of distinct labels.
struct Allocation {
    int v = 0;
    std::vector<int> sizes;   // one or two block sizes, ascending
    std::vector<int> counts;  // blocks per round of each size
    std::vector<Round> rounds;

    // Optional structure metadata carried by constructions.
    std::vector<Block> cliques;      // point sets no block ever pairs up
    std::vector<ColumnRef> columns;  // parallel columns usable by add_points

    // Sort points in blocks, blocks by first point; rounds keep their order.
    // Metadata column references are remapped.
    void canonicalize();

    std::vector<int> labels() const;  // sorted distinct point labels
};

struct AllocationCert {
    bool valid = false;
    int rounds = 0;
    int max_bound = 0;  // floor((v-1)/(k1-1)) for the smaller block size
    bool maximal = false;
    long pairs_covered = 0;
    long pairs_total = 0;
    std::vector<std::pair<int, int>> missing_pairs;
    std::vector<std::string> violations;
};

// Exhaustive check of the round partitions, the per-round block-size
// multiset and global pair uniqueness.
AllocationCert verify_allocation(const Allocation& a);

// floor((v-1)/(k-1)); throws for k < 2.
int max_rounds(int v, int k);

// First r rounds; throws if r exceeds the round count.
Allocation truncate_rounds(const Allocation& a, int r);

// Recomputes sizes/counts from the blocks of the first round.
void refresh_shape(Allocation& a);

}  // namespace sgp
