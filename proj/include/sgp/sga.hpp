#pragma once

#include "sgp/allocation.hpp"

namespace sgp {

struct SgaParams {
    int v = 0;
    int k1 = 0;
    int k2 = 0;  // k1 + 1
    int m1 = 0;  // blocks of size k1 per round
    int m2 = 0;  // blocks of size k2 per round

    bool consistent() const {
        return k2 == k1 + 1 && m1 >= 0 && m2 >= 0 && k1 * m1 + k2 * m2 == v;
    }
};

// The two equal-size problems bracketing an SGA instance:
// {(v+m1, k2), (v-m2, k1)}.
std::pair<std::pair<int, int>, std::pair<int, int>> superior_inferior(const SgaParams& p);

// Removes the given points from every block. The points must be pairwise
// never co-blocked (a subset of one unused clique when cliques are
// declared); each block then loses at most one point and every round keeps
// its shape with |pts| shrunken blocks. Labels are retained.
Allocation remove_points(const Allocation& a, const Block& pts);

// Order-preserving relabeling onto [0, v), followed by canonical ordering.
Allocation renumber(const Allocation& a);

// Adds m2 new points, one per declared parallel column, to every block of
// that column.
Allocation add_points(const Allocation& a, int m2);

// Removes the final point of the final block of the final round from the
// whole design (round count unchanged).
Allocation remove_single_point(const Allocation& a);

// Drops the final round and removes t points of its final block from the
// remaining rounds.
Allocation remove_final_block_points(const Allocation& a, int t);

// The removal policy for designs that carry extra group rounds: m1 = 1
// removes one point, 1 < m1 <= k drops the final round and strips its final
// block, m1 > k removes from a declared clique.
Allocation remove_policy(const Allocation& a, int m1);

}  // namespace sgp
