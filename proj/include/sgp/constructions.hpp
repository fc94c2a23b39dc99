#pragma once

#include "sgp/allocation.hpp"
#include "sgp/designs.hpp"
#include "sgp/latin.hpp"

namespace sgp {

// Starter blocks over Z_v, one round per block: round m of block B is
// {B + k*j : 0 <= j < v/k}.
struct StarterSet {
    int v = 0;
    int k = 0;
    std::vector<Block> blocks;  // each contains 0
};

// Checks the three starter-block conditions exhaustively:
//  (1) every block contains 0 and no within-block difference is a multiple
//      of k,
//  (2) distinct blocks meet only in 0,
//  (3) a difference realized twice between two blocks is never a multiple
//      of k.
Certificate ownsg_verify(const StarterSet& s);

// Expands the starter set into |blocks| rounds. The k residue classes mod k
// are exposed as unused cliques. When k divides v/k and extra_rounds is
// supplied (an optimal (v/k, k) allocation), its rounds are appended by
// splitting every clique.
Allocation ownsg_expand(const StarterSet& s, const Allocation* extra_rounds = nullptr);

// Sharma-and-Das rounds for v = k*n from g mutually orthogonal k x n Latin
// rectangles (the first k rows of the given squares): one round of columns
// plus one round per rectangle. The k rows of the ground array are exposed
// as unused cliques; when k divides n and extra_rounds is supplied they are
// split into further rounds.
Allocation molrs(int k, int n, const MolsSet& squares, const Allocation* extra_rounds = nullptr);

// Appends the rounds of sub (an optimal (g,k) allocation on g points) to a,
// mapping round blocks through every clique of size g simultaneously. The
// used cliques are replaced by any leftover unused structure found by a
// bounded clique search.
Allocation augment_group_rounds(const Allocation& a, const Allocation& sub);

// Deterministic backtracking for a largest set of pairwise never-co-blocked
// points (capped at want). Used to re-declare removable cliques after group
// rounds consume the natural ones.
Block find_unused_clique(const Allocation& a, int want);

}  // namespace sgp
