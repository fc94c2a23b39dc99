#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgp/allocation.hpp"
#include "sgp/latin.hpp"

namespace sgp {

struct Certificate {
    bool valid = false;
    std::vector<std::string> violations;
};

// k x s^2 array; every ordered symbol pair appears exactly once in every
// row pair.
struct OrthArray {
    int k = 0;
    int s = 0;
    std::vector<std::vector<int>> cells;  // k rows of s^2 entries
};

bool verify_oa(const OrthArray& oa);

// Blocks plus distinguished groups partitioning the points, an optional
// hole (ITD) and an optional resolution into parallel classes.
struct GroupedDesign {
    int v = 0;
    int k = 0;                              // block size
    std::vector<Block> blocks;
    std::vector<Block> groups;
    Block hole;                             // empty unless an ITD
    std::vector<std::vector<int>> resolution;  // classes as block indices
};

struct BibdDesign {
    int v = 0;
    int k = 0;
    std::vector<Block> blocks;
    std::vector<std::vector<int>> resolution;
};

struct UrdDesign {
    int v = 0;
    std::vector<int> class_sizes;       // block size of each parallel class
    std::vector<Round> classes;
};

Certificate verify_gdd(const GroupedDesign& d);
Certificate verify_td(const GroupedDesign& d);
Certificate verify_itd(const GroupedDesign& d);
Certificate verify_bibd(const BibdDesign& d);
Certificate verify_urd(const UrdDesign& d);

// Literal divisibility conditions a BIBD(v,k) must satisfy (regularity and
// block-count integrality). Necessary, not sufficient.
bool bibd_necessary(int v, int k);

// g squares of order n -> TD(g+2, n) on (g+2)n points, group j holding
// points j*n..j*n+n-1.
GroupedDesign td_from_mols(const MolsSet& m);

// Removes the last group of a TD(k+1,n) and classes the blocks by their
// removed point, giving a resolvable RTD(k,n).
GroupedDesign rtd_from_td(const GroupedDesign& td);

// Parallel classes of a resolvable design as allocation rounds. Groups are
// exposed as unused cliques.
Allocation allocation_from_design(const GroupedDesign& d);
Allocation allocation_from_design(const BibdDesign& d);
// URD: only the classes of the selected block size; blocks of the other
// classes become unused cliques.
Allocation allocation_from_design(const UrdDesign& d, int selected_size);

struct ItdRounds {
    std::vector<Round> complete;  // partition all k*n1 remaining points
    std::vector<Round> partial;
};

// Removes the last group of an ITD(n1,n2;k+1); classes for non-hole removed
// points are complete, classes for hole points are partial.
ItdRounds rounds_from_itd(const GroupedDesign& itd);

OrthArray td_to_oa(const GroupedDesign& td);
GroupedDesign oa_to_td(const OrthArray& oa);

// Disjoint (q,k,1) difference family over GF(q): t = (q-1)/(k(k-1))
// pairwise-disjoint k-subsets whose differences cover every nonzero field
// element exactly once. Deterministic lexicographic backtracking;
// nullopt when the exhaustive search finds none.
std::optional<std::vector<Block>> search_disjoint_df(int q, int k);

// Development attempt for a resolvable design on kq points from a disjoint
// difference family. Returns the design only if it passes verify_bibd and
// the resolution check; otherwise nullopt (construction failed). Never
// returns an unverified design.
std::optional<BibdDesign> rbibd_from_disjoint_df(int q, int k, const std::vector<Block>& family);

// RBIBD(q^2, q) for prime-power q: the q resolution classes of an RTD(q,q)
// plus its groups as a final class.
BibdDesign rbibd_affine(int q);

}  // namespace sgp
