#pragma once

#include <optional>
#include <string>

#include "sgp/allocation.hpp"
#include "sgp/catalog.hpp"
#include "sgp/io.hpp"
#include "sgp/sga.hpp"

namespace sgp {

enum class PlanStatus { Constructed, DataRequired, SingleRound };

std::string to_string(PlanStatus s);

struct PlanNode {
    int v = 0;
    int k1 = 0;
    int k2 = 0;  // 0 for a single block size
    int m1 = 0;
    int m2 = 0;
    std::string method;
    int r = 0;
    int max = 0;
    PlanStatus status = PlanStatus::DataRequired;
    std::optional<Allocation> alloc;
    std::string note;
};

// Method selection for optimal allocations: the equal-size selection
// algorithm with its special-case supplement, plus published-row
// reconstruction for the adjacent-size problem.
class Planner {
public:
    explicit Planner(DataRepo repo);

    const Catalog& catalog() const { return catalog_; }
    const DataRepo& repo() const { return repo_; }

    // Selects (and where possible constructs) the method for an optimal
    // (v,k) allocation.
    PlanNode optimal(int v, int k);

    // Supplement for k >= 5 when no resolvable design is known: best of the
    // Latin-rectangle, starter-block, URD and incomplete-transversal routes.
    PlanNode special(int v, int k);

    // Looks up the published row for the adjacent-size instance and
    // reconstructs it when its ingredients are available in-repo.
    PlanNode plan_sga(const SgaParams& p);

    // Published r when the row exists, else the best plan's r.
    int opt_rounds(int v, int k);

    // Builds the allocation a parsed descriptor denotes, or nullopt when it
    // needs outside data.
    std::optional<Allocation> reconstruct(const MethodExpr& m);

    // Count of MOLS(n) available in-repo (constructed or bundled).
    int available_mols(int n) const;

private:
    DataRepo repo_;
    Catalog catalog_;

    MolsSet mols_for(int n) const;
    std::optional<Allocation> base_allocation(const MethodExpr& m);
    std::optional<Allocation> with_group_rounds(Allocation base, int clique_size, int t, int k);
    PlanNode single_round_node(int v, int k);
    PlanNode finish(int v, int k, MethodExpr expr, int formula_r);
};

// Literal exception sets from the published selection algorithm and
// existence results.
namespace existence {
bool in_exceptions_a(int v);            // the k=4, v mod 12 == 8 special list
bool rbibd_exists(int v, int k);        // per-k existence data
bool nkts_exists(int v);                // v mod 6 == 0, v not in {6,12}
}  // namespace existence

}  // namespace sgp
