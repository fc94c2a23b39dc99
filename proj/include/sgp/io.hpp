#pragma once

#include <iosfwd>
#include <string>

#include "sgp/allocation.hpp"
#include "sgp/constructions.hpp"
#include "sgp/designs.hpp"
#include "sgp/diffmat.hpp"
#include "sgp/latin.hpp"

namespace sgp {

// Canonical allocation text format:
//   allocation v=<v> sizes=<k1>[,<k2>] counts=<m1>[,<m2>] rounds=<r>
//   round <i>
//   <points of one block, space separated, ascending>
//   ...
// with optional trailing `cliques` (one point list per line) and `columns`
// (one line per column of space-separated round:block pairs) sections.
Allocation read_allocation(std::istream& in, const std::string& name = "<stream>");
Allocation read_allocation_file(const std::string& path);
void write_allocation(std::ostream& out, const Allocation& a, bool with_metadata = false);
std::string allocation_to_string(const Allocation& a, bool with_metadata = false);
void write_allocation_file(const std::string& path, const Allocation& a,
                           bool with_metadata = false);

// Design text format:
//   design type=<td|rtd|itd|gdd|bibd|rbibd|urd> v=<v> k=<k>
// followed by `class [size=<s>]` sections (resolvable designs / URDs) or a
// `blocks` section, plus optional `groups` and `hole` sections.
struct DesignFile {
    std::string type;
    GroupedDesign grouped;  // td/rtd/itd/gdd
    BibdDesign bibd;        // bibd/rbibd
    UrdDesign urd;          // urd
};
DesignFile read_design(std::istream& in, const std::string& name = "<stream>");
DesignFile read_design_file(const std::string& path);

// Latin square file: `latin n=<n> count=<m>`, then m n-line blocks.
MolsSet read_mols(std::istream& in, const std::string& name = "<stream>");
MolsSet read_mols_file(const std::string& path);

// Starter file: `starters v=<v> k=<k> r=<r>`, one comma-separated block per line.
StarterSet read_starters(std::istream& in, const std::string& name = "<stream>");
StarterSet read_starters_file(const std::string& path);

// QDM file: `qdm n=<n> k=<k> lambda=<l> mu=<m> u=<u> group=Z<n>`,
// then k rows of entries with `-` for an empty cell.
QuasiDiffMatrix read_qdm(std::istream& in, const std::string& name = "<stream>");
QuasiDiffMatrix read_qdm_file(const std::string& path);

// Directory of bundled designs and tables used by the planner.
class DataRepo {
public:
    explicit DataRepo(std::string dir);
    static std::string default_dir();

    const std::string& dir() const { return dir_; }
    bool has(const std::string& rel) const;
    std::string path(const std::string& rel) const;

    Allocation allocation(const std::string& rel) const;
    DesignFile design(const std::string& rel) const;
    MolsSet mols(const std::string& rel) const;
    StarterSet starters(const std::string& rel) const;

    // Bundled MOLS for orders the field/MacNeish route cannot reach.
    bool has_bundled_mols(int n) const;
    MolsSet bundled_mols(int n) const;

    // Appendix starter sets keyed by (v,k); empty optional when absent.
    bool has_starters(int v, int k) const;
    StarterSet starters_for(int v, int k) const;

private:
    std::string dir_;
};

}  // namespace sgp
