#include "sgp/designs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sgp/gf.hpp"

namespace sgp {

bool verify_oa(const OrthArray& oa) {
    if (oa.k < 1 || oa.s < 1 || (int)oa.cells.size() != oa.k) return false;
    size_t cols = (size_t)oa.s * oa.s;
    for (const auto& row : oa.cells) {
        if (row.size() != cols) return false;
        for (int x : row)
            if (x < 0 || x >= oa.s) return false;
    }
    std::vector<char> seen(cols);
    for (int i = 0; i < oa.k; ++i)
        for (int j = i + 1; j < oa.k; ++j) {
            std::fill(seen.begin(), seen.end(), 0);
            for (size_t c = 0; c < cols; ++c) {
                size_t key = (size_t)oa.cells[i][c] * oa.s + oa.cells[j][c];
                if (seen[key]) return false;
                seen[key] = 1;
            }
        }
    return true;
}

namespace {

// Pair accounting helper: 0 = unseen, 1 = in a block, 2 = in a group.
struct PairMap {
    int v;
    std::vector<unsigned char> m;
    explicit PairMap(int v_) : v(v_), m((size_t)v_ * v_, 0) {}
    unsigned char& at(int a, int b) {
        return m[(size_t)std::min(a, b) * v + std::max(a, b)];
    }
};

bool points_in_range(const std::vector<Block>& blocks, int v) {
    for (const auto& b : blocks)
        for (int x : b)
            if (x < 0 || x >= v) return false;
    return true;
}

}  // namespace

Certificate verify_gdd(const GroupedDesign& d) {
    Certificate cert;
    if (!points_in_range(d.blocks, d.v) || !points_in_range(d.groups, d.v)) {
        cert.violations.push_back("point label out of range");
        return cert;
    }
    std::set<int> gpts;
    size_t gtotal = 0;
    for (const auto& g : d.groups) {
        gpts.insert(g.begin(), g.end());
        gtotal += g.size();
    }
    if ((int)gpts.size() != d.v || gtotal != gpts.size())
        cert.violations.push_back("groups do not partition the point set");

    PairMap pairs(d.v);
    for (const auto& g : d.groups)
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = i + 1; j < g.size(); ++j) pairs.at(g[i], g[j]) = 2;

    for (const auto& b : d.blocks) {
        if ((int)b.size() != d.k) {
            cert.violations.push_back("block of wrong size");
            continue;
        }
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j) {
                auto& s = pairs.at(b[i], b[j]);
                if (s != 0) {
                    cert.violations.push_back("pair {" + std::to_string(b[i]) + "," +
                                              std::to_string(b[j]) +
                                              (s == 2 ? "} lies in a group and a block"
                                                      : "} covered twice by blocks"));
                }
                s = 1;
            }
    }
    for (int a = 0; a < d.v; ++a)
        for (int b = a + 1; b < d.v; ++b)
            if (pairs.at(a, b) == 0)
                cert.violations.push_back("pair {" + std::to_string(a) + "," +
                                          std::to_string(b) + "} uncovered");

    if (!d.resolution.empty()) {
        std::vector<char> used(d.blocks.size(), 0);
        for (const auto& cls : d.resolution) {
            std::set<int> covered;
            size_t npts = 0;
            for (int bi : cls) {
                if (bi < 0 || bi >= (int)d.blocks.size()) {
                    cert.violations.push_back("resolution references a bad block");
                    continue;
                }
                used[bi] = 1;
                covered.insert(d.blocks[bi].begin(), d.blocks[bi].end());
                npts += d.blocks[bi].size();
            }
            if ((int)covered.size() != d.v || npts != covered.size())
                cert.violations.push_back("resolution class is not a parallel class");
        }
        if (std::count(used.begin(), used.end(), 1) != (long)d.blocks.size())
            cert.violations.push_back("resolution does not cover all blocks");
        // A resolvable GDD with equal block sizes forces equal group sizes.
        for (const auto& g : d.groups)
            if (g.size() != d.groups[0].size()) {
                cert.violations.push_back("resolvable GDD with non-uniform groups");
                break;
            }
    }
    cert.valid = cert.violations.empty();
    return cert;
}

Certificate verify_td(const GroupedDesign& d) {
    Certificate cert = verify_gdd(d);
    int k = (int)d.groups.size();
    if (k != d.k)
        cert.violations.push_back("TD must have exactly k groups");
    size_t n = d.groups.empty() ? 0 : d.groups[0].size();
    for (const auto& g : d.groups)
        if (g.size() != n) cert.violations.push_back("TD groups must have equal size");
    // Every block meets every group exactly once.
    std::vector<int> group_of(d.v, -1);
    for (size_t gi = 0; gi < d.groups.size(); ++gi)
        for (int x : d.groups[gi]) group_of[x] = (int)gi;
    for (const auto& b : d.blocks) {
        std::set<int> hit;
        for (int x : b) hit.insert(group_of[x]);
        if ((int)hit.size() != d.k)
            cert.violations.push_back("block is not a transversal of the groups");
    }
    cert.valid = cert.violations.empty();
    return cert;
}

Certificate verify_itd(const GroupedDesign& d) {
    Certificate cert;
    if (!points_in_range(d.blocks, d.v) || !points_in_range(d.groups, d.v)) {
        cert.violations.push_back("point label out of range");
        cert.valid = false;
        return cert;
    }
    int k = (int)d.groups.size();
    if (k == 0 || d.v % k != 0) {
        cert.violations.push_back("groups missing or of impossible size");
        return cert;
    }
    size_t n1 = d.v / k;
    for (const auto& g : d.groups)
        if (g.size() != n1) cert.violations.push_back("ITD groups must have equal size");

    std::set<int> hole(d.hole.begin(), d.hole.end());
    if (hole.size() % k != 0)
        cert.violations.push_back("hole size must be a multiple of the group count");
    for (const auto& g : d.groups) {
        size_t in_hole = 0;
        for (int x : g) in_hole += hole.count(x);
        if (in_hole * k != hole.size())
            cert.violations.push_back("hole does not meet every group equally");
    }

    std::vector<int> group_of(d.v, -1);
    for (size_t gi = 0; gi < d.groups.size(); ++gi)
        for (int x : d.groups[gi]) group_of[x] = (int)gi;

    PairMap pairs(d.v);
    for (const auto& b : d.blocks) {
        if ((int)b.size() != d.k) cert.violations.push_back("block of wrong size");
        std::set<int> hit;
        for (int x : b) hit.insert(group_of[x]);
        if ((int)hit.size() != (int)b.size())
            cert.violations.push_back("block meets a group twice");
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j) {
                auto& s = pairs.at(b[i], b[j]);
                if (s != 0)
                    cert.violations.push_back("pair {" + std::to_string(b[i]) + "," +
                                              std::to_string(b[j]) + "} covered twice");
                s = 1;
                if (hole.count(b[i]) && hole.count(b[j]))
                    cert.violations.push_back("hole pair {" + std::to_string(b[i]) + "," +
                                              std::to_string(b[j]) + "} inside a block");
            }
    }
    // Cross-group pairs must be covered unless both endpoints are in the hole.
    for (int a = 0; a < d.v; ++a)
        for (int b = a + 1; b < d.v; ++b) {
            if (group_of[a] == group_of[b]) {
                if (pairs.at(a, b) == 1)
                    cert.violations.push_back("within-group pair in a block");
                continue;
            }
            bool exempt = hole.count(a) && hole.count(b);
            if (!exempt && pairs.at(a, b) == 0)
                cert.violations.push_back("pair {" + std::to_string(a) + "," +
                                          std::to_string(b) + "} uncovered");
        }
    cert.valid = cert.violations.empty();
    return cert;
}

bool bibd_necessary(int v, int k) {
    if (k < 2 || v < k) return false;
    // r = (v-1)/(k-1) and b = v(v-1)/(k(k-1)) must both be integers.
    if ((v - 1) % (k - 1) != 0) return false;
    return (long long)v * (v - 1) % ((long long)k * (k - 1)) == 0;
}

Certificate verify_bibd(const BibdDesign& d) {
    Certificate cert;
    if (!points_in_range(d.blocks, d.v)) {
        cert.violations.push_back("point label out of range");
        return cert;
    }
    if (!bibd_necessary(d.v, d.k)) {
        cert.violations.push_back("parameters fail the divisibility conditions");
        return cert;
    }
    long long r = (d.v - 1) / (d.k - 1);
    long long b = (long long)d.v * (d.v - 1) / ((long long)d.k * (d.k - 1));
    if ((long long)d.blocks.size() != b)
        cert.violations.push_back("block count != v(v-1)/k(k-1)");

    PairMap pairs(d.v);
    std::vector<long long> through(d.v, 0);
    for (const auto& blk : d.blocks) {
        if ((int)blk.size() != d.k) cert.violations.push_back("block of wrong size");
        for (int x : blk) through[x]++;
        for (size_t i = 0; i < blk.size(); ++i)
            for (size_t j = i + 1; j < blk.size(); ++j) {
                auto& s = pairs.at(blk[i], blk[j]);
                if (s) cert.violations.push_back("pair covered twice");
                s = 1;
            }
    }
    for (int a = 0; a < d.v; ++a) {
        if (through[a] != r) cert.violations.push_back("replication count != (v-1)/(k-1)");
        for (int c = a + 1; c < d.v; ++c)
            if (!pairs.at(a, c)) cert.violations.push_back("pair uncovered");
    }
    if (!d.resolution.empty()) {
        if ((long long)d.resolution.size() != r)
            cert.violations.push_back("resolvable BIBD must have (v-1)/(k-1) classes");
        std::vector<char> used(d.blocks.size(), 0);
        for (const auto& cls : d.resolution) {
            std::set<int> covered;
            for (int bi : cls) {
                used[bi] = 1;
                covered.insert(d.blocks[bi].begin(), d.blocks[bi].end());
            }
            if ((int)covered.size() != d.v || cls.size() * d.k != covered.size())
                cert.violations.push_back("resolution class is not a parallel class");
        }
        if (std::count(used.begin(), used.end(), 1) != (long)d.blocks.size())
            cert.violations.push_back("resolution does not cover all blocks");
    }
    cert.valid = cert.violations.empty();
    return cert;
}

Certificate verify_urd(const UrdDesign& d) {
    Certificate cert;
    if (d.class_sizes.size() != d.classes.size()) {
        cert.violations.push_back("class size list does not match class count");
        return cert;
    }
    PairMap pairs(d.v);
    for (size_t c = 0; c < d.classes.size(); ++c) {
        std::set<int> covered;
        size_t npts = 0;
        for (const auto& b : d.classes[c]) {
            if ((int)b.size() != d.class_sizes[c])
                cert.violations.push_back("class " + std::to_string(c) +
                                          " block of non-uniform size");
            if (!points_in_range({b}, d.v)) {
                cert.violations.push_back("point label out of range");
                return cert;
            }
            covered.insert(b.begin(), b.end());
            npts += b.size();
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j) {
                    auto& s = pairs.at(b[i], b[j]);
                    if (s) cert.violations.push_back("pair covered twice");
                    s = 1;
                }
        }
        if ((int)covered.size() != d.v || npts != covered.size())
            cert.violations.push_back("class " + std::to_string(c) + " is not parallel");
    }
    cert.valid = cert.violations.empty();
    return cert;
}

GroupedDesign td_from_mols(const MolsSet& m) {
    int n = m.n;
    int g = (int)m.squares.size();
    for (const auto& s : m.squares)
        if (s.n != n) throw std::invalid_argument("td_from_mols: inconsistent orders");
    GroupedDesign td;
    td.k = g + 2;
    td.v = td.k * n;
    for (int j = 0; j < td.k; ++j) {
        Block grp(n);
        for (int p = 0; p < n; ++p) grp[p] = j * n + p;
        td.groups.push_back(grp);
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Block b;
            b.push_back(r);
            b.push_back(n + c);
            for (int s = 0; s < g; ++s) b.push_back((s + 2) * n + m.squares[s].cells[r][c]);
            td.blocks.push_back(b);
        }
    return td;
}

GroupedDesign rtd_from_td(const GroupedDesign& td) {
    if (td.groups.empty()) throw std::invalid_argument("rtd_from_td: no groups");
    int n = (int)td.groups[0].size();
    const Block& removed = td.groups.back();
    std::map<int, int> class_of;  // removed point -> class index
    for (int i = 0; i < n; ++i) class_of[removed[i]] = i;

    GroupedDesign rtd;
    rtd.k = td.k - 1;
    rtd.v = td.v - n;
    // Relabel to keep the flattened group-major numbering contiguous.
    std::vector<int> relabel(td.v, -1);
    int next = 0;
    for (size_t gi = 0; gi + 1 < td.groups.size(); ++gi) {
        Block grp;
        for (int x : td.groups[gi]) {
            relabel[x] = next;
            grp.push_back(next++);
        }
        rtd.groups.push_back(grp);
    }
    rtd.resolution.assign(n, {});
    for (const auto& b : td.blocks) {
        Block nb;
        int cls = -1;
        for (int x : b) {
            auto it = class_of.find(x);
            if (it != class_of.end())
                cls = it->second;
            else
                nb.push_back(relabel[x]);
        }
        if (cls < 0 || (int)nb.size() != rtd.k)
            throw std::invalid_argument("rtd_from_td: input is not a transversal design");
        std::sort(nb.begin(), nb.end());
        rtd.resolution[cls].push_back((int)rtd.blocks.size());
        rtd.blocks.push_back(nb);
    }
    return rtd;
}

Allocation allocation_from_design(const GroupedDesign& d) {
    if (d.resolution.empty())
        throw std::invalid_argument("allocation_from_design: design has no resolution");
    Allocation a;
    a.v = d.v;
    for (const auto& cls : d.resolution) {
        Round r;
        for (int bi : cls) r.push_back(d.blocks[bi]);
        a.rounds.push_back(r);
    }
    a.cliques = d.groups;
    refresh_shape(a);
    a.canonicalize();
    return a;
}

Allocation allocation_from_design(const BibdDesign& d) {
    if (d.resolution.empty())
        throw std::invalid_argument("allocation_from_design: design has no resolution");
    Allocation a;
    a.v = d.v;
    for (const auto& cls : d.resolution) {
        Round r;
        for (int bi : cls) r.push_back(d.blocks[bi]);
        a.rounds.push_back(r);
    }
    refresh_shape(a);
    a.canonicalize();
    return a;
}

Allocation allocation_from_design(const UrdDesign& d, int selected_size) {
    Allocation a;
    a.v = d.v;
    for (size_t c = 0; c < d.classes.size(); ++c) {
        if (d.class_sizes[c] == selected_size)
            a.rounds.push_back(d.classes[c]);
        else
            for (const auto& b : d.classes[c]) a.cliques.push_back(b);
    }
    if (a.rounds.empty())
        throw std::invalid_argument("allocation_from_design: no class of the selected size");
    refresh_shape(a);
    a.canonicalize();
    return a;
}

ItdRounds rounds_from_itd(const GroupedDesign& itd) {
    if (itd.groups.empty()) throw std::invalid_argument("rounds_from_itd: no groups");
    const Block& removed = itd.groups.back();
    std::set<int> hole(itd.hole.begin(), itd.hole.end());
    std::set<int> removed_set(removed.begin(), removed.end());

    // Compact relabeling of the surviving points.
    std::vector<int> relabel(itd.v, -1);
    int next = 0;
    for (size_t gi = 0; gi + 1 < itd.groups.size(); ++gi)
        for (int x : itd.groups[gi]) relabel[x] = next++;

    ItdRounds out;
    std::map<int, Round> classes;
    for (const auto& b : itd.blocks) {
        int rem = -1;
        Block nb;
        for (int x : b) {
            if (removed_set.count(x))
                rem = x;
            else
                nb.push_back(relabel[x]);
        }
        if (rem < 0) throw std::invalid_argument("rounds_from_itd: block misses the last group");
        std::sort(nb.begin(), nb.end());
        classes[rem].push_back(nb);
    }
    for (int p : removed) {
        Round cls = classes.count(p) ? classes[p] : Round{};
        if (hole.count(p))
            out.partial.push_back(cls);
        else
            out.complete.push_back(cls);
    }
    return out;
}

OrthArray td_to_oa(const GroupedDesign& td) {
    OrthArray oa;
    oa.k = (int)td.groups.size();
    oa.s = oa.k ? (int)td.groups[0].size() : 0;
    std::vector<int> group_of(td.v, -1), pos(td.v, -1);
    for (size_t gi = 0; gi < td.groups.size(); ++gi)
        for (size_t p = 0; p < td.groups[gi].size(); ++p) {
            group_of[td.groups[gi][p]] = (int)gi;
            pos[td.groups[gi][p]] = (int)p;
        }
    oa.cells.assign(oa.k, std::vector<int>(td.blocks.size()));
    for (size_t c = 0; c < td.blocks.size(); ++c)
        for (int x : td.blocks[c]) oa.cells[group_of[x]][c] = pos[x];
    return oa;
}

GroupedDesign oa_to_td(const OrthArray& oa) {
    GroupedDesign td;
    td.k = oa.k;
    td.v = oa.k * oa.s;
    for (int i = 0; i < oa.k; ++i) {
        Block g(oa.s);
        for (int x = 0; x < oa.s; ++x) g[x] = i * oa.s + x;
        td.groups.push_back(g);
    }
    size_t cols = (size_t)oa.s * oa.s;
    for (size_t c = 0; c < cols; ++c) {
        Block b;
        for (int i = 0; i < oa.k; ++i) b.push_back(i * oa.s + oa.cells[i][c]);
        td.blocks.push_back(b);
    }
    return td;
}

namespace {

struct DfSearch {
    const Field& f;
    int q, k, t;
    std::vector<char> diff_used;   // field elements already realized
    std::vector<char> point_used;  // disjointness across blocks
    std::vector<Block> blocks;

    DfSearch(const Field& f_, int k_, int t_)
        : f(f_), q((int)f_.q()), k(k_), t(t_), diff_used(q, 0), point_used(q, 0) {}

    bool place(int bi, Block& cur, int minval) {
        if ((int)cur.size() == k) {
            blocks.push_back(cur);
            if (bi + 1 == t) return true;
            Block next;
            if (extend_block(bi + 1, next)) return true;
            blocks.pop_back();
            return false;
        }
        for (int x = minval; x < q; ++x) {
            if (point_used[x]) continue;
            std::vector<int> newdiffs;
            bool ok = true;
            for (int y : cur) {
                int d1 = f.sub(x, y), d2 = f.sub(y, x);
                if (diff_used[d1] || diff_used[d2] || d1 == d2) {
                    ok = false;
                    break;
                }
                newdiffs.push_back(d1);
                newdiffs.push_back(d2);
            }
            if (ok) {
                // d1 == d2 can only happen in characteristic 2; q is odd here.
                std::set<int> uniq(newdiffs.begin(), newdiffs.end());
                if (uniq.size() != newdiffs.size()) ok = false;
            }
            if (!ok) continue;
            for (int d : newdiffs) diff_used[d] = 1;
            point_used[x] = 1;
            cur.push_back(x);
            if (place(bi, cur, x + 1)) return true;
            cur.pop_back();
            point_used[x] = 0;
            for (int d : newdiffs) diff_used[d] = 0;
        }
        return false;
    }

    bool extend_block(int bi, Block& cur) { return place(bi, cur, 0); }
};

}  // namespace

std::optional<std::vector<Block>> search_disjoint_df(int q, int k) {
    if (q % 2 == 0 || !is_prime_power_order(q))
        throw std::invalid_argument("search_disjoint_df: q must be an odd prime power");
    if ((q - 1) % (k * (k - 1)) != 0)
        throw std::invalid_argument("search_disjoint_df: k(k-1) must divide q-1");
    if (q > 200) throw std::invalid_argument("search_disjoint_df: q capped at 200");
    int t = (q - 1) / (k * (k - 1));
    auto [p, e] = prime_power_split(q);
    Field f(p, e);
    DfSearch s(f, k, t);
    Block first;
    if (s.extend_block(0, first)) return s.blocks;
    return std::nullopt;
}

std::optional<BibdDesign> rbibd_from_disjoint_df(int q, int k, const std::vector<Block>& family) {
    // Preconditions: family must really be a disjoint difference family.
    std::set<int> used;
    for (const auto& b : family) {
        if ((int)b.size() != k) throw std::invalid_argument("rbibd_from_disjoint_df: bad block size");
        for (int x : b) {
            if (used.count(x)) throw std::invalid_argument("rbibd_from_disjoint_df: blocks overlap");
            used.insert(x);
        }
    }
    auto [p, e] = prime_power_split(q);
    Field f(p, e);

    // Development attempt: points GF(q) x {0..k-1}; for each field element g
    // one candidate class holding every translated base block at every level
    // plus vertical blocks on the uncovered columns. Classes indexed by g.
    BibdDesign d;
    d.v = k * q;
    d.k = k;
    auto pt = [&](int x, int level) { return level * q + x; };
    std::map<Block, int> block_ids;
    auto add_block = [&](Block b) {
        std::sort(b.begin(), b.end());
        auto [it, fresh] = block_ids.try_emplace(b, (int)d.blocks.size());
        if (fresh) d.blocks.push_back(b);
        return it->second;
    };

    for (int g = 0; g < q; ++g) {
        std::vector<int> cls;
        std::vector<char> covered(q, 0);
        for (const auto& base : family)
            for (int level = 0; level < k; ++level) {
                Block b;
                for (int x : base) {
                    int xx = f.add(x, g);
                    b.push_back(pt(xx, level));
                    if (level == 0) covered[xx] = 1;
                }
                cls.push_back(add_block(std::move(b)));
            }
        for (int x = 0; x < q; ++x) {
            if (covered[x]) continue;
            Block b;
            for (int level = 0; level < k; ++level) b.push_back(pt(x, level));
            cls.push_back(add_block(std::move(b)));
        }
        d.resolution.push_back(cls);
    }
    if (verify_bibd(d).valid) return d;
    return std::nullopt;
}

BibdDesign rbibd_affine(int q) {
    MolsSet mols = build_mols(q);
    if ((int)mols.squares.size() != q - 1)
        throw std::invalid_argument("rbibd_affine: order must be a prime power");
    GroupedDesign rtd = rtd_from_td(td_from_mols(mols));
    BibdDesign d;
    d.v = q * q;
    d.k = q;
    d.blocks = rtd.blocks;
    d.resolution = rtd.resolution;
    std::vector<int> last_class;
    for (const auto& g : rtd.groups) {
        last_class.push_back((int)d.blocks.size());
        d.blocks.push_back(g);
    }
    d.resolution.push_back(last_class);
    return d;
}

}  // namespace sgp
