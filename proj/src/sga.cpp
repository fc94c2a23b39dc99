#include "sgp/sga.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sgp {

std::pair<std::pair<int, int>, std::pair<int, int>> superior_inferior(const SgaParams& p) {
    if (!p.consistent()) throw std::invalid_argument("superior_inferior: inconsistent parameters");
    return {{p.v + p.m1, p.k2}, {p.v - p.m2, p.k1}};
}

namespace {

void erase_points(Allocation& a, const std::set<int>& gone) {
    for (auto& round : a.rounds)
        for (auto& b : round)
            b.erase(std::remove_if(b.begin(), b.end(), [&](int x) { return gone.count(x) > 0; }),
                    b.end());
    for (auto& c : a.cliques)
        c.erase(std::remove_if(c.begin(), c.end(), [&](int x) { return gone.count(x) > 0; }),
                c.end());
    a.cliques.erase(std::remove_if(a.cliques.begin(), a.cliques.end(),
                                   [](const Block& c) { return c.size() < 2; }),
                    a.cliques.end());
    a.v -= (int)gone.size();
    refresh_shape(a);
    a.canonicalize();
}

}  // namespace

Allocation remove_points(const Allocation& a, const Block& pts) {
    if (pts.empty()) return a;
    std::set<int> gone(pts.begin(), pts.end());
    std::vector<int> labels = a.labels();
    std::set<int> label_set(labels.begin(), labels.end());
    for (int p : pts)
        if (!label_set.count(p))
            throw std::invalid_argument("remove_points: unknown point " + std::to_string(p));
    // The removed set must be pairwise never co-blocked.
    for (const auto& round : a.rounds)
        for (const auto& b : round) {
            int hits = 0;
            for (int x : b) hits += gone.count(x);
            if (hits > 1)
                throw std::invalid_argument("remove_points: two removed points share a block");
        }
    if (!a.cliques.empty()) {
        bool inside = false;
        for (const auto& c : a.cliques) {
            std::set<int> cs(c.begin(), c.end());
            if (std::all_of(pts.begin(), pts.end(), [&](int p) { return cs.count(p) > 0; }))
                inside = true;
        }
        if (!inside)
            throw std::invalid_argument("remove_points: points are not inside a declared clique");
    }
    Allocation out = a;
    out.columns.clear();
    erase_points(out, gone);
    return out;
}

Allocation renumber(const Allocation& a) {
    std::vector<int> labels = a.labels();
    std::map<int, int> to;
    for (size_t i = 0; i < labels.size(); ++i) to[labels[i]] = (int)i;
    Allocation out = a;
    for (auto& round : out.rounds)
        for (auto& b : round)
            for (int& x : b) x = to[x];
    for (auto& c : out.cliques)
        for (int& x : c) x = to[x];
    out.canonicalize();
    return out;
}

Allocation add_points(const Allocation& a, int m2) {
    if (m2 < 0 || m2 > (int)a.columns.size())
        throw std::invalid_argument("add_points: not enough parallel columns");
    Allocation out = a;
    int next_label = a.labels().empty() ? 0 : a.labels().back() + 1;
    next_label = std::max(next_label, a.v);
    for (int i = 0; i < m2; ++i) {
        const ColumnRef& col = a.columns[i];
        if ((int)col.size() != (int)a.rounds.size())
            throw std::invalid_argument("add_points: column does not meet every round");
        for (auto [r, b] : col) out.rounds[r][b].push_back(next_label);
        ++next_label;
        ++out.v;
    }
    out.columns.erase(out.columns.begin(), out.columns.begin() + m2);
    out.cliques.clear();
    refresh_shape(out);
    out.canonicalize();
    return out;
}

Allocation remove_single_point(const Allocation& a) {
    if (a.rounds.empty()) throw std::invalid_argument("remove_single_point: empty allocation");
    const Block& last_block = a.rounds.back().back();
    int victim = last_block.back();
    Allocation out = a;
    out.columns.clear();
    erase_points(out, {victim});
    return out;
}

Allocation remove_final_block_points(const Allocation& a, int t) {
    if (a.rounds.empty()) throw std::invalid_argument("remove_final_block_points: empty allocation");
    const Block& last_block = a.rounds.back().back();
    if (t < 1 || t > (int)last_block.size())
        throw std::invalid_argument("remove_final_block_points: bad point count");
    std::set<int> gone(last_block.end() - t, last_block.end());
    Allocation out = a;
    out.rounds.pop_back();
    out.columns.clear();
    erase_points(out, gone);
    return out;
}

Allocation remove_policy(const Allocation& a, int m1) {
    if (m1 <= 0) return a;
    int k = a.sizes.empty() ? 0 : a.sizes.back();
    if (m1 == 1) return remove_single_point(a);
    if (m1 <= k) return remove_final_block_points(a, m1);
    // Fall back to clique removal; callers holding a D+G(t) form revert to
    // the base design before reaching this case.
    if (a.cliques.empty() || (int)a.cliques[0].size() < m1)
        throw std::invalid_argument("remove_policy: no clique large enough");
    Block pts(a.cliques[0].begin(), a.cliques[0].begin() + m1);
    return remove_points(a, pts);
}

}  // namespace sgp
